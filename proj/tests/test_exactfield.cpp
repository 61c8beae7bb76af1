#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dunkl/param.hpp"
#include "dunkl/radical.hpp"
#include "dunkl/rational.hpp"

using namespace dunkl;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

RadicalComplex random_radical(std::mt19937_64& rng, int max_atoms = 3) {
    std::uniform_int_distribution<int> natoms(0, max_atoms);
    std::uniform_int_distribution<int> index(0, 7);
    RadicalComplex out;
    int n = natoms(rng);
    for (int k = 0; k < n; ++k)
        out += RadicalComplex::unit(index(rng), random_rational(rng));
    return out;
}

ParamScalar random_param(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<unsigned> exp(0, 2);
    ParamScalar out;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        out += ParamScalar::monomial({exp(rng), exp(rng)}, random_radical(rng, 2));
    return out;
}

} // namespace

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
    CHECK((Rational(1, 3) / Rational(3)) == Rational(1, 9));
    CHECK(Rational(-3, 7).str() == "-3/7");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(7, 2).pow(3) == Rational(343, 8));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(0).inverse(), std::invalid_argument);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("radical basis products") {
    RadicalComplex s2 = RadicalComplex::sqrt2();
    RadicalComplex s3 = RadicalComplex::sqrt3();
    RadicalComplex s6 = RadicalComplex::sqrt6();
    RadicalComplex i = RadicalComplex::i();
    CHECK(s2 * s2 == RadicalComplex(2));
    CHECK(s3 * s3 == RadicalComplex(3));
    CHECK(s6 * s6 == RadicalComplex(6));
    CHECK(s2 * s3 == s6);
    CHECK(s2 * s6 == RadicalComplex(2) * s3);
    CHECK(s3 * s6 == RadicalComplex(3) * s2);
    CHECK(i * i == RadicalComplex(-1));
    CHECK((i * s2) * s3 == i * s6);
    CHECK((i * s6) * (i * s6) == RadicalComplex(-6));
    CHECK((i * s2) * (i * s3) == -s6);
}

TEST_CASE("radical field axioms on random triples") {
    std::mt19937_64 rng(20260822u);
    int inverses = 0;
    for (int t = 0; t < 1000; ++t) {
        RadicalComplex a = random_radical(rng);
        RadicalComplex b = random_radical(rng);
        RadicalComplex c = random_radical(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RadicalComplex());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RadicalComplex(1));
            ++inverses;
        }
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
    CHECK(inverses > 500);
}

TEST_CASE("cube root of unity identities") {
    RadicalComplex w = RadicalComplex::omega();
    RadicalComplex one(1);
    CHECK(w * w * w == one);
    CHECK(w * w + w + one == RadicalComplex());
    CHECK(w.conj() == w * w);
    // omega - omega^2 = i*sqrt3
    CHECK(w - w * w == RadicalComplex::i() * RadicalComplex::sqrt3());
    // 1 - omega = (3 - i*sqrt3)/2
    RadicalComplex expect = (RadicalComplex(3) - RadicalComplex::i() * RadicalComplex::sqrt3()) *
                            RadicalComplex(Rational(1, 2));
    CHECK(one - w == expect);
}

TEST_CASE("radical inverse of a dense element") {
    RadicalComplex x = RadicalComplex(1) + RadicalComplex::sqrt2() + RadicalComplex::sqrt3() +
                       RadicalComplex::i() * RadicalComplex(Rational(2, 5));
    CHECK(x * x.inverse() == RadicalComplex(1));
}

TEST_CASE("radical rendering") {
    CHECK(RadicalComplex().str() == "0");
    CHECK(RadicalComplex(Rational(-1, 2)).str() == "-1/2");
    CHECK(RadicalComplex::omega().str() == "-1/2 + 1/2*i*sqrt3");
    CHECK((RadicalComplex(2) * RadicalComplex::sqrt2()).str() == "2*sqrt2");
    CHECK((-RadicalComplex::sqrt6()).str() == "-sqrt6");
}

TEST_CASE("square roots of rationals inside the field") {
    CHECK(sqrt_rational(Rational(2)) == RadicalComplex::sqrt2());
    CHECK(sqrt_rational(Rational(6)) == RadicalComplex::sqrt6());
    CHECK(sqrt_rational(Rational(9, 4)) == RadicalComplex(Rational(3, 2)));
    CHECK(sqrt_rational(Rational(8)) == RadicalComplex(2) * RadicalComplex::sqrt2());
    CHECK(sqrt_rational(Rational(1, 6)) ==
          RadicalComplex::sqrt6() * RadicalComplex(Rational(1, 6)));
    CHECK(sqrt_rational(Rational(0)) == RadicalComplex());
    CHECK(!sqrt_rational(Rational(5)).has_value());
    CHECK(!sqrt_rational(Rational(-2)).has_value());
    std::mt19937_64 rng(7u);
    for (int t = 0; t < 200; ++t) {
        Rational r = random_rational(rng);
        auto root = sqrt_rational(r * r);
        REQUIRE(root.has_value());
        CHECK(*root == RadicalComplex(r.abs()));
    }
}

TEST_CASE("parameter scalar arithmetic and term order") {
    ParamScalar k1 = ParamScalar::kappa1();
    ParamScalar k2 = ParamScalar::kappa2();
    ParamScalar p = ParamScalar(1L) + k1.scaled(RadicalComplex(2)) + k2.scaled(RadicalComplex(2));
    CHECK(p.str() == "1 + 2*kappa1 + 2*kappa2");
    CHECK((k1 * k1 + k1 * k2 + k2 * k2).str() == "kappa1^2 + kappa1*kappa2 + kappa2^2");
    CHECK((k1 - k1).is_zero());
    CHECK((k1 * k2) == (k2 * k1));
    CHECK((p - p).str() == "0");
    ParamScalar w(RadicalComplex::omega());
    CHECK((w * w * w) == ParamScalar(1L));
}

TEST_CASE("parameter scalar rendering with radical coefficients") {
    ParamScalar k1 = ParamScalar::kappa1();
    ParamScalar t = k1.scaled(-(RadicalComplex::i() * RadicalComplex::sqrt3()));
    CHECK(t.str() == "-i*sqrt3*kappa1");
    ParamScalar u = k1.scaled(RadicalComplex(1) + RadicalComplex::sqrt2());
    CHECK(u.str() == "(1 + sqrt2)*kappa1");
    CHECK((ParamScalar(Rational(-1, 2)) + k1).str() == "-1/2 + kappa1");
}

TEST_CASE("instantiation is a ring homomorphism") {
    std::mt19937_64 rng(99u);
    for (int t = 0; t < 300; ++t) {
        ParamScalar p = random_param(rng);
        ParamScalar q = random_param(rng);
        Rational k1 = random_rational(rng);
        Rational k2 = random_rational(rng);
        CHECK((p + q).instantiate(k1, k2) == p.instantiate(k1, k2) + q.instantiate(k1, k2));
        CHECK((p * q).instantiate(k1, k2) == p.instantiate(k1, k2) * q.instantiate(k1, k2));
    }
    CHECK(ParamScalar::kappa1().instantiate(Rational(1, 2), Rational(1, 3)) ==
          RadicalComplex(Rational(1, 2)));
    CHECK(ParamScalar::kappa2().instantiate(Rational(1, 2), Rational(1, 3)) ==
          RadicalComplex(Rational(1, 3)));
}

TEST_CASE("constant extraction") {
    ParamScalar p = ParamScalar(Rational(3, 2));
    CHECK(p.is_constant());
    CHECK(p.as_radical() == RadicalComplex(Rational(3, 2)));
    ParamScalar q = ParamScalar::kappa1();
    CHECK(!q.is_constant());
    CHECK_THROWS_AS(q.as_radical(), std::invalid_argument);
    CHECK(q.constant_value() == RadicalComplex());
}
