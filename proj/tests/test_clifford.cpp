#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "dunkl/clifford.hpp"

using namespace dunkl;

namespace {

// Reference product: concatenate generator sequences, sort by adjacent
// transpositions tracking the sign, contract equal neighbours to epsilon.
std::pair<int, Blade> sequence_product(Blade a, Blade b, int eps) {
    std::vector<int> gens;
    for (int i = 0; i < 3; ++i)
        if (a & (1u << i)) gens.push_back(i);
    for (int i = 0; i < 3; ++i)
        if (b & (1u << i)) gens.push_back(i);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
            if (gens[k] > gens[k + 1]) {
                std::swap(gens[k], gens[k + 1]);
                sign = -sign;
                changed = true;
            }
        }
    }
    std::vector<int> reduced;
    for (std::size_t k = 0; k < gens.size();) {
        if (k + 1 < gens.size() && gens[k] == gens[k + 1]) {
            sign *= eps;
            k += 2;
        } else {
            reduced.push_back(gens[k]);
            ++k;
        }
    }
    Blade out = 0;
    for (int g : reduced) out = static_cast<Blade>(out | (1u << g));
    return {sign, out};
}

CliffordElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> pos(0, 7);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    CliffordElement out;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        out.add_term(blade_order[static_cast<std::size_t>(pos(rng))],
                     RadicalComplex(Rational(num(rng), den(rng))));
    return out;
}

const CliffordElement e1 = CliffordElement::generator(0);
const CliffordElement e2 = CliffordElement::generator(1);
const CliffordElement e3 = CliffordElement::generator(2);

} // namespace

TEST_CASE("blade product matches the sequence oracle") {
    for (int eps : {1, -1}) {
        Signature sig{eps};
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned b = 0; b < 8; ++b) {
                auto [sign, blade] = sequence_product(static_cast<Blade>(a),
                                                      static_cast<Blade>(b), eps);
                BladeProduct got = blade_mul(static_cast<Blade>(a), static_cast<Blade>(b), sig);
                CHECK(got.blade == blade);
                CHECK(got.sign == sign);
            }
    }
}

TEST_CASE("blade product is associative") {
    for (int eps : {1, -1}) {
        Signature sig{eps};
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned b = 0; b < 8; ++b)
                for (unsigned c = 0; c < 8; ++c) {
                    CliffordElement ea = CliffordElement::blade(static_cast<Blade>(a));
                    CliffordElement eb = CliffordElement::blade(static_cast<Blade>(b));
                    CliffordElement ec = CliffordElement::blade(static_cast<Blade>(c));
                    CHECK(ea.mul(eb, sig).mul(ec, sig) == ea.mul(eb.mul(ec, sig), sig));
                }
    }
}

TEST_CASE("generator relations") {
    for (int eps : {1, -1}) {
        Signature sig{eps};
        for (int i = 0; i < 3; ++i) {
            CliffordElement ei = CliffordElement::generator(i);
            CHECK(ei.mul(ei, sig) == CliffordElement(RadicalComplex(eps)));
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                CliffordElement ej = CliffordElement::generator(j);
                CHECK(ei.mul(ej, sig) + ej.mul(ei, sig) == CliffordElement());
            }
        }
    }
}

TEST_CASE("squares of root images") {
    for (int eps : {1, -1}) {
        Signature sig{eps};
        // (e2 - e3)^2 = 2 epsilon and (e1 - 2 e2 + e3)^2 = 6 epsilon.
        CliffordElement short_root = e2 - e3;
        CHECK(short_root.mul(short_root, sig) == CliffordElement(RadicalComplex(2L * eps)));
        CliffordElement long_root = e1 - e2.scaled(RadicalComplex(2)) + e3;
        CHECK(long_root.mul(long_root, sig) == CliffordElement(RadicalComplex(6L * eps)));
    }
}

TEST_CASE("pseudoscalar is central") {
    CliffordElement pseudo = CliffordElement::blade(7);
    for (int eps : {1, -1}) {
        Signature sig{eps};
        for (unsigned b = 0; b < 8; ++b) {
            CliffordElement eb = CliffordElement::blade(static_cast<Blade>(b));
            CHECK(pseudo.mul(eb, sig) == eb.mul(pseudo, sig));
        }
        long square = -eps * eps * eps;
        CHECK(pseudo.mul(pseudo, sig) == CliffordElement(RadicalComplex(square)));
    }
}

TEST_CASE("bivector combination squares to -3") {
    // (e1e2 + e2e3 + e3e1)^2 = -3 independently of the generator square.
    CliffordElement gamma = CliffordElement::blade(3) + CliffordElement::blade(6) -
                            CliffordElement::blade(5);
    for (int eps : {1, -1}) {
        Signature sig{eps};
        CHECK(gamma.mul(gamma, sig) == CliffordElement(RadicalComplex(-3)));
    }
}

TEST_CASE("element algebra on random triples") {
    std::mt19937_64 rng(424242u);
    for (int eps : {1, -1}) {
        Signature sig{eps};
        for (int t = 0; t < 150; ++t) {
            CliffordElement a = random_element(rng);
            CliffordElement b = random_element(rng);
            CliffordElement c = random_element(rng);
            CHECK(a.mul(b, sig).mul(c, sig) == a.mul(b.mul(c, sig), sig));
            CHECK(a.mul(b + c, sig) == a.mul(b, sig) + a.mul(c, sig));
            CliffordElement s(RadicalComplex(Rational(3, 2)));
            CHECK(a.mul(s, sig) == s.mul(a, sig));
        }
    }
}

TEST_CASE("parity classification") {
    CHECK(CliffordElement().parity() == Parity::even);
    CHECK(CliffordElement(1L).parity() == Parity::even);
    CHECK(e1.parity() == Parity::odd);
    CHECK(CliffordElement::blade(7).parity() == Parity::odd);
    CHECK((CliffordElement::blade(3) + CliffordElement(1L)).parity() == Parity::even);
    CHECK((e1 + CliffordElement(1L)).parity() == Parity::mixed);
}

TEST_CASE("rendering") {
    CHECK(CliffordElement().str() == "0");
    CHECK((CliffordElement(1L) - CliffordElement::blade(3)).str() == "1 - e12");
    CHECK(CliffordElement::blade(7).str() == "e123");
    CHECK(e1.scaled(RadicalComplex(Rational(-1, 2))).str() == "-1/2*e1");
    CHECK((e2 - e3).scaled(RadicalComplex::sqrt2() * RadicalComplex(Rational(1, 2))).str() ==
          "1/2*sqrt2*e2 - 1/2*sqrt2*e3");
    // Blades are listed by grade.
    CliffordElement mix = CliffordElement::blade(7) + e3 + CliffordElement(1L);
    CHECK(mix.str() == "1 + e3 + e123");
}

TEST_CASE("powers") {
    Signature plus{1};
    CliffordElement r = e2 - e3;
    CHECK(r.pow(0, plus) == CliffordElement(1L));
    CHECK(r.pow(1, plus) == r);
    CHECK(r.pow(2, plus) == CliffordElement(2L));
    CHECK(r.pow(4, plus) == CliffordElement(4L));
}
