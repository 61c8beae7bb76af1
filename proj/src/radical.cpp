#include "dunkl/radical.hpp"

#include <ostream>
#include <stdexcept>

namespace dunkl {

namespace {

// Product of basis elements a and b is factor(a,b) * basis[index(a,b)].
// rad bits xor; a shared sqrt2 contributes 2, a shared sqrt3 contributes 3,
// and i*i contributes -1.
struct BasisProduct {
    int index;
    long factor;
};

BasisProduct basis_mul(int a, int b) {
    int ra = a & 3, rb = b & 3;
    int fa = a >> 2, fb = b >> 2;
    long factor = 1;
    int shared = ra & rb;
    if (shared & 1) factor *= 2;
    if (shared & 2) factor *= 3;
    if (fa & fb) factor = -factor;
    return {((fa ^ fb) << 2) | (ra ^ rb), factor};
}

const char* basis_name(int index) {
    static const char* names[8] = {"1",      "sqrt2",   "sqrt3",   "sqrt6",
                                   "i",      "i*sqrt2", "i*sqrt3", "i*sqrt6"};
    return names[index];
}

} // namespace

RadicalComplex RadicalComplex::unit(int index, Rational coeff) {
    RadicalComplex v;
    v.c_[static_cast<std::size_t>(index)] = std::move(coeff);
    return v;
}

RadicalComplex RadicalComplex::omega() {
    RadicalComplex v;
    v.c_[0] = Rational(-1, 2);
    v.c_[6] = Rational(1, 2);
    return v;
}

bool RadicalComplex::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool RadicalComplex::is_one() const {
    if (!c_[0].is_one()) return false;
    for (int k = 1; k < 8; ++k)
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return false;
    return true;
}

bool RadicalComplex::is_rational() const {
    for (int k = 1; k < 8; ++k)
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return false;
    return true;
}

bool RadicalComplex::is_real() const {
    for (int k = 4; k < 8; ++k)
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return false;
    return true;
}

RadicalComplex& RadicalComplex::operator+=(const RadicalComplex& o) {
    for (int k = 0; k < 8; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

RadicalComplex& RadicalComplex::operator-=(const RadicalComplex& o) {
    for (int k = 0; k < 8; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
    return *this;
}

RadicalComplex operator*(const RadicalComplex& a, const RadicalComplex& b) {
    RadicalComplex out;
    for (int p = 0; p < 8; ++p) {
        const Rational& ca = a.c_[static_cast<std::size_t>(p)];
        if (ca.is_zero()) continue;
        for (int q = 0; q < 8; ++q) {
            const Rational& cb = b.c_[static_cast<std::size_t>(q)];
            if (cb.is_zero()) continue;
            auto [index, factor] = basis_mul(p, q);
            out.c_[static_cast<std::size_t>(index)] += ca * cb * Rational(factor);
        }
    }
    return out;
}

RadicalComplex operator-(const RadicalComplex& a) {
    RadicalComplex out;
    for (int k = 0; k < 8; ++k) out.c_[static_cast<std::size_t>(k)] = -a.c_[static_cast<std::size_t>(k)];
    return out;
}

RadicalComplex RadicalComplex::conj() const {
    RadicalComplex out = *this;
    for (int k = 4; k < 8; ++k)
        out.c_[static_cast<std::size_t>(k)] = -out.c_[static_cast<std::size_t>(k)];
    return out;
}

RadicalComplex RadicalComplex::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero field element");
    // Solve L x = e0 where L is left multiplication by *this in the basis.
    Rational m[8][9];
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q <= 8; ++q) m[p][q] = Rational(0);
    for (int q = 0; q < 8; ++q) {
        for (int p = 0; p < 8; ++p) {
            const Rational& cp = c_[static_cast<std::size_t>(p)];
            if (cp.is_zero()) continue;
            auto [index, factor] = basis_mul(p, q);
            m[index][q] += cp * Rational(factor);
        }
    }
    m[0][8] = Rational(1);
    for (int col = 0; col < 8; ++col) {
        int pivot = -1;
        for (int row = col; row < 8; ++row) {
            if (!m[row][col].is_zero()) { pivot = row; break; }
        }
        if (pivot < 0) throw std::logic_error("singular multiplication table");
        if (pivot != col)
            for (int q = col; q <= 8; ++q) std::swap(m[col][q], m[pivot][q]);
        Rational inv = m[col][col].inverse();
        for (int q = col; q <= 8; ++q) m[col][q] *= inv;
        for (int row = 0; row < 8; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational f = m[row][col];
            for (int q = col; q <= 8; ++q) m[row][q] -= f * m[col][q];
        }
    }
    RadicalComplex out;
    for (int k = 0; k < 8; ++k) out.c_[static_cast<std::size_t>(k)] = m[k][8];
    return out;
}

RadicalComplex RadicalComplex::pow(unsigned e) const {
    RadicalComplex acc(1);
    RadicalComplex base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string RadicalComplex::str() const {
    std::string out;
    for (int k = 0; k < 8; ++k) {
        const Rational& coeff = c_[static_cast<std::size_t>(k)];
        if (coeff.is_zero()) continue;
        Rational mag = coeff.abs();
        bool negative = coeff.sgn() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += basis_name(k);
        } else {
            out += mag.str();
            out += "*";
            out += basis_name(k);
        }
    }
    if (out.empty()) return "0";
    return out;
}

std::ostream& operator<<(std::ostream& os, const RadicalComplex& v) {
    return os << v.str();
}

std::optional<RadicalComplex> sqrt_rational(const Rational& r) {
    if (r.sgn() < 0) return std::nullopt;
    if (r.is_zero()) return RadicalComplex();
    // r = s * t^2 with s squarefree; representable iff s in {1, 2, 3, 6}.
    mpz_class n = r.numerator() * r.denominator();
    mpz_class s = 1;
    for (mpz_class d = 2; d * d <= n; ++d) {
        if (d > 1000000) return std::nullopt; // preset data is small in practice
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) {
            mpz_class q = n / d;
            if (mpz_divisible_p(q.get_mpz_t(), d.get_mpz_t()) != 0) {
                n = q / d;
            } else {
                n = q;
                s *= d;
            }
        }
    }
    s *= n; // leftover prime
    int index;
    if (s == 1) index = 0;
    else if (s == 2) index = 1;
    else if (s == 3) index = 2;
    else if (s == 6) index = 3;
    else return std::nullopt;
    // sqrt(r / s) is rational: r/s has square numerator and denominator.
    Rational rs = r / Rational(mpq_class(s));
    mpz_class num = rs.numerator(), den = rs.denominator();
    mpz_class sqn, sqd;
    mpz_sqrt(sqn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sqd.get_mpz_t(), den.get_mpz_t());
    if (sqn * sqn != num || sqd * sqd != den) return std::nullopt;
    return RadicalComplex::unit(index, Rational(mpq_class(mpq_class(sqn) / mpq_class(sqd))));
}

} // namespace dunkl
