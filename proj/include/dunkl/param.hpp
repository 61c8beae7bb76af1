#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "dunkl/radical.hpp"

namespace dunkl {

// Exponent pair (kappa1^a, kappa2^b).
struct KappaExp {
    unsigned a = 0;
    unsigned b = 0;
    unsigned total() const { return a + b; }
    friend bool operator==(const KappaExp& x, const KappaExp& y) { return x.a == y.a && x.b == y.b; }
};

// Total degree ascending, then kappa1 exponent descending.
struct KappaExpLess {
    bool operator()(const KappaExp& x, const KappaExp& y) const {
        if (x.total() != y.total()) return x.total() < y.total();
        return x.a > y.a;
    }
};

// Polynomial in the deformation parameters kappa1, kappa2 over Q(i, sqrt2, sqrt3).
// The zero map of terms represents zero; no stored coefficient is zero.
class ParamScalar {
public:
    using TermMap = std::map<KappaExp, RadicalComplex, KappaExpLess>;

    ParamScalar() = default;
    ParamScalar(const Rational& r) { add_term({0, 0}, RadicalComplex(r)); }
    ParamScalar(const RadicalComplex& v) { add_term({0, 0}, v); }
    ParamScalar(long n) { add_term({0, 0}, RadicalComplex(n)); }

    static ParamScalar kappa1() { return monomial({1, 0}, RadicalComplex(1)); }
    static ParamScalar kappa2() { return monomial({0, 1}, RadicalComplex(1)); }
    static ParamScalar monomial(KappaExp e, const RadicalComplex& coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Coefficient of kappa1^0 kappa2^0.
    RadicalComplex constant_value() const;
    // Requires is_constant(); throws std::invalid_argument otherwise.
    RadicalComplex as_radical() const;

    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    friend ParamScalar operator+(ParamScalar x, const ParamScalar& y) { x += y; return x; }
    friend ParamScalar operator-(ParamScalar x, const ParamScalar& y) { x -= y; return x; }
    friend ParamScalar operator*(const ParamScalar& x, const ParamScalar& y);
    ParamScalar& operator*=(const ParamScalar& o) { *this = *this * o; return *this; }
    friend ParamScalar operator-(const ParamScalar& x);

    ParamScalar scaled(const RadicalComplex& c) const;
    ParamScalar pow(unsigned e) const;

    // Substitute numeric values for kappa1 and kappa2.
    RadicalComplex instantiate(const Rational& k1, const Rational& k2) const;

    friend bool operator==(const ParamScalar& x, const ParamScalar& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const ParamScalar& x, const ParamScalar& y) { return !(x == y); }
    friend bool operator<(const ParamScalar& x, const ParamScalar& y);

    // Terms joined with +/-; multi-atom coefficients parenthesized,
    // e.g. "1 + 2*kappa1 + (1 + sqrt2)*kappa2^2". Zero renders as "0".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const ParamScalar& v);

private:
    void add_term(KappaExp e, const RadicalComplex& coeff);
    TermMap terms_;
};

// "kappa1^2*kappa2" style rendering; empty string for the unit exponent.
std::string kappa_exp_str(const KappaExp& e);

// Rendering of a scalar used as a factor in front of another factor string.
// When atomic, body holds the "*"-joined atoms without sign (empty for
// magnitude one); otherwise body holds the parenthesized full form.
struct FactorRender {
    bool negative = false;
    bool atomic = false;
    std::string body;
};
FactorRender render_coefficient(const ParamScalar& c);

} // namespace dunkl
