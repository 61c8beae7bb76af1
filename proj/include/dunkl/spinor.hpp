#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "dunkl/clifford.hpp"
#include "dunkl/poly.hpp"

namespace dunkl {

// Element of the module of spinor-valued polynomials: one polynomial
// component per basis blade, indexed by the blade bitmask.
class SpinorPolynomial {
public:
    SpinorPolynomial() = default;

    static SpinorPolynomial from_poly(const XPolynomial& p, Blade b = 0);
    static SpinorPolynomial basis(const Monomial& m, Blade b);

    const XPolynomial& component(Blade b) const { return comp_[b]; }
    void set_component(Blade b, XPolynomial p) { comp_[b] = std::move(p); }

    bool is_zero() const;
    int degree() const; // max component degree, -1 for zero
    Parity parity() const; // blade parity; zero counts as even

    SpinorPolynomial& operator+=(const SpinorPolynomial& o);
    SpinorPolynomial& operator-=(const SpinorPolynomial& o);
    friend SpinorPolynomial operator+(SpinorPolynomial a, const SpinorPolynomial& b) {
        a += b;
        return a;
    }
    friend SpinorPolynomial operator-(SpinorPolynomial a, const SpinorPolynomial& b) {
        a -= b;
        return a;
    }
    friend SpinorPolynomial operator-(const SpinorPolynomial& a);

    SpinorPolynomial scaled(const ParamScalar& c) const;
    SpinorPolynomial scaled(const RadicalComplex& c) const;

    SpinorPolynomial partial(int i) const;
    SpinorPolynomial times_variable(int i) const;
    SpinorPolynomial apply_matrix(const Matrix3& a) const;
    // Left multiplication by a Clifford element.
    SpinorPolynomial clifford_left(const CliffordElement& c, Signature sig) const;
    SpinorPolynomial homogeneous_component(int d) const;
    SpinorPolynomial instantiate(const Rational& k1, const Rational& k2) const;

    friend bool operator==(const SpinorPolynomial& a, const SpinorPolynomial& b) {
        return a.comp_ == b.comp_;
    }
    friend bool operator!=(const SpinorPolynomial& a, const SpinorPolynomial& b) {
        return !(a == b);
    }

    std::string str() const; // "0" for zero
    friend std::ostream& operator<<(std::ostream& os, const SpinorPolynomial& v);

private:
    std::array<XPolynomial, 8> comp_{};
};

} // namespace dunkl
