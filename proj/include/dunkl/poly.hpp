#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/matrix3.hpp"
#include "dunkl/param.hpp"

namespace dunkl {

// Monomial x1^e0 * x2^e1 * x3^e2.
struct Monomial {
    std::array<unsigned, 3> e{0, 0, 0};

    unsigned degree() const { return e[0] + e[1] + e[2]; }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const; // "1" for the empty monomial
};

// Degree ascending, then exponents lexicographically descending (x1 dominant).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e > b.e;
    }
};

std::vector<Monomial> monomials_of_degree(int d);
std::vector<Monomial> monomials_up_to(int max_degree);

// Polynomial in x1, x2, x3 with ParamScalar coefficients.
// No stored coefficient is zero; the empty map is the zero polynomial.
class XPolynomial {
public:
    using TermMap = std::map<Monomial, ParamScalar, MonomialLess>;

    XPolynomial() = default;

    static XPolynomial constant(const ParamScalar& c);
    static XPolynomial variable(int i); // i in 0..2
    static XPolynomial monomial_term(const Monomial& m, const ParamScalar& c);
    // Linear form form[0]*x1 + form[1]*x2 + form[2]*x3.
    static XPolynomial linear_form(const Vector3& form);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for zero
    bool is_homogeneous() const;
    ParamScalar coefficient(const Monomial& m) const;

    XPolynomial& operator+=(const XPolynomial& o);
    XPolynomial& operator-=(const XPolynomial& o);
    friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { a += b; return a; }
    friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { a -= b; return a; }
    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
    friend XPolynomial operator-(const XPolynomial& a);

    XPolynomial scaled(const ParamScalar& c) const;
    XPolynomial scaled(const RadicalComplex& c) const;

    // Partial derivative with respect to x_{i+1}.
    XPolynomial partial(int i) const;
    // Multiplication by the variable x_{i+1}.
    XPolynomial times_variable(int i) const;
    // Substitution p -> p o A, i.e. x_i <- sum_j A[i][j] x_j.
    XPolynomial apply_matrix(const Matrix3& a) const;
    XPolynomial homogeneous_component(int d) const;
    // Exact quotient by a nonzero linear form; throws ExactDivisionError
    // when the division leaves a remainder.
    XPolynomial divide_by_linear_form(const Vector3& form) const;
    // Substitute numeric coordinates.
    ParamScalar eval(const Vector3& point) const;
    // Substitute numeric kappa values into every coefficient.
    XPolynomial instantiate(const Rational& k1, const Rational& k2) const;

    void add_term(const Monomial& m, const ParamScalar& c);

    friend bool operator==(const XPolynomial& a, const XPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const XPolynomial& a, const XPolynomial& b) { return !(a == b); }

    std::string str() const; // "0" for zero
    friend std::ostream& operator<<(std::ostream& os, const XPolynomial& p);

private:
    TermMap terms_;
};

} // namespace dunkl
