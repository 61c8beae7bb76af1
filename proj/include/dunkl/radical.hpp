#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "dunkl/rational.hpp"

namespace dunkl {

// Element of the field Q(i, sqrt2, sqrt3) with coordinates over the basis
//   1, sqrt2, sqrt3, sqrt6, i, i*sqrt2, i*sqrt3, i*sqrt6
// indexed as imag*4 + rad with rad bit0 = sqrt2 present, bit1 = sqrt3 present.
class RadicalComplex {
public:
    static constexpr int basis_size = 8;

    RadicalComplex() = default;
    RadicalComplex(const Rational& r) { c_[0] = r; }
    RadicalComplex(long n) { c_[0] = Rational(n); }
    RadicalComplex(long num, long den) { c_[0] = Rational(num, den); }

    static RadicalComplex unit(int index, Rational coeff = Rational(1));
    static RadicalComplex i() { return unit(4); }
    static RadicalComplex sqrt2() { return unit(1); }
    static RadicalComplex sqrt3() { return unit(2); }
    static RadicalComplex sqrt6() { return unit(3); }
    // Primitive cube root of unity, (-1 + i*sqrt3)/2.
    static RadicalComplex omega();

    const Rational& coord(int index) const { return c_[static_cast<std::size_t>(index)]; }
    void set_coord(int index, Rational v) { c_[static_cast<std::size_t>(index)] = std::move(v); }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_real() const;
    // Requires is_rational(); the coordinate on 1.
    const Rational& rational_part() const { return c_[0]; }

    RadicalComplex& operator+=(const RadicalComplex& o);
    RadicalComplex& operator-=(const RadicalComplex& o);
    friend RadicalComplex operator+(RadicalComplex a, const RadicalComplex& b) { a += b; return a; }
    friend RadicalComplex operator-(RadicalComplex a, const RadicalComplex& b) { a -= b; return a; }
    friend RadicalComplex operator*(const RadicalComplex& a, const RadicalComplex& b);
    RadicalComplex& operator*=(const RadicalComplex& o) { *this = *this * o; return *this; }
    friend RadicalComplex operator-(const RadicalComplex& a);

    // Complex conjugate (negates the four imaginary coordinates).
    RadicalComplex conj() const;
    // Multiplicative inverse; throws std::invalid_argument on zero.
    RadicalComplex inverse() const;
    friend RadicalComplex operator/(const RadicalComplex& a, const RadicalComplex& b) {
        return a * b.inverse();
    }
    RadicalComplex pow(unsigned e) const;

    friend bool operator==(const RadicalComplex& a, const RadicalComplex& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RadicalComplex& a, const RadicalComplex& b) { return !(a == b); }
    // Lexicographic coordinate order; used only for deterministic containers.
    friend bool operator<(const RadicalComplex& a, const RadicalComplex& b) { return a.c_ < b.c_; }

    // Sum of atoms like "1/2", "sqrt6", "-3*i*sqrt2"; zero renders as "0".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const RadicalComplex& v);

private:
    std::array<Rational, 8> c_{};
};

// Exact square root of a nonnegative rational, when it lies in the field,
// i.e. when the squarefree part of numerator*denominator is 1, 2, 3 or 6.
std::optional<RadicalComplex> sqrt_rational(const Rational& r);

} // namespace dunkl
