#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "dunkl/radical.hpp"

namespace dunkl {

// Basis blade of the rank-3 Clifford algebra; bit i set means e_{i+1} present.
using Blade = std::uint8_t;

// Grade-then-index order: 1, e1, e2, e3, e12, e13, e23, e123.
inline constexpr std::array<Blade, 8> blade_order = {0, 1, 2, 4, 3, 5, 6, 7};

int blade_grade(Blade b);
int blade_position(Blade b); // position in blade_order
std::string blade_str(Blade b);

struct BladeLess {
    bool operator()(Blade a, Blade b) const { return blade_position(a) < blade_position(b); }
};

// Generator square e_i^2 = epsilon, with epsilon in {+1, -1}.
struct Signature {
    int epsilon = 1;
    friend bool operator==(const Signature& a, const Signature& b) { return a.epsilon == b.epsilon; }
};

struct BladeProduct {
    Blade blade;
    int sign; // +1 or -1
};
BladeProduct blade_mul(Blade a, Blade b, Signature sig);

enum class Parity { even, odd, mixed };

// Element of the Clifford algebra over Q(i, sqrt2, sqrt3).
// No stored coefficient is zero; the empty map is the zero element.
class CliffordElement {
public:
    using TermMap = std::map<Blade, RadicalComplex, BladeLess>;

    CliffordElement() = default;
    CliffordElement(const RadicalComplex& scalar) { add_term(0, scalar); }
    CliffordElement(long n) { add_term(0, RadicalComplex(n)); }

    static CliffordElement blade(Blade b, const RadicalComplex& coeff = RadicalComplex(1));
    static CliffordElement generator(int i); // e_{i+1}, i in 0..2

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    RadicalComplex scalar_part() const;
    RadicalComplex coefficient(Blade b) const;
    Parity parity() const; // zero counts as even

    CliffordElement& operator+=(const CliffordElement& o);
    CliffordElement& operator-=(const CliffordElement& o);
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { a += b; return a; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { a -= b; return a; }
    friend CliffordElement operator-(const CliffordElement& a);

    // Clifford product; depends on the generator square via sig.
    CliffordElement mul(const CliffordElement& o, Signature sig) const;
    CliffordElement scaled(const RadicalComplex& c) const;
    CliffordElement pow(unsigned e, Signature sig) const;

    void add_term(Blade b, const RadicalComplex& coeff);

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }
    friend bool operator<(const CliffordElement& a, const CliffordElement& b);

    std::string str() const; // "0" for zero
    friend std::ostream& operator<<(std::ostream& os, const CliffordElement& v);

private:
    TermMap terms_;
};

} // namespace dunkl
