#include "dunkl/clifford.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

#include "dunkl/param.hpp"

namespace dunkl {

int blade_grade(Blade b) {
    return std::popcount(static_cast<unsigned>(b));
}

int blade_position(Blade b) {
    static constexpr std::array<int, 8> pos = {0, 1, 2, 4, 3, 5, 6, 7};
    return pos[b];
}

std::string blade_str(Blade b) {
    if (b == 0) return "1";
    std::string out = "e";
    for (int i = 0; i < 3; ++i)
        if (b & (1u << i)) out += static_cast<char>('1' + i);
    return out;
}

BladeProduct blade_mul(Blade a, Blade b, Signature sig) {
    int sign = 1;
    Blade acc = a;
    for (int i = 0; i < 3; ++i) {
        if (!(b & (1u << i))) continue;
        // e_{i+1} moves left past the generators of acc with larger index.
        unsigned higher = static_cast<unsigned>(acc) >> (i + 1);
        if (std::popcount(higher) & 1) sign = -sign;
        if (acc & (1u << i)) {
            sign *= sig.epsilon;
            acc = static_cast<Blade>(acc & ~(1u << i));
        } else {
            acc = static_cast<Blade>(acc | (1u << i));
        }
    }
    return {acc, sign};
}

CliffordElement CliffordElement::blade(Blade b, const RadicalComplex& coeff) {
    CliffordElement out;
    out.add_term(b, coeff);
    return out;
}

CliffordElement CliffordElement::generator(int i) {
    if (i < 0 || i > 2) throw std::out_of_range("generator index");
    return blade(static_cast<Blade>(1u << i));
}

bool CliffordElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

RadicalComplex CliffordElement::scalar_part() const {
    auto it = terms_.find(0);
    if (it == terms_.end()) return RadicalComplex();
    return it->second;
}

RadicalComplex CliffordElement::coefficient(Blade b) const {
    auto it = terms_.find(b);
    if (it == terms_.end()) return RadicalComplex();
    return it->second;
}

Parity CliffordElement::parity() const {
    bool even = false, odd = false;
    for (const auto& [b, c] : terms_) {
        if (blade_grade(b) % 2 == 0) even = true;
        else odd = true;
    }
    if (even && odd) return Parity::mixed;
    if (odd) return Parity::odd;
    return Parity::even;
}

void CliffordElement::add_term(Blade b, const RadicalComplex& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

CliffordElement operator-(const CliffordElement& a) {
    CliffordElement out;
    for (const auto& [b, c] : a.terms_) out.terms_.emplace(b, -c);
    return out;
}

CliffordElement CliffordElement::mul(const CliffordElement& o, Signature sig) const {
    CliffordElement out;
    for (const auto& [ba, ca] : terms_)
        for (const auto& [bb, cb] : o.terms_) {
            BladeProduct p = blade_mul(ba, bb, sig);
            RadicalComplex c = ca * cb;
            if (p.sign < 0) c = -c;
            out.add_term(p.blade, c);
        }
    return out;
}

CliffordElement CliffordElement::scaled(const RadicalComplex& c) const {
    CliffordElement out;
    for (const auto& [b, v] : terms_) out.add_term(b, v * c);
    return out;
}

CliffordElement CliffordElement::pow(unsigned e, Signature sig) const {
    CliffordElement acc(1L);
    CliffordElement base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc.mul(base, sig);
        base = base.mul(base, sig);
        e >>= 1u;
    }
    return acc;
}

bool operator<(const CliffordElement& a, const CliffordElement& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (blade_position(ia->first) != blade_position(ib->first))
            return blade_position(ia->first) < blade_position(ib->first);
        if (ia->second < ib->second) return true;
        if (ib->second < ia->second) return false;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : terms_) {
        std::string blade_name = blade_str(b);
        if (b == 0) {
            out += c.str();
            continue;
        }
        FactorRender f = render_coefficient(ParamScalar(c));
        std::string body = f.body.empty() ? blade_name : f.body + "*" + blade_name;
        if (out.empty()) {
            if (f.negative) out += "-";
        } else {
            out += f.negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const CliffordElement& v) {
    return os << v.str();
}

} // namespace dunkl
