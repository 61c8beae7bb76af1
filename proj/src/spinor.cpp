#include "dunkl/spinor.hpp"

#include <ostream>

namespace dunkl {

SpinorPolynomial SpinorPolynomial::from_poly(const XPolynomial& p, Blade b) {
    SpinorPolynomial out;
    out.comp_[b] = p;
    return out;
}

SpinorPolynomial SpinorPolynomial::basis(const Monomial& m, Blade b) {
    return from_poly(XPolynomial::monomial_term(m, ParamScalar(1L)), b);
}

bool SpinorPolynomial::is_zero() const {
    for (const XPolynomial& p : comp_)
        if (!p.is_zero()) return false;
    return true;
}

int SpinorPolynomial::degree() const {
    int d = -1;
    for (const XPolynomial& p : comp_) d = std::max(d, p.degree());
    return d;
}

Parity SpinorPolynomial::parity() const {
    bool even = false, odd = false;
    for (int b = 0; b < 8; ++b) {
        if (comp_[static_cast<std::size_t>(b)].is_zero()) continue;
        if (blade_grade(static_cast<Blade>(b)) % 2 == 0) even = true;
        else odd = true;
    }
    if (even && odd) return Parity::mixed;
    if (odd) return Parity::odd;
    return Parity::even;
}

SpinorPolynomial& SpinorPolynomial::operator+=(const SpinorPolynomial& o) {
    for (int b = 0; b < 8; ++b) comp_[static_cast<std::size_t>(b)] += o.comp_[static_cast<std::size_t>(b)];
    return *this;
}

SpinorPolynomial& SpinorPolynomial::operator-=(const SpinorPolynomial& o) {
    for (int b = 0; b < 8; ++b) comp_[static_cast<std::size_t>(b)] -= o.comp_[static_cast<std::size_t>(b)];
    return *this;
}

SpinorPolynomial operator-(const SpinorPolynomial& a) {
    SpinorPolynomial out;
    for (int b = 0; b < 8; ++b) out.comp_[static_cast<std::size_t>(b)] = -a.comp_[static_cast<std::size_t>(b)];
    return out;
}

SpinorPolynomial SpinorPolynomial::scaled(const ParamScalar& c) const {
    SpinorPolynomial out;
    for (int b = 0; b < 8; ++b)
        out.comp_[static_cast<std::size_t>(b)] = comp_[static_cast<std::size_t>(b)].scaled(c);
    return out;
}

SpinorPolynomial SpinorPolynomial::scaled(const RadicalComplex& c) const {
    return scaled(ParamScalar(c));
}

SpinorPolynomial SpinorPolynomial::partial(int i) const {
    SpinorPolynomial out;
    for (int b = 0; b < 8; ++b)
        out.comp_[static_cast<std::size_t>(b)] = comp_[static_cast<std::size_t>(b)].partial(i);
    return out;
}

SpinorPolynomial SpinorPolynomial::times_variable(int i) const {
    SpinorPolynomial out;
    for (int b = 0; b < 8; ++b)
        out.comp_[static_cast<std::size_t>(b)] = comp_[static_cast<std::size_t>(b)].times_variable(i);
    return out;
}

SpinorPolynomial SpinorPolynomial::apply_matrix(const Matrix3& a) const {
    SpinorPolynomial out;
    for (int b = 0; b < 8; ++b)
        out.comp_[static_cast<std::size_t>(b)] = comp_[static_cast<std::size_t>(b)].apply_matrix(a);
    return out;
}

SpinorPolynomial SpinorPolynomial::clifford_left(const CliffordElement& c, Signature sig) const {
    SpinorPolynomial out;
    for (const auto& [cb, coeff] : c.terms()) {
        for (int b = 0; b < 8; ++b) {
            const XPolynomial& p = comp_[static_cast<std::size_t>(b)];
            if (p.is_zero()) continue;
            BladeProduct prod = blade_mul(cb, static_cast<Blade>(b), sig);
            RadicalComplex f = coeff;
            if (prod.sign < 0) f = -f;
            out.comp_[prod.blade] += p.scaled(f);
        }
    }
    return out;
}

SpinorPolynomial SpinorPolynomial::homogeneous_component(int d) const {
    SpinorPolynomial out;
    for (int b = 0; b < 8; ++b)
        out.comp_[static_cast<std::size_t>(b)] =
            comp_[static_cast<std::size_t>(b)].homogeneous_component(d);
    return out;
}

SpinorPolynomial SpinorPolynomial::instantiate(const Rational& k1, const Rational& k2) const {
    SpinorPolynomial out;
    for (int b = 0; b < 8; ++b)
        out.comp_[static_cast<std::size_t>(b)] = comp_[static_cast<std::size_t>(b)].instantiate(k1, k2);
    return out;
}

std::string SpinorPolynomial::str() const {
    std::string out;
    for (Blade b : blade_order) {
        const XPolynomial& p = comp_[b];
        if (p.is_zero()) continue;
        if (b == 0) {
            out += p.str();
            continue;
        }
        std::string body;
        bool negative = false;
        if (p.terms().size() == 1) {
            const auto& [m, c] = *p.terms().begin();
            FactorRender f = render_coefficient(c);
            if (f.atomic || f.body.empty() || m.degree() == 0) {
                negative = f.negative;
                body = f.body;
                if (m.degree() > 0) {
                    if (!body.empty()) body += "*";
                    body += m.str();
                }
                if (!body.empty()) body += "*";
                body += blade_str(b);
            }
        }
        if (body.empty()) {
            body = "(" + p.str() + ")*" + blade_str(b);
            negative = false;
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += body;
    }
    if (out.empty()) return "0";
    return out;
}

std::ostream& operator<<(std::ostream& os, const SpinorPolynomial& v) {
    return os << v.str();
}

} // namespace dunkl
