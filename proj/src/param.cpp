#include "dunkl/param.hpp"

#include <ostream>
#include <stdexcept>

namespace dunkl {

std::string kappa_exp_str(const KappaExp& e) {
    std::string out;
    if (e.a > 0) {
        out += "kappa1";
        if (e.a > 1) out += "^" + std::to_string(e.a);
    }
    if (e.b > 0) {
        if (!out.empty()) out += "*";
        out += "kappa2";
        if (e.b > 1) out += "^" + std::to_string(e.b);
    }
    return out;
}

namespace {

int atom_count(const RadicalComplex& v) {
    int n = 0;
    for (int k = 0; k < RadicalComplex::basis_size; ++k)
        if (!v.coord(k).is_zero()) ++n;
    return n;
}

} // namespace

ParamScalar ParamScalar::monomial(KappaExp e, const RadicalComplex& coeff) {
    ParamScalar out;
    out.add_term(e, coeff);
    return out;
}

bool ParamScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == KappaExp{0, 0} &&
           terms_.begin()->second.is_one();
}

bool ParamScalar::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == KappaExp{0, 0};
}

RadicalComplex ParamScalar::constant_value() const {
    auto it = terms_.find({0, 0});
    if (it == terms_.end()) return RadicalComplex();
    return it->second;
}

RadicalComplex ParamScalar::as_radical() const {
    if (!is_constant()) throw std::invalid_argument("scalar depends on kappa: " + str());
    return constant_value();
}

void ParamScalar::add_term(KappaExp e, const RadicalComplex& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamScalar operator*(const ParamScalar& x, const ParamScalar& y) {
    ParamScalar out;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_)
            out.add_term({ex.a + ey.a, ex.b + ey.b}, cx * cy);
    return out;
}

ParamScalar operator-(const ParamScalar& x) {
    ParamScalar out;
    for (const auto& [e, c] : x.terms_) out.terms_.emplace(e, -c);
    return out;
}

ParamScalar ParamScalar::scaled(const RadicalComplex& c) const {
    ParamScalar out;
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
}

ParamScalar ParamScalar::pow(unsigned e) const {
    ParamScalar acc(1L);
    ParamScalar base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

RadicalComplex ParamScalar::instantiate(const Rational& k1, const Rational& k2) const {
    RadicalComplex out;
    for (const auto& [e, c] : terms_) {
        Rational f = k1.pow(e.a) * k2.pow(e.b);
        out += c * RadicalComplex(f);
    }
    return out;
}

bool operator<(const ParamScalar& x, const ParamScalar& y) {
    auto ix = x.terms_.begin(), iy = y.terms_.begin();
    KappaExpLess less;
    for (; ix != x.terms_.end() && iy != y.terms_.end(); ++ix, ++iy) {
        if (less(ix->first, iy->first)) return true;
        if (less(iy->first, ix->first)) return false;
        if (ix->second < iy->second) return true;
        if (iy->second < ix->second) return false;
    }
    return ix == x.terms_.end() && iy != y.terms_.end();
}

std::string ParamScalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, coeff] : terms_) {
        std::string kp = kappa_exp_str(e);
        if (kp.empty()) {
            // Constant term comes first in the term order.
            out += coeff.str();
            continue;
        }
        std::string body;
        bool negative = false;
        if (atom_count(coeff) == 1) {
            int index = 0;
            for (int k = 0; k < RadicalComplex::basis_size; ++k)
                if (!coeff.coord(k).is_zero()) index = k;
            const Rational& r = coeff.coord(index);
            negative = r.sgn() < 0;
            RadicalComplex mag = RadicalComplex::unit(index, r.abs());
            if (!mag.is_one()) {
                body += mag.str();
                body += "*";
            }
            body += kp;
        } else {
            body = "(" + coeff.str() + ")*" + kp;
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& v) {
    return os << v.str();
}

FactorRender render_coefficient(const ParamScalar& c) {
    FactorRender out;
    if (c.terms().size() == 1) {
        const auto& [e, v] = *c.terms().begin();
        if (atom_count(v) == 1) {
            int index = 0;
            for (int k = 0; k < RadicalComplex::basis_size; ++k)
                if (!v.coord(k).is_zero()) index = k;
            const Rational& r = v.coord(index);
            out.negative = r.sgn() < 0;
            out.atomic = true;
            RadicalComplex mag = RadicalComplex::unit(index, r.abs());
            if (!mag.is_one()) out.body = mag.str();
            std::string kp = kappa_exp_str(e);
            if (!kp.empty()) {
                if (!out.body.empty()) out.body += "*";
                out.body += kp;
            }
            return out;
        }
    }
    out.body = "(" + c.str() + ")";
    return out;
}

} // namespace dunkl
