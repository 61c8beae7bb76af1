#include "dunkl/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace dunkl {

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        unsigned p = e[static_cast<std::size_t>(i)];
        if (p == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (p > 1) out += "^" + std::to_string(p);
    }
    if (out.empty()) return "1";
    return out;
}

std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (int e1 = d; e1 >= 0; --e1)
        for (int e2 = d - e1; e2 >= 0; --e2) {
            int e3 = d - e1 - e2;
            out.push_back(Monomial{{static_cast<unsigned>(e1), static_cast<unsigned>(e2),
                                    static_cast<unsigned>(e3)}});
        }
    return out;
}

std::vector<Monomial> monomials_up_to(int max_degree) {
    std::vector<Monomial> out;
    for (int d = 0; d <= max_degree; ++d)
        for (const Monomial& m : monomials_of_degree(d)) out.push_back(m);
    return out;
}

XPolynomial XPolynomial::constant(const ParamScalar& c) {
    XPolynomial out;
    out.add_term(Monomial{}, c);
    return out;
}

XPolynomial XPolynomial::variable(int i) {
    if (i < 0 || i > 2) throw std::out_of_range("variable index");
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = 1;
    return monomial_term(m, ParamScalar(1L));
}

XPolynomial XPolynomial::monomial_term(const Monomial& m, const ParamScalar& c) {
    XPolynomial out;
    out.add_term(m, c);
    return out;
}

XPolynomial XPolynomial::linear_form(const Vector3& form) {
    XPolynomial out;
    for (int i = 0; i < 3; ++i) {
        Monomial m;
        m.e[static_cast<std::size_t>(i)] = 1;
        out.add_term(m, ParamScalar(form[static_cast<std::size_t>(i)]));
    }
    return out;
}

int XPolynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
}

bool XPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

ParamScalar XPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return ParamScalar();
    return it->second;
}

void XPolynomial::add_term(const Monomial& m, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    XPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

XPolynomial operator-(const XPolynomial& a) {
    XPolynomial out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

XPolynomial XPolynomial::scaled(const ParamScalar& c) const {
    XPolynomial out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

XPolynomial XPolynomial::scaled(const RadicalComplex& c) const {
    return scaled(ParamScalar(c));
}

XPolynomial XPolynomial::partial(int i) const {
    XPolynomial out;
    for (const auto& [m, c] : terms_) {
        unsigned p = m.e[static_cast<std::size_t>(i)];
        if (p == 0) continue;
        Monomial n = m;
        n.e[static_cast<std::size_t>(i)] = p - 1;
        out.add_term(n, c.scaled(RadicalComplex(static_cast<long>(p))));
    }
    return out;
}

XPolynomial XPolynomial::times_variable(int i) const {
    XPolynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        n.e[static_cast<std::size_t>(i)] += 1;
        out.terms_.emplace(n, c);
    }
    return out;
}

XPolynomial XPolynomial::apply_matrix(const Matrix3& a) const {
    // Images of the variables are the rows of a.
    std::array<XPolynomial, 3> image;
    int max_exp[3] = {0, 0, 0};
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < 3; ++i)
            max_exp[i] = std::max(max_exp[i], static_cast<int>(m.e[static_cast<std::size_t>(i)]));
    std::array<std::vector<XPolynomial>, 3> powers;
    for (int i = 0; i < 3; ++i) {
        image[static_cast<std::size_t>(i)] = linear_form(
            {a.at(i, 0), a.at(i, 1), a.at(i, 2)});
        powers[static_cast<std::size_t>(i)].push_back(constant(ParamScalar(1L)));
        for (int p = 1; p <= max_exp[i]; ++p)
            powers[static_cast<std::size_t>(i)].push_back(
                powers[static_cast<std::size_t>(i)].back() * image[static_cast<std::size_t>(i)]);
    }
    XPolynomial out;
    for (const auto& [m, c] : terms_) {
        XPolynomial t = powers[0][m.e[0]] * powers[1][m.e[1]] * powers[2][m.e[2]];
        out += t.scaled(c);
    }
    return out;
}

XPolynomial XPolynomial::homogeneous_component(int d) const {
    XPolynomial out;
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.degree()) == d) out.terms_.emplace(m, c);
    return out;
}

XPolynomial XPolynomial::divide_by_linear_form(const Vector3& form) const {
    int pivot = -1;
    for (int i = 0; i < 3; ++i) {
        if (!form[static_cast<std::size_t>(i)].is_zero()) { pivot = i; break; }
    }
    if (pivot < 0) throw std::invalid_argument("division by the zero linear form");
    RadicalComplex inv = form[static_cast<std::size_t>(pivot)].inverse();
    // Rest of the divisor after removing the pivot variable.
    Vector3 tail = form;
    tail[static_cast<std::size_t>(pivot)] = RadicalComplex();
    XPolynomial tail_poly = linear_form(tail);

    XPolynomial quotient;
    XPolynomial rem = *this;
    while (true) {
        // Peel the highest pivot-degree layer of the remainder.
        unsigned top = 0;
        for (const auto& [m, c] : rem.terms_)
            top = std::max(top, m.e[static_cast<std::size_t>(pivot)]);
        if (top == 0) break;
        XPolynomial layer_quotient;
        for (const auto& [m, c] : rem.terms_) {
            if (m.e[static_cast<std::size_t>(pivot)] != top) continue;
            Monomial n = m;
            n.e[static_cast<std::size_t>(pivot)] = top - 1;
            layer_quotient.add_term(n, c.scaled(inv));
        }
        quotient += layer_quotient;
        rem -= layer_quotient * linear_form(form);
    }
    if (!rem.is_zero())
        throw ExactDivisionError("nonzero remainder " + rem.str() + " dividing by " +
                                 linear_form(form).str());
    return quotient;
}

ParamScalar XPolynomial::eval(const Vector3& point) const {
    ParamScalar out;
    for (const auto& [m, c] : terms_) {
        RadicalComplex v(1);
        for (int i = 0; i < 3; ++i)
            v *= point[static_cast<std::size_t>(i)].pow(m.e[static_cast<std::size_t>(i)]);
        out += c * ParamScalar(v);
    }
    return out;
}

XPolynomial XPolynomial::instantiate(const Rational& k1, const Rational& k2) const {
    XPolynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m, ParamScalar(c.instantiate(k1, k2)));
    return out;
}

std::string XPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono = m.str();
        if (mono == "1") {
            // The constant term comes first in the monomial order.
            out += c.str();
            continue;
        }
        FactorRender f = render_coefficient(c);
        std::string body = f.body.empty() ? mono : f.body + "*" + mono;
        if (out.empty()) {
            if (f.negative) out += "-";
        } else {
            out += f.negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const XPolynomial& p) {
    return os << p.str();
}

} // namespace dunkl
