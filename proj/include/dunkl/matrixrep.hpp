#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/catalogue.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/operator.hpp"

namespace dunkl {

// Ordered basis of the homogeneous spinor-polynomial component of degree d.
// Monomial-major: monomials in the canonical graded order, blades by
// (grade, index) within each monomial. Size is 8*(d+1)*(d+2)/2.
class GradedBasis {
public:
    explicit GradedBasis(int degree);

    int degree() const { return degree_; }
    std::size_t size() const { return elems_.size(); }
    const std::pair<Monomial, Blade>& element(std::size_t idx) const { return elems_.at(idx); }
    // Throws std::out_of_range when the pair is not a basis element.
    std::size_t index_of(const Monomial& m, Blade b) const;
    // Textual label, e.g. "x1^2*e12"; the empty blade renders as the monomial.
    std::string label(std::size_t idx) const;

private:
    struct PairLess {
        bool operator()(const std::pair<Monomial, Blade>& a,
                        const std::pair<Monomial, Blade>& b) const {
            if (!(a.first == b.first)) return MonomialLess{}(a.first, b.first);
            return blade_position(a.second) < blade_position(b.second);
        }
    };
    int degree_;
    std::vector<std::pair<Monomial, Blade>> elems_;
    std::map<std::pair<Monomial, Blade>, std::size_t, PairLess> index_;
};

// Dense square matrix with exact entries; S is RadicalComplex once the
// deformation parameters are instantiated, ParamScalar when symbolic.
template <class S>
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    std::size_t dim() const { return n_; }
    const S& at(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }
    S& at(std::size_t i, std::size_t j) { return a_.at(i * n_ + j); }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    S trace() const {
        S t{};
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    ExactMatrix scaled(const S& c) const {
        ExactMatrix out(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
        return out;
    }

    friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
        ExactMatrix out(x.n_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] + y.a_[k];
        return out;
    }
    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
        ExactMatrix out(x.n_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] - y.a_[k];
        return out;
    }
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
        ExactMatrix out(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t k = 0; k < x.n_; ++k) {
                const S& v = x.at(i, k);
                if (v.is_zero()) continue;
                for (std::size_t j = 0; j < x.n_; ++j) {
                    const S& w = y.at(k, j);
                    if (!w.is_zero()) out.at(i, j) += v * w;
                }
            }
        return out;
    }
    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

private:
    std::size_t n_ = 0;
    std::vector<S> a_;
};

using ParamMatrix = ExactMatrix<ParamScalar>;
using RadicalMatrix = ExactMatrix<RadicalComplex>;

// Column j holds the coordinates of the operator applied to basis vector j.
// Throws NotGraded when the image leaves the homogeneous component.
ParamMatrix matrix_of(const OpPtr& op, const GradedBasis& basis, Signature sig, int jobs = 1);
// Same with the deformation parameters instantiated.
RadicalMatrix matrix_of(const OpPtr& op, const GradedBasis& basis, Signature sig,
                        const Rational& k1, const Rational& k2, int jobs = 1);

// Monic characteristic polynomial by the Samuelson-Berkowitz recurrence
// (division-free). coeffs[k] multiplies l^(n-k); coeffs[0] = 1.
std::vector<RadicalComplex> charpoly(const RadicalMatrix& m);

// Evaluation of a coefficient vector at a scalar point.
RadicalComplex charpoly_eval(const std::vector<RadicalComplex>& coeffs, const RadicalComplex& x);

// Renders a monic polynomial in l, collapsing perfect powers,
// e.g. "(l^2 - 1/4)^4" or "l^2 - 3". The zero-length vector is invalid.
std::string charpoly_str(const std::vector<RadicalComplex>& coeffs);

struct LadderMatrixReport {
    int degree = 0;
    std::size_t dim = 0;
    bool symbolic = true;
    bool plus_pass = false;
    bool minus_pass = false;
    bool pass() const { return plus_pass && minus_pass; }
    std::string str() const;
};

// Matrix-level ladder property [M(O0), M(K+)] = M(K+) and
// [M(O0), M(K-)] = -M(K-) on the degree-d component. Symbolic entries when
// kappa is absent. Hexagonal preset only; otherwise ScopeMismatch.
LadderMatrixReport ladder_matrix_check(const Catalogue& cat, int degree,
                                       std::optional<std::pair<Rational, Rational>> kappa,
                                       int jobs = 1);

// CSV rows of entry strings in the textual scalar syntax.
std::string to_csv(const ParamMatrix& m);
std::string to_csv(const RadicalMatrix& m);

} // namespace dunkl
