#include "dunkl/matrixrep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "dunkl/spinor.hpp"

namespace dunkl {

GradedBasis::GradedBasis(int degree) : degree_(degree) {
    if (degree < 0) throw std::out_of_range("basis degree");
    for (const Monomial& m : monomials_of_degree(degree))
        for (Blade b : blade_order) elems_.emplace_back(m, b);
    for (std::size_t idx = 0; idx < elems_.size(); ++idx) index_.emplace(elems_[idx], idx);
}

std::size_t GradedBasis::index_of(const Monomial& m, Blade b) const {
    auto it = index_.find({m, b});
    if (it == index_.end())
        throw std::out_of_range("not a degree " + std::to_string(degree_) + " basis element");
    return it->second;
}

std::string GradedBasis::label(std::size_t idx) const {
    const auto& [m, b] = elems_.at(idx);
    if (b == 0) return m.str();
    if (m.degree() == 0) return blade_str(b);
    return m.str() + "*" + blade_str(b);
}

namespace {

template <class S, class Extract>
ExactMatrix<S> build_matrix(const OpPtr& op, const GradedBasis& basis, Signature sig,
                            const Extract& extract, int jobs) {
    const std::size_t n = basis.size();
    ExactMatrix<S> out(n);
    auto column = [&](std::size_t j) {
        const auto& [m, b] = basis.element(j);
        SpinorPolynomial image = apply(op, SpinorPolynomial::basis(m, b), sig);
        for (Blade blade : blade_order) {
            for (const auto& [mono, coeff] : image.component(blade).terms()) {
                if (static_cast<int>(mono.degree()) != basis.degree())
                    throw NotGraded("image of " + basis.label(j) + " has a degree " +
                                    std::to_string(mono.degree()) + " term on the degree " +
                                    std::to_string(basis.degree()) + " component");
                out.at(basis.index_of(mono, blade), j) = extract(coeff);
            }
        }
    };
    if (jobs <= 1 || n < 2) {
        for (std::size_t j = 0; j < n; ++j) column(j);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t j = next.fetch_add(1);
            if (j >= n) return;
            try {
                column(j);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace

ParamMatrix matrix_of(const OpPtr& op, const GradedBasis& basis, Signature sig, int jobs) {
    return build_matrix<ParamScalar>(op, basis, sig, [](const ParamScalar& c) { return c; }, jobs);
}

RadicalMatrix matrix_of(const OpPtr& op, const GradedBasis& basis, Signature sig,
                        const Rational& k1, const Rational& k2, int jobs) {
    return build_matrix<RadicalComplex>(
        op, basis, sig, [&](const ParamScalar& c) { return c.instantiate(k1, k2); }, jobs);
}

std::vector<RadicalComplex> charpoly(const RadicalMatrix& a) {
    const std::size_t n = a.dim();
    // Samuelson-Berkowitz: p holds the monic coefficients for the leading
    // principal r x r block, extended one row and column at a time.
    std::vector<RadicalComplex> p{RadicalComplex(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t m = r - 1;
        // s[k] = row . block^k . column for the bordering row and column.
        std::vector<RadicalComplex> s(m);
        if (m > 0) {
            std::vector<RadicalComplex> v(m);
            for (std::size_t i = 0; i < m; ++i) v[i] = a.at(i, m);
            for (std::size_t k = 0; k < m; ++k) {
                RadicalComplex dot;
                for (std::size_t i = 0; i < m; ++i) dot += a.at(m, i) * v[i];
                s[k] = dot;
                if (k + 1 < m) {
                    std::vector<RadicalComplex> w(m);
                    for (std::size_t i = 0; i < m; ++i) {
                        RadicalComplex acc;
                        for (std::size_t j = 0; j < m; ++j) acc += a.at(i, j) * v[j];
                        w[i] = acc;
                    }
                    v = std::move(w);
                }
            }
        }
        const RadicalComplex& corner = a.at(m, m);
        std::vector<RadicalComplex> q(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
            RadicalComplex acc = i < p.size() ? p[i] : RadicalComplex(0);
            if (i >= 1 && i - 1 < p.size()) acc -= corner * p[i - 1];
            for (std::size_t k = 0; k + 2 <= i && k < m; ++k)
                if (i - 2 - k < p.size()) acc -= s[k] * p[i - 2 - k];
            q[i] = acc;
        }
        p = std::move(q);
    }
    return p;
}

RadicalComplex charpoly_eval(const std::vector<RadicalComplex>& coeffs, const RadicalComplex& x) {
    RadicalComplex acc;
    for (const auto& c : coeffs) acc = acc * x + c;
    return acc;
}

namespace {

std::vector<RadicalComplex> poly_mul(const std::vector<RadicalComplex>& a,
                                     const std::vector<RadicalComplex>& b) {
    std::vector<RadicalComplex> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<RadicalComplex> poly_pow(std::vector<RadicalComplex> base, std::size_t e) {
    std::vector<RadicalComplex> out{RadicalComplex(1)};
    while (e) {
        if (e & 1) out = poly_mul(out, base);
        e >>= 1;
        if (e) base = poly_mul(base, base);
    }
    return out;
}

// Monic k-th root by successive coefficient matching; nullopt when the
// polynomial is not a perfect k-th power.
std::optional<std::vector<RadicalComplex>> monic_root(const std::vector<RadicalComplex>& p,
                                                      std::size_t k) {
    const std::size_t n = p.size() - 1;
    if (k == 0 || n % k != 0) return std::nullopt;
    const std::size_t m = n / k;
    std::vector<RadicalComplex> g(m + 1);
    g[0] = RadicalComplex(1);
    const RadicalComplex kinv = RadicalComplex(static_cast<long>(k)).inverse();
    for (std::size_t j = 1; j <= m; ++j) {
        RadicalComplex have = poly_pow(g, k).at(j);
        g[j] = (p[j] - have) * kinv;
    }
    if (poly_pow(g, k) == p) return g;
    return std::nullopt;
}

std::string poly_in_l(const std::vector<RadicalComplex>& c) {
    const std::size_t n = c.size() - 1;
    std::string out;
    for (std::size_t k = 0; k <= n; ++k) {
        if (c[k].is_zero()) continue;
        std::size_t pw = n - k;
        FactorRender f = render_coefficient(ParamScalar(c[k]));
        std::string body;
        if (pw == 0) {
            body = f.body.empty() ? "1" : f.body;
        } else {
            std::string lpow = pw == 1 ? "l" : "l^" + std::to_string(pw);
            body = f.body.empty() ? lpow : f.body + "*" + lpow;
        }
        if (out.empty()) {
            if (f.negative) out += "-";
        } else {
            out += f.negative ? " - " : " + ";
        }
        out += body;
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string charpoly_str(const std::vector<RadicalComplex>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
    const std::size_t n = coeffs.size() - 1;
    bool pure_power = true;
    for (std::size_t k = 1; k <= n; ++k)
        if (!coeffs[k].is_zero()) pure_power = false;
    if (n < 2 || pure_power) return poly_in_l(coeffs);
    for (std::size_t k = n; k >= 2; --k) {
        if (n % k != 0) continue;
        if (auto g = monic_root(coeffs, k))
            return "(" + poly_in_l(*g) + ")^" + std::to_string(k);
    }
    return poly_in_l(coeffs);
}

std::string LadderMatrixReport::str() const {
    std::string out = "ladder identities on the degree " + std::to_string(degree) +
                      " component (dim " + std::to_string(dim) + ", " +
                      (symbolic ? "symbolic" : "instantiated") + " kappa): raising ";
    out += plus_pass ? "pass" : "FAIL";
    out += ", lowering ";
    out += minus_pass ? "pass" : "FAIL";
    return out;
}

LadderMatrixReport ladder_matrix_check(const Catalogue& cat, int degree,
                                       std::optional<std::pair<Rational, Rational>> kappa,
                                       int jobs) {
    GradedBasis basis(degree);
    OpPtr o0 = cat.o_zero();
    OpPtr kp = cat.ladder_plus();
    OpPtr km = cat.ladder_minus();
    LadderMatrixReport rep;
    rep.degree = degree;
    rep.dim = basis.size();
    rep.symbolic = !kappa.has_value();
    Signature sig = cat.signature();
    if (kappa) {
        auto m0 = matrix_of(o0, basis, sig, kappa->first, kappa->second, jobs);
        auto mp = matrix_of(kp, basis, sig, kappa->first, kappa->second, jobs);
        auto mm = matrix_of(km, basis, sig, kappa->first, kappa->second, jobs);
        rep.plus_pass = (m0 * mp - mp * m0) == mp;
        rep.minus_pass = (m0 * mm - mm * m0) == mm.scaled(RadicalComplex(-1));
    } else {
        auto m0 = matrix_of(o0, basis, sig, jobs);
        auto mp = matrix_of(kp, basis, sig, jobs);
        auto mm = matrix_of(km, basis, sig, jobs);
        rep.plus_pass = (m0 * mp - mp * m0) == mp;
        rep.minus_pass = (m0 * mm - mm * m0) == mm.scaled(ParamScalar(-1L));
    }
    return rep;
}

namespace {

template <class S>
std::string csv_of(const ExactMatrix<S>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out += ",";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

} // namespace

std::string to_csv(const ParamMatrix& m) { return csv_of(m); }
std::string to_csv(const RadicalMatrix& m) { return csv_of(m); }

} // namespace dunkl
