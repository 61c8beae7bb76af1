#include "dunkl/operator.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dunkl {

namespace {

std::shared_ptr<OperatorExpr> node(OpKind kind) {
    auto n = std::make_shared<OperatorExpr>();
    n->kind = kind;
    return n;
}

} // namespace

OpPtr op_zero() {
    static const OpPtr instance = node(OpKind::zero);
    return instance;
}

OpPtr op_identity() {
    static const OpPtr instance = node(OpKind::identity);
    return instance;
}

OpPtr op_partial(int i) {
    if (i < 0 || i > 2) throw std::out_of_range("derivative index");
    auto n = node(OpKind::partial);
    n->index = i;
    return n;
}

OpPtr op_mult_x(int i) {
    if (i < 0 || i > 2) throw std::out_of_range("variable index");
    auto n = node(OpKind::mult_x);
    n->index = i;
    return n;
}

OpPtr op_group_action(const Matrix3& m) {
    auto n = node(OpKind::group_action);
    n->matrix = m;
    return n;
}

OpPtr op_clifford(const CliffordElement& c) {
    auto n = node(OpKind::clifford_left);
    n->element = c;
    return n;
}

OpPtr op_diff_quotient(const Matrix3& action, const Vector3& form) {
    bool zero = form[0].is_zero() && form[1].is_zero() && form[2].is_zero();
    if (zero) throw std::invalid_argument("difference quotient with zero divisor");
    auto n = node(OpKind::diff_quotient);
    n->matrix = action;
    n->form = form;
    return n;
}

OpPtr op_root_term(const Root& r) {
    return op_diff_quotient(reflection_matrix(r.v), r.v);
}

OpPtr op_sum(std::vector<OpPtr> children) {
    std::vector<OpPtr> kept;
    for (OpPtr& c : children) {
        if (!c) throw std::invalid_argument("null operator child");
        if (c->kind == OpKind::zero) continue;
        kept.push_back(std::move(c));
    }
    if (kept.empty()) return op_zero();
    if (kept.size() == 1) return kept[0];
    auto n = node(OpKind::sum);
    n->children = std::move(kept);
    return n;
}

OpPtr op_compose(std::vector<OpPtr> children) {
    std::vector<OpPtr> kept;
    for (OpPtr& c : children) {
        if (!c) throw std::invalid_argument("null operator child");
        if (c->kind == OpKind::zero) return op_zero();
        if (c->kind == OpKind::identity) continue;
        kept.push_back(std::move(c));
    }
    if (kept.empty()) return op_identity();
    if (kept.size() == 1) return kept[0];
    auto n = node(OpKind::compose);
    n->children = std::move(kept);
    return n;
}

OpPtr op_scale(const ParamScalar& factor, OpPtr child) {
    if (!child) throw std::invalid_argument("null operator child");
    if (factor.is_zero() || child->kind == OpKind::zero) return op_zero();
    if (factor.is_one()) return child;
    auto n = node(OpKind::scale);
    n->factor = factor;
    n->children.push_back(std::move(child));
    return n;
}

OpPtr op_neg(OpPtr x) {
    return op_scale(ParamScalar(-1L), std::move(x));
}

OpPtr op_sub(OpPtr a, OpPtr b) {
    return op_sum({std::move(a), op_neg(std::move(b))});
}

OpPtr op_pow(OpPtr a, unsigned n) {
    if (n == 0) return op_identity();
    std::vector<OpPtr> reps(n, a);
    return op_compose(std::move(reps));
}

OpPtr op_comm(OpPtr a, OpPtr b) {
    return op_sub(op_compose({a, b}), op_compose({b, a}));
}

OpPtr op_acomm(OpPtr a, OpPtr b) {
    return op_sum({op_compose({a, b}), op_compose({b, a})});
}

void enable_memo(const OpPtr& op) {
    if (!op) throw std::invalid_argument("null operator");
    op->memo_enabled = true;
}

OpPtr instantiate_params(const OpPtr& op, const Rational& k1, const Rational& k2) {
    if (!op) throw std::invalid_argument("null operator");
    switch (op->kind) {
    case OpKind::sum: {
        std::vector<OpPtr> children;
        for (const OpPtr& c : op->children) children.push_back(instantiate_params(c, k1, k2));
        return op_sum(std::move(children));
    }
    case OpKind::compose: {
        std::vector<OpPtr> children;
        for (const OpPtr& c : op->children) children.push_back(instantiate_params(c, k1, k2));
        return op_compose(std::move(children));
    }
    case OpKind::scale: {
        RadicalComplex f = op->factor.instantiate(k1, k2);
        return op_scale(ParamScalar(f), instantiate_params(op->children[0], k1, k2));
    }
    default:
        return op;
    }
}

namespace {

// Image of a monomial under a group action or difference quotient leaf.
const XPolynomial& leaf_poly_image(const OperatorExpr& n, const Monomial& m) {
    {
        std::shared_lock lock(n.poly_mutex);
        auto it = n.poly_cache.find(m);
        if (it != n.poly_cache.end()) return it->second;
    }
    XPolynomial mono = XPolynomial::monomial_term(m, ParamScalar(1L));
    XPolynomial image;
    if (n.kind == OpKind::group_action) {
        image = mono.apply_matrix(n.matrix);
    } else {
        image = (mono - mono.apply_matrix(n.matrix)).divide_by_linear_form(n.form);
    }
    std::unique_lock lock(n.poly_mutex);
    auto [it, inserted] = n.poly_cache.emplace(m, std::move(image));
    (void)inserted;
    return it->second;
}

XPolynomial transform_poly(const OperatorExpr& n, const XPolynomial& p) {
    XPolynomial out;
    for (const auto& [m, c] : p.terms()) out += leaf_poly_image(n, m).scaled(c);
    return out;
}

SpinorPolynomial apply_direct(const OperatorExpr& n, const SpinorPolynomial& v, Signature sig) {
    switch (n.kind) {
    case OpKind::zero:
        return {};
    case OpKind::identity:
        return v;
    case OpKind::partial:
        return v.partial(n.index);
    case OpKind::mult_x:
        return v.times_variable(n.index);
    case OpKind::clifford_left:
        return v.clifford_left(n.element, sig);
    case OpKind::group_action:
    case OpKind::diff_quotient: {
        SpinorPolynomial out;
        for (int b = 0; b < 8; ++b) {
            const XPolynomial& p = v.component(static_cast<Blade>(b));
            if (p.is_zero()) continue;
            out.set_component(static_cast<Blade>(b), transform_poly(n, p));
        }
        return out;
    }
    case OpKind::sum: {
        SpinorPolynomial out;
        for (const OpPtr& c : n.children) out += apply(c, v, sig);
        return out;
    }
    case OpKind::compose: {
        SpinorPolynomial w = v;
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) w = apply(*it, w, sig);
        return w;
    }
    case OpKind::scale:
        return apply(n.children[0], v, sig).scaled(n.factor);
    }
    throw std::logic_error("unreachable operator kind");
}

SpinorPolynomial memo_image(const OperatorExpr& n, const BasisKey& key, Signature sig) {
    {
        std::shared_lock lock(n.memo_mutex);
        auto it = n.memo.find(key);
        if (it != n.memo.end()) return it->second;
    }
    SpinorPolynomial image = apply_direct(n, SpinorPolynomial::basis(key.m, key.b), sig);
    std::unique_lock lock(n.memo_mutex);
    auto [it, inserted] = n.memo.emplace(key, std::move(image));
    (void)inserted;
    return it->second;
}

} // namespace

SpinorPolynomial apply(const OpPtr& op, const SpinorPolynomial& v, Signature sig) {
    if (!op) throw std::invalid_argument("null operator");
    const OperatorExpr& n = *op;
    if (!n.memo_enabled) return apply_direct(n, v, sig);
    {
        std::unique_lock lock(n.memo_mutex);
        if (n.memo_epsilon && *n.memo_epsilon != sig.epsilon)
            throw std::logic_error("operator cache used with a different signature");
        n.memo_epsilon = sig.epsilon;
    }
    SpinorPolynomial out;
    for (int b = 0; b < 8; ++b) {
        const XPolynomial& p = v.component(static_cast<Blade>(b));
        for (const auto& [m, c] : p.terms())
            out += memo_image(n, {m, static_cast<Blade>(b)}, sig).scaled(c);
    }
    return out;
}

namespace {

std::optional<Witness> check_basis_element(const OpPtr& a, const OpPtr& b, const BasisKey& key,
                                           Signature sig) {
    SpinorPolynomial v = SpinorPolynomial::basis(key.m, key.b);
    try {
        SpinorPolynomial r = apply(a, v, sig) - apply(b, v, sig);
        if (r.is_zero()) return std::nullopt;
        return Witness{key.m, key.b, std::move(r), ""};
    } catch (const ExactDivisionError& e) {
        return Witness{key.m, key.b, {}, std::string("evaluation failed: ") + e.what()};
    }
}

} // namespace

std::string Witness::str() const {
    std::string in = SpinorPolynomial::basis(m, b).str();
    if (!note.empty()) return "input " + in + ": " + note;
    return "input " + in + " -> residual " + residual.str();
}

CheckResult equal_up_to_degree(const OpPtr& a, const OpPtr& b, int max_degree, Signature sig,
                               int jobs) {
    std::vector<BasisKey> keys;
    for (const Monomial& m : monomials_up_to(max_degree))
        for (Blade blade : blade_order) keys.push_back({m, blade});

    CheckResult result;
    result.basis_size = keys.size();
    result.max_degree = max_degree;

    if (jobs <= 1) {
        for (const BasisKey& key : keys) {
            auto w = check_basis_element(a, b, key, sig);
            if (w) {
                result.pass = false;
                result.witness = std::move(w);
                return result;
            }
        }
        return result;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_fail{keys.size()};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= keys.size()) return;
            if (k >= first_fail.load()) continue;
            try {
                if (check_basis_element(a, b, keys[k], sig)) {
                    std::size_t cur = first_fail.load();
                    while (k < cur && !first_fail.compare_exchange_weak(cur, k)) {
                    }
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    std::size_t fail = first_fail.load();
    if (fail < keys.size()) {
        result.pass = false;
        result.witness = check_basis_element(a, b, keys[fail], sig);
    }
    return result;
}

} // namespace dunkl
