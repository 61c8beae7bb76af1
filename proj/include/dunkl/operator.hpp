#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/group.hpp"
#include "dunkl/spinor.hpp"

namespace dunkl {

enum class OpKind {
    zero,
    identity,
    partial,       // d/dx_{index+1}
    mult_x,        // multiplication by x_{index+1}
    group_action,  // p -> p o matrix on every component
    clifford_left, // left multiplication by a Clifford element
    diff_quotient, // p -> (p - p o matrix) / <form, x>
    sum,
    compose,       // children[0] applied last
    scale,
};

class OperatorExpr;
using OpPtr = std::shared_ptr<const OperatorExpr>;

struct BasisKey {
    Monomial m;
    Blade b = 0;
};

struct BasisKeyLess {
    bool operator()(const BasisKey& x, const BasisKey& y) const {
        MonomialLess less;
        if (less(x.m, y.m)) return true;
        if (less(y.m, x.m)) return false;
        return blade_position(x.b) < blade_position(y.b);
    }
};

// Node of a linear-operator expression on spinor-valued polynomials.
// Nodes are immutable after construction; the mutable members are caches.
class OperatorExpr {
public:
    OpKind kind = OpKind::zero;
    int index = 0;          // partial, mult_x
    Matrix3 matrix;         // group_action, diff_quotient
    Vector3 form{};         // diff_quotient
    CliffordElement element; // clifford_left
    ParamScalar factor;     // scale
    std::vector<OpPtr> children;

    // Monomial image cache for group_action and diff_quotient.
    mutable std::map<Monomial, XPolynomial, MonomialLess> poly_cache;
    mutable std::shared_mutex poly_mutex;

    // Basis image cache, enabled on shared named operators.
    mutable bool memo_enabled = false;
    mutable std::optional<int> memo_epsilon;
    mutable std::map<BasisKey, SpinorPolynomial, BasisKeyLess> memo;
    mutable std::shared_mutex memo_mutex;
};

OpPtr op_zero();
OpPtr op_identity();
OpPtr op_partial(int i);
OpPtr op_mult_x(int i);
OpPtr op_group_action(const Matrix3& m);
OpPtr op_clifford(const CliffordElement& c);
OpPtr op_diff_quotient(const Matrix3& action, const Vector3& form);
// Difference-quotient term of a deformed derivative attached to a root.
OpPtr op_root_term(const Root& r);

OpPtr op_sum(std::vector<OpPtr> children);
OpPtr op_compose(std::vector<OpPtr> children);
OpPtr op_scale(const ParamScalar& factor, OpPtr child);
OpPtr op_neg(OpPtr x);
OpPtr op_sub(OpPtr a, OpPtr b);
OpPtr op_pow(OpPtr a, unsigned n);
OpPtr op_comm(OpPtr a, OpPtr b);  // ab - ba
OpPtr op_acomm(OpPtr a, OpPtr b); // ab + ba

// Turns on the per-basis image cache; call before concurrent use.
void enable_memo(const OpPtr& op);

// Substitutes numeric kappa values into every scale factor, pruning zeros.
// Leaves are shared with the input tree.
OpPtr instantiate_params(const OpPtr& op, const Rational& k1, const Rational& k2);

SpinorPolynomial apply(const OpPtr& op, const SpinorPolynomial& v, Signature sig);

struct Witness {
    Monomial m;
    Blade b = 0;
    SpinorPolynomial residual;
    std::string note; // set when evaluation itself failed
    std::string str() const;
};

struct CheckResult {
    bool pass = true;
    std::size_t basis_size = 0;
    int max_degree = 0;
    std::optional<Witness> witness;
};

// Compares two operators on every monomial-blade basis element of degree
// at most max_degree. The witness reports the first failing element in the
// graded basis order. jobs > 1 splits the basis across threads.
CheckResult equal_up_to_degree(const OpPtr& a, const OpPtr& b, int max_degree, Signature sig,
                               int jobs = 1);

} // namespace dunkl
