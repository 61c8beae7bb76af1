#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dunkl/clifford.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/matrix3.hpp"
#include "dunkl/param.hpp"

namespace dunkl {

// Positive root with the index of its deformation parameter class.
struct Root {
    Vector3 v;
    int weight_class = 0;
};

RadicalComplex root_norm_squared(const Root& r);
// Reflection through the hyperplane orthogonal to alpha: I - 2 a a^T / <a,a>.
Matrix3 reflection_matrix(const Vector3& alpha);

// A finite reflection arrangement in rank 3 with one deformation parameter
// per weight class (class 0 -> kappa1, class 1 -> kappa2).
struct RootSystemPreset {
    std::string name;
    std::vector<Root> positive_roots;
    std::vector<int> simple;     // indices of the simple roots
    int weight_classes = 1;
    std::vector<Matrix3> reflections; // same order as positive_roots

    ParamScalar weight(int root_index) const;
};

RootSystemPreset g2_preset();
RootSystemPreset a2_preset();
// Accepts "g2" or "a2"; throws InvalidPreset otherwise.
RootSystemPreset preset_by_name(std::string_view name);

// Structural sanity: nonzero roots with representable lengths, orthogonal
// involutive reflections of determinant -1, positivity-closed reflection
// action, and weights constant on orbits. Throws InvalidPreset.
void validate_preset(const RootSystemPreset& p);
// Orbit id per root index under the action of all reflections.
std::vector<int> root_orbits(const RootSystemPreset& p);

struct GroupElement {
    Matrix3 matrix;
    std::vector<int> word; // generator indices, empty for the identity
};

// Closure under multiplication, breadth first, shortest words first.
// Throws ClosureBudgetExceeded past the element budget.
std::vector<GroupElement> generate_group(const std::vector<Matrix3>& generators,
                                         std::size_t budget = 1024);

// Smallest k >= 1 with m^k = identity; throws std::invalid_argument past cap.
int matrix_order(const Matrix3& m, int cap = 96);

// Element of the double cover: an orthogonal matrix together with the
// Clifford group element implementing it.
struct PinElement {
    Matrix3 matrix;
    CliffordElement spinor;
    std::vector<int> word;
};

PinElement pin_identity();
// Lift of a reflection: the matrix together with (alpha . e)/|alpha|.
PinElement tilde_lift(const Root& r);
PinElement pin_mul(const PinElement& a, const PinElement& b, Signature sig);
bool pin_same(const PinElement& a, const PinElement& b);

std::vector<PinElement> generate_pin(const std::vector<PinElement>& generators, Signature sig,
                                     std::size_t budget = 4096);

} // namespace dunkl
