#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dunkl/operator.hpp"

namespace dunkl {

// Named operators for one preset and one generator square. Operators are
// built once, shared, and carry basis-image caches, so a catalogue is cheap
// to query repeatedly. Build calls are not thread safe; applying the
// returned operators is.
class Catalogue {
public:
    Catalogue(RootSystemPreset preset, Signature sig);

    const RootSystemPreset& preset() const { return preset_; }
    Signature signature() const { return sig_; }

    // Plain and double-cover actions of the k-th positive-root reflection.
    OpPtr reflection(int k) const;
    OpPtr tilde(int k) const;

    // Deformed derivative in direction i (0-based).
    OpPtr dunkl(int i) const;
    OpPtr dirac() const;       // sum_i e_i D_i
    OpPtr dual_vector() const; // sum_i e_i x_i
    OpPtr euler() const;       // sum_i x_i d/dx_i
    // Angular momentum x_i D_j - x_j D_i.
    OpPtr angular(int i, int j) const;
    // Two-index symmetry L_ij + (e_i e_j) epsilon/2 + O_i e_j - O_j e_i.
    OpPtr two_index(int i, int j) const;
    // One-index symmetry: the reflection-group part weighted by unit root
    // coordinates, epsilon sum_r kappa_r (alpha_l / |alpha|) tilde(r).
    OpPtr one_index(int l) const;
    // Common bracket of the one-index symmetries, [O_1, O_2].
    OpPtr one_index_bracket() const;
    // Three-index symmetry.
    OpPtr three_index() const;

    // so(3)-style combinations of the two-index symmetries.
    OpPtr o_zero() const;
    OpPtr o_plus() const;
    OpPtr o_minus() const;
    // Ladder elements (anticommutators with o_zero)/2; hexagonal preset only.
    OpPtr ladder_plus() const;
    OpPtr ladder_minus() const;

    // Formal coefficients of one_index(l) over the reflection lifts.
    std::vector<std::pair<int, ParamScalar>> one_index_terms(int l) const;

    // Name lookup backing the expression language. Throws ScopeMismatch for
    // names outside this preset and std::invalid_argument for unknown names.
    OpPtr lookup(std::string_view name) const;
    static const std::vector<std::string>& operator_names();

    // Diagnostic variant of dunkl(1): the sign of the third-root term is
    // flipped and the divisor of the fourth-root term loses one unit in its
    // last coordinate. Requires at least four positive roots.
    OpPtr dunkl2_variant() const;

private:
    OpPtr named(const std::string& key, bool memoize, const std::function<OpPtr()>& build) const;
    OpPtr root_term(int k) const;
    void require_root(int k, std::string_view name) const;

    RootSystemPreset preset_;
    Signature sig_;
    mutable std::map<std::string, OpPtr, std::less<>> memo_;
};

} // namespace dunkl
