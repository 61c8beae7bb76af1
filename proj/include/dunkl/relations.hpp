#pragma once

#include "dunkl/catalogue.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

// One testable equality lhs = rhs. Probing checks carry several candidates;
// the check passes when at least one candidate holds.
struct RelationCandidate {
    std::string label;
    OpPtr lhs;
    OpPtr rhs;
};

struct RelationCheck {
    std::string name;
    std::string statement;
    std::vector<RelationCandidate> candidates;
    // Substitute kappa1 = kappa2 = 0 before comparing.
    bool kappa_zero = false;
};

// Registry entry: a family of checks sharing one citation and scope.
struct RelationSpec {
    std::string id;
    std::string title;
    std::string citation;
    std::vector<std::string> presets;
    std::function<std::vector<RelationCheck>(const Catalogue&)> build;

    bool in_scope(std::string_view preset_name) const;
};

const std::vector<RelationSpec>& relation_registry();

struct CheckReport {
    std::string relation;
    std::string check;
    std::string statement;
    std::string citation;
    bool pass = false;
    // Labels of the candidates that held, comma separated; empty for
    // single-candidate checks.
    std::string candidate;
    int max_degree = 0;
    std::size_t basis_size = 0;
    std::optional<Witness> witness;
    long long millis = 0;

    std::string str() const;
    // One-line structured record (JSON object).
    std::string record() const;
};

struct VerifyOptions {
    int max_degree = 4;
    int jobs = 1;
    // Numeric parameter values; symbolic when absent.
    std::optional<std::pair<Rational, Rational>> kappa;
    // Restrict to a single registry id, e.g. "R8".
    std::optional<std::string> only_relation;
};

// Runs every in-scope registry entry against the catalogue's preset.
// Reports come back in registry order. Throws ScopeMismatch when
// only_relation exists but is not defined for the preset, and
// std::invalid_argument when it names no registry entry.
std::vector<CheckReport> verify_relations(const Catalogue& cat, const VerifyOptions& opts);

bool all_pass(const std::vector<CheckReport>& reports);

} // namespace dunkl
