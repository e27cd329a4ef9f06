#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "defarg/random.hpp"

namespace defarg {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The worked example theories checked against their known answers.
std::vector<CheckResult> golden_suite();

struct EquivalenceOptions {
    std::uint64_t seed = 1;
    std::size_t theories = 300;
    std::size_t probes = 10;
    TheoryShape shape;
    /// Also recompute default terms with the other inconsistency backend.
    bool compare_backends = true;
};

struct EquivalenceReport {
    std::size_t theories = 0;
    std::size_t extensions = 0;
    std::size_t queries = 0;
    /// Extension sets, classifications, backends or query answers differing.
    std::size_t disagreements = 0;
    /// Anchors reached by more than one generating sequence.
    std::size_t shared_anchors = 0;
    std::size_t permutation_violations = 0;
    std::vector<std::string> failures;

    bool ok() const { return disagreements == 0 && permutation_violations == 0; }
};

/// Random theories run through the reasoner (with route tracing) and the
/// brute-force oracle; every mismatch is counted and described.
EquivalenceReport oracle_equivalence(const EquivalenceOptions& options);

}  // namespace defarg
