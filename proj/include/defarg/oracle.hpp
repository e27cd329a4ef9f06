#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "defarg/default_theory.hpp"
#include "defarg/formula.hpp"

namespace defarg {

/// An extension represented by its finite base: facts plus the
/// consequences of the generating defaults.
struct CandidateExtension {
    /// Names in default order.
    std::vector<std::string> generating_defaults;
    TheorySet base;
    /// Marker for the single extension of a theory with inconsistent facts.
    bool inconsistent = false;
};

struct OracleOptions {
    std::size_t max_defaults = 12;
};

/// Guess-and-verify check of `generating` (default names) against the
/// fixpoint definition of an extension. Unknown names throw LookupError.
bool is_extension(const DefaultTheory& theory, const std::vector<std::string>& generating);

/// Every extension, one per equivalence class of bases, ordered by
/// generating set. Throws BoundExceeded above `max_defaults` defaults.
std::vector<CandidateExtension> oracle_extensions(const DefaultTheory& theory, OracleOptions options = {});

/// Consistent extensions only; the inconsistent marker contributes nothing.
bool oracle_credulous(const std::vector<CandidateExtension>& extensions, const Formula& hypothesis);
bool oracle_skeptical(const std::vector<CandidateExtension>& extensions, const Formula& hypothesis);

}  // namespace defarg
