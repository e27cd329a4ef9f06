#pragma once

#include <functional>
#include <string>

#include "defarg/cnf.hpp"
#include "defarg/formula.hpp"
#include "defarg/sat.hpp"

namespace defarg {

/// Marginal of `theory` on `keep`: the prime implicates of the theory that
/// mention only kept propositions. Th(result) = Th(theory) restricted to the
/// language of `keep`. Eliminates forgotten variables by clause resolution,
/// then closes under consensus; the result is subsumption-minimal, sorted,
/// and identical for equivalent inputs.
ClauseSet forget(const TheorySet& theory, const Vocabulary& keep);

/// Same, over an already compiled clause database.
ClauseSet project(const Cnf& cnf, const std::function<bool(const std::string&)>& keep);

/// All prime implicates of a clause set, canonical order. `{()}` when
/// unsatisfiable, empty when valid.
ClauseSet prime_implicates(const ClauseSet& clauses);

}  // namespace defarg
