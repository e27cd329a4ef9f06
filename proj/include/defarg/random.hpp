#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "defarg/cnf.hpp"
#include "defarg/default_theory.hpp"
#include "defarg/formula.hpp"
#include "defarg/transform.hpp"

namespace defarg {

/// Deterministic generators for property tests and `selftest`. Picks use
/// plain modulo on the engine output so sequences match across standard
/// libraries.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) { return n ? static_cast<std::size_t>(engine_() % n) : 0; }
    bool coin() { return engine_() & 1; }
    std::uint64_t next() { return engine_(); }

    /// Proposition names `p0`..`p<n-1>`.
    static std::vector<std::string> names(std::size_t n, const std::string& prefix = "p");

    Literal literal(const std::vector<std::string>& vars);
    /// 1..max_len literals over distinct variables.
    Clause clause(const std::vector<std::string>& vars, std::size_t max_len);
    ClauseSet clauses(const std::vector<std::string>& vars, std::size_t max_count, std::size_t max_len);
    /// Random formula with at most `depth` nested connectives.
    Formula formula(const std::vector<std::string>& vars, std::size_t depth);

private:
    std::mt19937_64 engine_;
};

struct TheoryShape {
    std::size_t max_vars = 5;
    std::size_t max_defaults = 5;
    std::size_t max_justifications = 2;
    std::size_t max_facts = 3;
    std::size_t max_clause_length = 3;
    std::size_t formula_depth = 2;
};

/// Facts are clauses; default parts are small formulas. Prerequisites are
/// `true` about a third of the time.
DefaultTheory random_theory(Generator& gen, const TheoryShape& shape = {});

/// General system over `assumption_count` assumptions `@a0`.. and a few
/// ordinary variables, the theory given as random clauses.
ArgumentationSystem random_system(Generator& gen, std::size_t assumption_count, std::size_t var_count,
                                  std::size_t clause_count);

}  // namespace defarg
