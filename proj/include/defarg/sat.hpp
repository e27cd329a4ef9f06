#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "defarg/cnf.hpp"
#include "defarg/formula.hpp"

namespace defarg {

/// Signed variable index, `+v` or `-v` with `v >= 1`.
using Lit = int;
using IntClause = std::vector<Lit>;

/// Integer clause database with a name table. Variables are numbered in
/// interning order; `Cnf::from` interns the vocabulary sorted by name so
/// branching on the lowest index is branching on the lowest name.
class Cnf {
public:
    Cnf() = default;

    static Cnf from(const TheorySet& theory, const CnfOptions& options = {});

    int var(std::string_view name);
    std::optional<int> find(std::string_view name) const;
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v - 1)]; }
    int num_vars() const { return static_cast<int>(names_.size()); }

    Lit lit(const Literal& l);
    Literal literal(Lit l) const;

    /// Normalizes (sort by variable, dedupe) and drops tautologies.
    void add_clause(IntClause c);
    void add_clauses(const ClauseSet& clauses);
    void add_formula(const Formula& f);
    void add_unit(const Literal& l) { add_clause({lit(l)}); }

    const std::vector<IntClause>& clauses() const { return clauses_; }
    bool has_empty_clause() const { return has_empty_; }

    ClauseSet to_clause_set() const;

    bool satisfiable(std::span<const Lit> assumptions = {}) const;

    /// Model indexed by variable (entry 0 unused), or nothing when unsat.
    std::optional<std::vector<bool>> model(std::span<const Lit> assumptions = {}) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<IntClause> clauses_;
    bool has_empty_ = false;
    FreshNames fresh_;
    CnfOptions options_;
};

/// Orders literals by variable, negative before positive.
inline bool lit_less(Lit a, Lit b) {
    int va = a < 0 ? -a : a, vb = b < 0 ? -b : b;
    return va != vb ? va < vb : a < b;
}

/// Complete DPLL decision for `theory` plus unit literals.
bool is_satisfiable(const TheorySet& theory, std::span<const Literal> units = {});

/// theory |- f, decided as unsatisfiability of theory + !f.
bool entails(const TheorySet& theory, const Formula& f);

/// Both theories entail every member of the other.
bool equivalent(const TheorySet& a, const TheorySet& b);

}  // namespace defarg
