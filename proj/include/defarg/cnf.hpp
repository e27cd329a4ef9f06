#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "defarg/formula.hpp"

namespace defarg {

struct Literal {
    std::string atom;
    bool positive = true;

    Literal negated() const { return {atom, !positive}; }
    std::string to_string() const { return positive ? atom : "!" + atom; }

    /// Orders by proposition name, then negative before positive.
    auto operator<=>(const Literal&) const = default;
};

inline Literal pos(std::string atom) { return {std::move(atom), true}; }
inline Literal neg(std::string atom) { return {std::move(atom), false}; }

/// Sorted, duplicate-free disjunction of literals. Empty means falsum.
using Clause = std::vector<Literal>;
using ClauseSet = std::vector<Clause>;

std::string to_string(const Clause& c);
Formula to_formula(const Clause& c);
TheorySet to_theory(const ClauseSet& clauses);

/// Sort and dedupe every clause, drop tautologies and subsumed clauses, and
/// sort the set lexicographically.
void canonicalize(ClauseSet& clauses);

bool subsumes(const Clause& a, const Clause& b);

/// Fresh proposition supply for definitional translation. Names are
/// `@cnf<n>` and stay out of the user namespace.
class FreshNames {
public:
    std::string next() {
        for (;;) {
            std::string name = "@cnf" + std::to_string(++counter_);
            if (!taken_ || !taken_(name))
                return name;
        }
    }

    /// Skip names for which `taken` holds.
    void avoid(std::function<bool(const std::string&)> taken) { taken_ = std::move(taken); }

private:
    std::size_t counter_ = 0;
    std::function<bool(const std::string&)> taken_;
};

struct CnfOptions {
    /// Formulas whose distributed form would exceed this many literals get
    /// a definitional translation instead.
    std::size_t definitional_threshold = 64;
};

/// Equivalent clause form by distribution; above the threshold an
/// equisatisfiable definitional form over fresh `@cnf` propositions whose
/// existential closure is equivalent to `f`.
ClauseSet to_cnf(const Formula& f, FreshNames& fresh, const CnfOptions& options = {});
ClauseSet to_cnf(const Formula& f);

}  // namespace defarg
