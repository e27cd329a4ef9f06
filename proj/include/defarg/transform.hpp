#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "defarg/default_theory.hpp"
#include "defarg/formula.hpp"
#include "defarg/sat.hpp"

namespace defarg {

enum class AssumptionKind { prerequisite, justification, consequence };

/// The fresh propositions labelling one default: the negated prerequisite,
/// each justification, and the consequence.
struct DefaultAssumption {
    std::string default_name;
    std::string prerequisite;
    std::vector<std::string> justifications;
    std::string consequence;
};

struct AssumptionRef {
    std::string default_name;
    AssumptionKind kind;
    /// 1-based justification index; 0 for the other kinds.
    std::size_t index = 0;
};

/// Assumption names per default, in default order. Names follow
/// `@<default>.p`, `@<default>.j<i>`, `@<default>.c`.
class AssumptionRegistry {
public:
    void add(const std::string& default_name, std::size_t justification_count);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<DefaultAssumption>& entries() const { return entries_; }

    /// Throws LookupError for an unknown default.
    const DefaultAssumption& of(std::string_view default_name) const;
    std::optional<AssumptionRef> lookup(std::string_view assumption) const;
    bool contains(std::string_view assumption) const { return refs_.count(std::string(assumption)) != 0; }

    const std::vector<std::string>& prerequisitional() const { return a_p_; }
    const std::vector<std::string>& justificational() const { return a_j_; }
    const std::vector<std::string>& consequential() const { return a_c_; }

private:
    std::vector<DefaultAssumption> entries_;
    std::unordered_map<std::string, std::size_t> by_default_;
    std::unordered_map<std::string, AssumptionRef> refs_;
    std::vector<std::string> a_p_, a_j_, a_c_;
};

/// `index` must be given exactly when `kind` is justification. Throws
/// LookupError for an unknown default or an index out of range.
std::string assumption_of(const AssumptionRegistry& registry, std::string_view default_name,
                          AssumptionKind kind, std::optional<std::size_t> index = std::nullopt);

/// A theory together with a distinguished set of assumption propositions.
/// Systems built by `translate` also carry the default registry and the
/// source vocabulary; the theory lists the facts first, then each default's
/// implications in default order.
class ArgumentationSystem {
public:
    /// General system over explicit assumptions.
    ArgumentationSystem(TheorySet theory, std::vector<std::string> assumptions);

    ArgumentationSystem(TheorySet theory, AssumptionRegistry registry, Vocabulary source_vars,
                        std::size_t fact_count);

    const TheorySet& theory() const { return theory_; }
    /// A in registry order (A_p, then A_j, then A_c) or as given.
    const std::vector<std::string>& assumptions() const { return assumptions_; }
    bool is_assumption(std::string_view name) const;
    const AssumptionRegistry& registry() const { return registry_; }
    const Vocabulary& source_vars() const { return source_vars_; }
    std::size_t fact_count() const { return fact_count_; }

    /// Clause form of the theory, compiled on first use and shared between
    /// copies. Safe to call from several threads.
    const Cnf& cnf() const;

private:
    void compile();

    TheorySet theory_;
    std::vector<std::string> assumptions_;
    std::unordered_set<std::string> assumption_index_;
    AssumptionRegistry registry_;
    Vocabulary source_vars_;
    std::size_t fact_count_ = 0;
    struct Compiled {
        std::once_flag once;
        std::unique_ptr<const Cnf> cnf;
    };
    std::shared_ptr<Compiled> compiled_ = std::make_shared<Compiled>();
};

/// Linear embedding: the facts plus, per default d with k justifications,
///   @d.p -> !pre,  @d.j<i> -> jus_i (i = 1..k),  @d.c -> con.
ArgumentationSystem translate(const DefaultTheory& theory);

/// The system as theory-file text, assumption implications written as facts.
std::string to_theory_text(const ArgumentationSystem& system);

}  // namespace defarg
