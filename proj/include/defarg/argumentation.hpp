#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "defarg/cnf.hpp"
#include "defarg/formula.hpp"
#include "defarg/transform.hpp"

namespace defarg {

/// Set of assumption literals without a complementary pair. The empty term
/// is verum. Literals are kept sorted by (name, sign).
class Term {
public:
    Term() = default;

    /// Throws std::invalid_argument on a complementary pair.
    Term(std::initializer_list<Literal> literals);
    explicit Term(std::vector<Literal> literals);

    /// Nothing when the literals contain a complementary pair.
    static std::optional<Term> make(std::vector<Literal> literals);
    static Term positive(const std::vector<std::string>& names);

    const std::vector<Literal>& literals() const { return literals_; }
    std::size_t size() const { return literals_.size(); }
    bool empty() const { return literals_.empty(); }
    auto begin() const { return literals_.begin(); }
    auto end() const { return literals_.end(); }

    bool contains(const Literal& l) const;
    bool is_subset_of(const Term& other) const;
    /// The union of both is again a term.
    bool compatible_with(const Term& other) const;
    std::optional<Term> join(const Term& other) const;
    std::optional<Term> with(const Literal& l) const;

    /// Positive literals only.
    Term positive_part() const;
    std::vector<std::string> positive_names() const;

    /// `{@a, !@b}`; the empty term prints as `{}`.
    std::string to_string() const;

    auto operator<=>(const Term&) const = default;

private:
    std::vector<Literal> literals_;
};

/// Xi + term is unsatisfiable.
bool is_inconsistent_term(const ArgumentationSystem& system, const Term& term);

/// The subset-minimal inconsistent terms, sorted. `{{}}` when the theory
/// itself is unsatisfiable; empty when no term is inconsistent. Computed as
/// the negated prime implicates of the theory projected onto the assumptions.
std::vector<Term> minimal_contradictions(const ArgumentationSystem& system);

/// Every superset term is consistent, decided as: no minimal contradiction
/// is sign-compatible with `term`.
bool is_safe_term(std::span<const Term> contradictions, const Term& term);
bool is_safe_term(const ArgumentationSystem& system, const Term& term);

/// Subset-minimal safe terms that entail `hypothesis` together with the
/// theory, sorted.
std::vector<Term> supporting_arguments(const ArgumentationSystem& system, const Formula& hypothesis);

/// True iff some safe term with positive part exactly `anchor` entails
/// `hypothesis`. Supporting arguments are closed under consistent
/// extension, so this reduces to the total term anchor + negation of every
/// other assumption, whose only superset is itself.
bool supports_with_positive_part(const ArgumentationSystem& system, const Formula& hypothesis,
                                 const std::vector<std::string>& anchor);

/// Anchor term plus irrelevant literals: the anchor is consistent and each
/// irrelevant literal is individually consistent with it. Pairs of
/// irrelevant literals are not checked.
bool is_structure(const ArgumentationSystem& system, const Term& anchor, std::span<const Literal> irrelevant);

/// Consequence-justification pair: anchor of consequential assumptions and
/// a set of justificational ones, or the sink value.
struct CJPair {
    std::vector<std::string> anchor;
    std::vector<std::string> irrelevant;
    bool sink = false;

    static CJPair top() { return {}; }
    static CJPair bottom() { return {{}, {}, true}; }

    Term anchor_term() const { return Term::positive(anchor); }
    std::string to_string() const;

    friend bool operator==(const CJPair&, const CJPair&) = default;
};

enum class InconsistencyBackend { satisfiability, minimal_contradictions };

/// Decides membership of a term in the inconsistent terms, either by a
/// satisfiability call or by a superset test against the precomputed
/// minimal contradictions.
class InconsistencyTest {
public:
    InconsistencyTest(const ArgumentationSystem& system, InconsistencyBackend backend);

    bool operator()(const Term& term) const;
    InconsistencyBackend backend() const { return backend_; }
    const std::vector<Term>& contradictions() const { return contradictions_; }

private:
    const ArgumentationSystem* system_;
    InconsistencyBackend backend_;
    std::vector<Term> contradictions_;
};

bool is_structure(const InconsistencyTest& inconsistent, const CJPair& pair);
bool is_structure(const ArgumentationSystem& system, const CJPair& pair);

/// `assumption` is applicable w.r.t. `anchor`: the prerequisitional
/// assumption together with the anchor is inconsistent and no
/// justificational one is.
bool is_applicable(const InconsistencyTest& inconsistent, const DefaultAssumption& assumption,
                   const Term& anchor);
bool is_applicable(const ArgumentationSystem& system, const DefaultAssumption& assumption, const Term& anchor);

/// One application step on a CJ-pair: extends applicable structures, keeps
/// non-applicable structures, and sends everything else to the sink.
CJPair apply_default(const InconsistencyTest& inconsistent, const DefaultAssumption& assumption,
                     const CJPair& pair);
CJPair apply_default(const ArgumentationSystem& system, const DefaultAssumption& assumption, const CJPair& pair);

}  // namespace defarg
