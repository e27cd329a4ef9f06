#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "defarg/argumentation.hpp"
#include "defarg/cnf.hpp"
#include "defarg/transform.hpp"

namespace defarg {

/// Anchor of an accessible structure: a set of consequential assumptions,
/// plus one generating sequence of default names reaching it.
struct DefaultTerm {
    std::vector<std::string> anchor;
    std::vector<std::string> sequence;

    Term term() const { return Term::positive(anchor); }
};

struct ExtensionHandle {
    DefaultTerm default_term;
    /// Projection of theory + anchor onto the source vocabulary.
    ClauseSet marginal;
    /// Generating defaults in default order.
    std::vector<std::string> generating_defaults;
};

enum class TheoryClass { inconsistent_facts, no_extension, unique_trivial, extensions };

struct TheoryClassification {
    TheoryClass kind;
    /// Number of default terms for `extensions`; 1 for `unique_trivial`.
    std::size_t count = 0;

    /// `inconsistent-facts`, `no-extension`, `unique-trivial`, `extensions(n)`.
    std::string to_string() const;
    std::string label() const;
};

struct ReasonerOptions {
    /// Defaults to the minimal-contradiction backend for systems with at most
    /// this many assumptions, satisfiability calls above.
    std::size_t contradiction_index_limit = 12;
    std::optional<InconsistencyBackend> backend;
    /// Disable route memoization and record every generating sequence of
    /// every visited anchor.
    bool trace_routes = false;
};

/// Default terms and consequence queries over one argumentation system
/// produced by `translate`. The search runs once in the constructor; all
/// member functions are const and safe to call concurrently.
class DefaultReasoner {
public:
    explicit DefaultReasoner(ArgumentationSystem system, ReasonerOptions options = {});
    DefaultReasoner(const DefaultReasoner&) = delete;
    DefaultReasoner& operator=(const DefaultReasoner&) = delete;

    const ArgumentationSystem& system() const { return system_; }
    InconsistencyBackend backend() const { return inconsistent_.backend(); }

    /// Sorted by anchor.
    const std::vector<DefaultTerm>& default_terms() const { return terms_; }
    TheoryClassification classify() const;

    /// Throws LookupError when `anchor` is not a default term.
    ExtensionHandle extension_of(const std::vector<std::string>& anchor) const;

    /// Theory + anchor entails `hypothesis`, without materializing the
    /// marginal. Throws QueryError for assumption-namespace propositions.
    bool in_extension(const std::vector<std::string>& anchor, const Formula& hypothesis) const;

    /// Holds in some extension. Decided through supporting arguments and
    /// cross-checked against direct entailment; a disagreement throws
    /// InvariantViolation.
    bool credulous(const Formula& hypothesis) const;

    /// Holds in every extension; vacuously true without extensions.
    bool skeptical(const Formula& hypothesis) const;

    /// With `trace_routes`: every generating sequence found per visited
    /// anchor (intermediate anchors included), keyed by sorted anchor.
    const std::map<std::vector<std::string>, std::vector<std::vector<std::string>>>& routes() const {
        return routes_;
    }

private:
    void search();
    void visit(std::vector<std::size_t>& sequence, std::vector<bool>& used, std::vector<std::string>& anchor);
    void check_query(const Formula& hypothesis) const;
    const DefaultTerm* find_term(const std::vector<std::string>& anchor) const;

    ArgumentationSystem system_;
    ReasonerOptions options_;
    InconsistencyTest inconsistent_;
    bool facts_consistent_ = true;
    std::vector<DefaultTerm> terms_;
    std::map<std::vector<std::string>, std::vector<std::vector<std::string>>> routes_;
    std::set<std::vector<bool>> visited_;
};

std::vector<DefaultTerm> default_terms(const ArgumentationSystem& system);
TheoryClassification classify(const ArgumentationSystem& system);
ExtensionHandle extension_of(const ArgumentationSystem& system, const std::vector<std::string>& anchor);
bool in_extension(const ArgumentationSystem& system, const std::vector<std::string>& anchor,
                  const Formula& hypothesis);
bool credulous(const ArgumentationSystem& system, const Formula& hypothesis);
bool skeptical(const ArgumentationSystem& system, const Formula& hypothesis);

}  // namespace defarg
