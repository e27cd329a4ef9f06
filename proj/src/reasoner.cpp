#include "defarg/reasoner.hpp"

#include <algorithm>

#include "defarg/error.hpp"
#include "defarg/forget.hpp"

namespace defarg {

std::string TheoryClassification::label() const {
    switch (kind) {
    case TheoryClass::inconsistent_facts: return "inconsistent-facts";
    case TheoryClass::no_extension: return "no-extension";
    case TheoryClass::unique_trivial: return "unique-trivial";
    case TheoryClass::extensions: return "extensions";
    }
    return "";
}

std::string TheoryClassification::to_string() const {
    if (kind == TheoryClass::extensions)
        return "extensions(" + std::to_string(count) + ")";
    return label();
}

namespace {

InconsistencyBackend choose_backend(const ArgumentationSystem& system, const ReasonerOptions& options) {
    if (options.backend)
        return *options.backend;
    return system.assumptions().size() <= options.contradiction_index_limit
               ? InconsistencyBackend::minimal_contradictions
               : InconsistencyBackend::satisfiability;
}

std::vector<Lit> anchor_lits(const Cnf& cnf, const std::vector<std::string>& anchor) {
    std::vector<Lit> lits;
    for (const auto& a : anchor)
        if (auto v = cnf.find(a))
            lits.push_back(*v);
    return lits;
}

}  // namespace

DefaultReasoner::DefaultReasoner(ArgumentationSystem system, ReasonerOptions options)
    : system_(std::move(system)), options_(options), inconsistent_(system_, choose_backend(system_, options_)) {
    search();
}

void DefaultReasoner::search() {
    facts_consistent_ = system_.cnf().satisfiable();
    if (!facts_consistent_)
        return;
    std::vector<std::size_t> sequence;
    std::vector<bool> used(system_.registry().size(), false);
    std::vector<std::string> anchor;
    visit(sequence, used, anchor);
    std::sort(terms_.begin(), terms_.end(),
              [](const DefaultTerm& a, const DefaultTerm& b) { return a.anchor < b.anchor; });
}

// Depth-first over application orders. Every node is a structure: the
// anchor stays consistent with each used justification. A node where no
// unused default is applicable is accessible and its anchor a default term.
void DefaultReasoner::visit(std::vector<std::size_t>& sequence, std::vector<bool>& used,
                            std::vector<std::string>& anchor) {
    const auto& entries = system_.registry().entries();
    if (options_.trace_routes) {
        std::vector<std::string> names;
        for (auto i : sequence)
            names.push_back(entries[i].default_name);
        routes_[anchor].push_back(std::move(names));
    } else if (!visited_.insert(used).second) {
        return;
    }

    const Term current = Term::positive(anchor);
    std::vector<std::size_t> applicable;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!used[i] && is_applicable(inconsistent_, entries[i], current))
            applicable.push_back(i);

    if (applicable.empty()) {
        if (!find_term(anchor)) {
            DefaultTerm t{anchor, {}};
            for (auto i : sequence)
                t.sequence.push_back(entries[i].default_name);
            terms_.push_back(std::move(t));
        }
        return;
    }

    for (auto i : applicable) {
        std::vector<std::string> next = anchor;
        next.insert(std::upper_bound(next.begin(), next.end(), entries[i].consequence), entries[i].consequence);
        CJPair pair{next, {}, false};
        used[i] = true;
        for (std::size_t u = 0; u < entries.size(); ++u)
            if (used[u])
                pair.irrelevant.insert(pair.irrelevant.end(), entries[u].justifications.begin(),
                                       entries[u].justifications.end());
        if (is_structure(inconsistent_, pair)) {
            sequence.push_back(i);
            visit(sequence, used, next);
            sequence.pop_back();
        }
        used[i] = false;
    }
}

const DefaultTerm* DefaultReasoner::find_term(const std::vector<std::string>& anchor) const {
    for (const auto& t : terms_)
        if (t.anchor == anchor)
            return &t;
    return nullptr;
}

TheoryClassification DefaultReasoner::classify() const {
    if (!facts_consistent_)
        return {TheoryClass::inconsistent_facts, 0};
    if (terms_.empty())
        return {TheoryClass::no_extension, 0};
    if (terms_.size() == 1 && terms_.front().anchor.empty())
        return {TheoryClass::unique_trivial, 1};
    return {TheoryClass::extensions, terms_.size()};
}

ExtensionHandle DefaultReasoner::extension_of(const std::vector<std::string>& anchor) const {
    std::vector<std::string> sorted = anchor;
    std::sort(sorted.begin(), sorted.end());
    const DefaultTerm* term = find_term(sorted);
    if (!term)
        throw LookupError("not a default term: " + Term::positive(sorted).to_string());

    ExtensionHandle h;
    h.default_term = *term;
    Cnf cnf = system_.cnf();
    for (const auto& a : sorted)
        cnf.add_unit(pos(a));
    const auto& source = system_.source_vars();
    h.marginal = project(cnf, [&](const std::string& n) { return source.count(n) != 0; });
    for (const auto& entry : system_.registry().entries())
        if (std::binary_search(sorted.begin(), sorted.end(), entry.consequence))
            h.generating_defaults.push_back(entry.default_name);
    return h;
}

void DefaultReasoner::check_query(const Formula& hypothesis) const {
    for (const auto& name : hypothesis.vocabulary())
        if (is_assumption_name(name) || system_.is_assumption(name))
            throw QueryError("query mentions assumption '" + name + "'");
}

bool DefaultReasoner::in_extension(const std::vector<std::string>& anchor, const Formula& hypothesis) const {
    check_query(hypothesis);
    Cnf cnf = system_.cnf();
    cnf.add_formula(!hypothesis);
    return !cnf.satisfiable(anchor_lits(cnf, anchor));
}

bool DefaultReasoner::credulous(const Formula& hypothesis) const {
    check_query(hypothesis);
    bool via_support = std::any_of(terms_.begin(), terms_.end(), [&](const DefaultTerm& t) {
        return supports_with_positive_part(system_, hypothesis, t.anchor);
    });
    bool direct = std::any_of(terms_.begin(), terms_.end(),
                              [&](const DefaultTerm& t) { return in_extension(t.anchor, hypothesis); });
    if (via_support != direct)
        throw InvariantViolation("credulous answers disagree for " + hypothesis.to_string());
    return direct;
}

bool DefaultReasoner::skeptical(const Formula& hypothesis) const {
    check_query(hypothesis);
    bool via_support = std::all_of(terms_.begin(), terms_.end(), [&](const DefaultTerm& t) {
        return supports_with_positive_part(system_, hypothesis, t.anchor);
    });
    bool direct = std::all_of(terms_.begin(), terms_.end(),
                              [&](const DefaultTerm& t) { return in_extension(t.anchor, hypothesis); });
    if (via_support != direct)
        throw InvariantViolation("skeptical answers disagree for " + hypothesis.to_string());
    return direct;
}

std::vector<DefaultTerm> default_terms(const ArgumentationSystem& system) {
    return DefaultReasoner(system).default_terms();
}

TheoryClassification classify(const ArgumentationSystem& system) { return DefaultReasoner(system).classify(); }

ExtensionHandle extension_of(const ArgumentationSystem& system, const std::vector<std::string>& anchor) {
    return DefaultReasoner(system).extension_of(anchor);
}

bool in_extension(const ArgumentationSystem& system, const std::vector<std::string>& anchor,
                  const Formula& hypothesis) {
    return DefaultReasoner(system).in_extension(anchor, hypothesis);
}

bool credulous(const ArgumentationSystem& system, const Formula& hypothesis) {
    return DefaultReasoner(system).credulous(hypothesis);
}

bool skeptical(const ArgumentationSystem& system, const Formula& hypothesis) {
    return DefaultReasoner(system).skeptical(hypothesis);
}

}  // namespace defarg
