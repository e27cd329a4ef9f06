#include "defarg/argumentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "defarg/forget.hpp"

namespace defarg {

namespace {

void sort_unique(std::vector<Literal>& ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
}

bool has_complementary_pair(const std::vector<Literal>& sorted) {
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].atom == sorted[i - 1].atom)
            return true;
    return false;
}

}  // namespace

Term::Term(std::initializer_list<Literal> literals) : Term(std::vector<Literal>(literals)) {}

Term::Term(std::vector<Literal> literals) : literals_(std::move(literals)) {
    sort_unique(literals_);
    if (has_complementary_pair(literals_))
        throw std::invalid_argument("term contains a complementary pair");
}

std::optional<Term> Term::make(std::vector<Literal> literals) {
    sort_unique(literals);
    if (has_complementary_pair(literals))
        return std::nullopt;
    Term t;
    t.literals_ = std::move(literals);
    return t;
}

Term Term::positive(const std::vector<std::string>& names) {
    std::vector<Literal> ls;
    ls.reserve(names.size());
    for (const auto& n : names)
        ls.push_back(pos(n));
    return Term(std::move(ls));
}

bool Term::contains(const Literal& l) const { return std::binary_search(literals_.begin(), literals_.end(), l); }

bool Term::is_subset_of(const Term& other) const {
    return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(), literals_.end());
}

bool Term::compatible_with(const Term& other) const {
    return std::none_of(literals_.begin(), literals_.end(),
                        [&](const Literal& l) { return other.contains(l.negated()); });
}

std::optional<Term> Term::join(const Term& other) const {
    std::vector<Literal> ls = literals_;
    ls.insert(ls.end(), other.literals_.begin(), other.literals_.end());
    return make(std::move(ls));
}

std::optional<Term> Term::with(const Literal& l) const {
    if (contains(l.negated()))
        return std::nullopt;
    Term t = *this;
    auto it = std::lower_bound(t.literals_.begin(), t.literals_.end(), l);
    if (it == t.literals_.end() || *it != l)
        t.literals_.insert(it, l);
    return t;
}

Term Term::positive_part() const {
    Term t;
    std::copy_if(literals_.begin(), literals_.end(), std::back_inserter(t.literals_),
                 [](const Literal& l) { return l.positive; });
    return t;
}

std::vector<std::string> Term::positive_names() const {
    std::vector<std::string> out;
    for (const auto& l : literals_)
        if (l.positive)
            out.push_back(l.atom);
    return out;
}

std::string Term::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        if (i)
            out += ", ";
        out += literals_[i].to_string();
    }
    return out + "}";
}

namespace {

/// Literals of `term` as solver assumptions. Assumptions absent from the
/// theory are unconstrained and can be dropped.
std::vector<Lit> solver_lits(const Cnf& cnf, const Term& term) {
    std::vector<Lit> lits;
    for (const auto& l : term) {
        if (auto v = cnf.find(l.atom))
            lits.push_back(l.positive ? *v : -*v);
    }
    return lits;
}

std::vector<Term> negated_clauses(const ClauseSet& clauses) {
    std::vector<Term> out;
    for (const auto& c : clauses) {
        std::vector<Literal> ls;
        for (const auto& l : c)
            ls.push_back(l.negated());
        out.push_back(Term(std::move(ls)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> minimal_inconsistent(const Cnf& cnf, const ArgumentationSystem& system) {
    return negated_clauses(project(cnf, [&](const std::string& n) { return system.is_assumption(n); }));
}

bool hit(const Term& current, const Term& contradiction) { return !current.compatible_with(contradiction); }

/// Extends `current` by negated literals until it is incompatible with
/// every contradiction; collects each reachable result.
void extend_to_safe(const Term& current, const std::vector<Term>& contradictions, std::set<Term>& visited,
                    std::vector<Term>& out) {
    if (!visited.insert(current).second)
        return;
    auto open = std::find_if(contradictions.begin(), contradictions.end(),
                             [&](const Term& b) { return !hit(current, b); });
    if (open == contradictions.end()) {
        out.push_back(current);
        return;
    }
    for (const auto& l : *open) {
        if (current.contains(l))
            continue;
        if (auto next = current.with(l.negated()))
            extend_to_safe(*next, contradictions, visited, out);
    }
}

void keep_minimal(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    std::vector<Term> minimal;
    for (auto& t : terms)
        if (std::none_of(minimal.begin(), minimal.end(), [&](const Term& m) { return m.is_subset_of(t); }))
            minimal.push_back(std::move(t));
    std::sort(minimal.begin(), minimal.end());
    terms = std::move(minimal);
}

}  // namespace

bool is_inconsistent_term(const ArgumentationSystem& system, const Term& term) {
    return !system.cnf().satisfiable(solver_lits(system.cnf(), term));
}

std::vector<Term> minimal_contradictions(const ArgumentationSystem& system) {
    return minimal_inconsistent(system.cnf(), system);
}

bool is_safe_term(std::span<const Term> contradictions, const Term& term) {
    return std::none_of(contradictions.begin(), contradictions.end(),
                        [&](const Term& b) { return b.compatible_with(term); });
}

bool is_safe_term(const ArgumentationSystem& system, const Term& term) {
    auto mics = minimal_contradictions(system);
    return is_safe_term(mics, term);
}

std::vector<Term> supporting_arguments(const ArgumentationSystem& system, const Formula& hypothesis) {
    const auto contradictions = minimal_contradictions(system);
    Cnf refuted = system.cnf();
    refuted.add_formula(!hypothesis);
    // Minimal terms that entail the hypothesis, safe or not.
    const auto quasi = minimal_inconsistent(refuted, system);

    std::vector<Term> found;
    for (const auto& q : quasi) {
        bool inconsistent = std::any_of(contradictions.begin(), contradictions.end(),
                                        [&](const Term& b) { return b.is_subset_of(q); });
        if (inconsistent)
            continue;
        std::vector<Term> open;
        for (const auto& b : contradictions)
            if (b.compatible_with(q))
                open.push_back(b);
        std::set<Term> visited;
        extend_to_safe(q, open, visited, found);
    }
    keep_minimal(found);
    return found;
}

bool supports_with_positive_part(const ArgumentationSystem& system, const Formula& hypothesis,
                                 const std::vector<std::string>& anchor) {
    std::vector<Literal> total;
    for (const auto& a : system.assumptions()) {
        bool in_anchor = std::find(anchor.begin(), anchor.end(), a) != anchor.end();
        total.push_back({a, in_anchor});
    }
    Term term(std::move(total));
    if (is_inconsistent_term(system, term))
        return false;
    Cnf refuted = system.cnf();
    refuted.add_formula(!hypothesis);
    return !refuted.satisfiable(solver_lits(refuted, term));
}

bool is_structure(const ArgumentationSystem& system, const Term& anchor, std::span<const Literal> irrelevant) {
    if (is_inconsistent_term(system, anchor))
        return false;
    for (const auto& l : irrelevant) {
        auto extended = anchor.with(l);
        if (!extended || is_inconsistent_term(system, *extended))
            return false;
    }
    return true;
}

std::string CJPair::to_string() const {
    if (sink)
        return "<{false}, {}>";
    auto list = [](const std::vector<std::string>& xs) {
        std::string s = "{";
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? ", " : "") + xs[i];
        return s + "}";
    };
    return "<" + list(anchor) + ", " + list(irrelevant) + ">";
}

InconsistencyTest::InconsistencyTest(const ArgumentationSystem& system, InconsistencyBackend backend)
    : system_(&system), backend_(backend) {
    if (backend_ == InconsistencyBackend::minimal_contradictions)
        contradictions_ = minimal_contradictions(system);
}

bool InconsistencyTest::operator()(const Term& term) const {
    if (backend_ == InconsistencyBackend::satisfiability)
        return is_inconsistent_term(*system_, term);
    return std::any_of(contradictions_.begin(), contradictions_.end(),
                       [&](const Term& b) { return b.is_subset_of(term); });
}

bool is_structure(const InconsistencyTest& inconsistent, const CJPair& pair) {
    if (pair.sink)
        return false;
    const Term anchor = pair.anchor_term();
    if (inconsistent(anchor))
        return false;
    return std::none_of(pair.irrelevant.begin(), pair.irrelevant.end(),
                        [&](const std::string& j) { return inconsistent(*anchor.with(pos(j))); });
}

bool is_structure(const ArgumentationSystem& system, const CJPair& pair) {
    return is_structure(InconsistencyTest(system, InconsistencyBackend::satisfiability), pair);
}

bool is_applicable(const InconsistencyTest& inconsistent, const DefaultAssumption& assumption,
                   const Term& anchor) {
    if (!inconsistent(*anchor.with(pos(assumption.prerequisite))))
        return false;
    return std::none_of(assumption.justifications.begin(), assumption.justifications.end(),
                        [&](const std::string& j) { return inconsistent(*anchor.with(pos(j))); });
}

bool is_applicable(const ArgumentationSystem& system, const DefaultAssumption& assumption, const Term& anchor) {
    return is_applicable(InconsistencyTest(system, InconsistencyBackend::satisfiability), assumption, anchor);
}

CJPair apply_default(const InconsistencyTest& inconsistent, const DefaultAssumption& assumption,
                     const CJPair& pair) {
    if (!is_structure(inconsistent, pair))
        return CJPair::bottom();
    if (!is_applicable(inconsistent, assumption, pair.anchor_term()))
        return pair;
    CJPair next = pair;
    next.anchor.push_back(assumption.consequence);
    next.irrelevant.insert(next.irrelevant.end(), assumption.justifications.begin(),
                           assumption.justifications.end());
    for (auto* v : {&next.anchor, &next.irrelevant}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return next;
}

CJPair apply_default(const ArgumentationSystem& system, const DefaultAssumption& assumption, const CJPair& pair) {
    return apply_default(InconsistencyTest(system, InconsistencyBackend::satisfiability), assumption, pair);
}

}  // namespace defarg
