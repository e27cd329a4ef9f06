#include "defarg/forget.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>

namespace defarg {

namespace {

using Clauses = std::vector<IntClause>;

int var_of(Lit l) { return std::abs(l); }

bool int_subsumes(const IntClause& a, const IntClause& b) {
    return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end(), lit_less);
}

bool contains(const IntClause& c, Lit l) { return std::binary_search(c.begin(), c.end(), l, lit_less); }

/// Resolvent of p (containing v) and n (containing -v); nothing if tautological.
std::optional<IntClause> resolve(const IntClause& p, const IntClause& n, int v) {
    IntClause r;
    r.reserve(p.size() + n.size());
    std::merge(p.begin(), p.end(), n.begin(), n.end(), std::back_inserter(r), lit_less);
    r.erase(std::remove_if(r.begin(), r.end(), [v](Lit l) { return var_of(l) == v; }), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] == -r[i - 1])
            return std::nullopt;
    return r;
}

/// Dedupe and drop subsumed clauses.
void reduce(Clauses& cs) {
    std::sort(cs.begin(), cs.end(), [](const IntClause& a, const IntClause& b) {
        return a.size() != b.size() ? a.size() < b.size()
                                    : std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    Clauses kept;
    for (auto& c : cs) {
        if (std::none_of(kept.begin(), kept.end(), [&](const IntClause& k) { return int_subsumes(k, c); }))
            kept.push_back(std::move(c));
    }
    cs = std::move(kept);
}

bool has_empty(const Clauses& cs) {
    return std::any_of(cs.begin(), cs.end(), [](const IntClause& c) { return c.empty(); });
}

/// Adds `r` unless subsumed; removes what it subsumes.
void add_reduced(Clauses& cs, IntClause r) {
    for (const auto& c : cs)
        if (int_subsumes(c, r))
            return;
    cs.erase(std::remove_if(cs.begin(), cs.end(), [&](const IntClause& c) { return int_subsumes(r, c); }),
             cs.end());
    cs.push_back(std::move(r));
}

/// Davis-Putnam elimination of each variable in `drop`: existential
/// quantification by clause resolution.
void eliminate(Clauses& cs, std::set<int> drop) {
    reduce(cs);
    while (!drop.empty() && !has_empty(cs)) {
        // Cheapest variable first; ties go to the lowest index.
        int best = 0;
        long best_cost = 0;
        for (int v : drop) {
            long p = 0, n = 0;
            for (const auto& c : cs) {
                if (contains(c, v))
                    ++p;
                else if (contains(c, -v))
                    ++n;
            }
            long cost = p * n - p - n;
            if (best == 0 || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        drop.erase(best);
        Clauses pos, neg, rest;
        for (auto& c : cs) {
            if (contains(c, best))
                pos.push_back(std::move(c));
            else if (contains(c, -best))
                neg.push_back(std::move(c));
            else
                rest.push_back(std::move(c));
        }
        for (const auto& p : pos)
            for (const auto& n : neg)
                if (auto r = resolve(p, n, best))
                    rest.push_back(std::move(*r));
        cs = std::move(rest);
        reduce(cs);
    }
    if (has_empty(cs))
        cs = Clauses{IntClause{}};
}

/// Tison's consensus method: after resolving on every variable once, the
/// subsumption-minimal clauses are exactly the prime implicates.
void consensus_closure(Clauses& cs) {
    reduce(cs);
    if (has_empty(cs)) {
        cs = Clauses{IntClause{}};
        return;
    }
    std::set<int> vars;
    for (const auto& c : cs)
        for (Lit l : c)
            vars.insert(var_of(l));
    for (int v : vars) {
        Clauses pos, neg;
        for (const auto& c : cs) {
            if (contains(c, v))
                pos.push_back(c);
            else if (contains(c, -v))
                neg.push_back(c);
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                if (auto r = resolve(p, n, v)) {
                    if (r->empty()) {
                        cs = Clauses{IntClause{}};
                        return;
                    }
                    add_reduced(cs, std::move(*r));
                }
            }
        }
    }
}

ClauseSet to_clause_set(const Cnf& cnf, const Clauses& cs) {
    ClauseSet out;
    for (const auto& c : cs) {
        Clause cl;
        for (Lit l : c)
            cl.push_back(cnf.literal(l));
        out.push_back(std::move(cl));
    }
    canonicalize(out);
    return out;
}

}  // namespace

ClauseSet project(const Cnf& cnf, const std::function<bool(const std::string&)>& keep) {
    Clauses cs = cnf.clauses();
    std::set<int> drop;
    for (const auto& c : cs)
        for (Lit l : c)
            if (!keep(cnf.name(var_of(l))))
                drop.insert(var_of(l));
    eliminate(cs, std::move(drop));
    consensus_closure(cs);
    return to_clause_set(cnf, cs);
}

ClauseSet forget(const TheorySet& theory, const Vocabulary& keep) {
    Cnf cnf = Cnf::from(theory);
    return project(cnf, [&](const std::string& name) { return keep.count(name) != 0; });
}

ClauseSet prime_implicates(const ClauseSet& clauses) {
    Cnf cnf;
    cnf.add_clauses(clauses);
    Clauses cs = cnf.clauses();
    consensus_closure(cs);
    return to_clause_set(cnf, cs);
}

}  // namespace defarg
