#include "defarg/cnf.hpp"

#include <algorithm>
#include <optional>

namespace defarg {

std::string to_string(const Clause& c) {
    if (c.empty())
        return "false";
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += " | ";
        out += c[i].to_string();
    }
    return out;
}

Formula to_formula(const Clause& c) {
    if (c.empty())
        return Formula::falsum();
    auto lit = [](const Literal& l) {
        auto a = Formula::atom(l.atom);
        return l.positive ? a : !a;
    };
    Formula f = lit(c.front());
    for (std::size_t i = 1; i < c.size(); ++i)
        f = f | lit(c[i]);
    return f;
}

TheorySet to_theory(const ClauseSet& clauses) {
    TheorySet t;
    for (const auto& c : clauses)
        t.insert(to_formula(c));
    return t;
}

namespace {

/// Sorts and dedupes; returns false for a tautology.
bool normalize(Clause& c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i].atom == c[i - 1].atom)
            return false;
    return true;
}

}  // namespace

bool subsumes(const Clause& a, const Clause& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void canonicalize(ClauseSet& clauses) {
    ClauseSet kept;
    for (auto& c : clauses)
        if (normalize(c))
            kept.push_back(std::move(c));
    // Shorter first so that a subsuming clause is kept before what it subsumes.
    std::sort(kept.begin(), kept.end(), [](const Clause& a, const Clause& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    ClauseSet minimal;
    for (auto& c : kept) {
        bool subsumed = std::any_of(minimal.begin(), minimal.end(),
                                    [&](const Clause& m) { return subsumes(m, c); });
        if (!subsumed)
            minimal.push_back(std::move(c));
    }
    std::sort(minimal.begin(), minimal.end());
    clauses = std::move(minimal);
}

namespace {

/// Negation normal form with constants folded away (the result is either
/// a constant or constant-free).
Formula nnf(const Formula& f, bool positive) {
    switch (f.kind()) {
    case FormulaKind::atom: return positive ? f : !f;
    case FormulaKind::verum: return positive ? Formula::verum() : Formula::falsum();
    case FormulaKind::falsum: return positive ? Formula::falsum() : Formula::verum();
    case FormulaKind::negation: return nnf(f.lhs(), !positive);
    default: break;
    }
    Formula a, b;
    bool is_and = false;
    if (f.kind() == FormulaKind::conjunction) {
        a = nnf(f.lhs(), positive);
        b = nnf(f.rhs(), positive);
        is_and = positive;
    } else if (f.kind() == FormulaKind::disjunction) {
        a = nnf(f.lhs(), positive);
        b = nnf(f.rhs(), positive);
        is_and = !positive;
    } else {  // a -> b  ==  !a | b
        a = nnf(f.lhs(), !positive);
        b = nnf(f.rhs(), positive);
        is_and = !positive;
    }
    const auto absorbing = is_and ? FormulaKind::falsum : FormulaKind::verum;
    const auto neutral = is_and ? FormulaKind::verum : FormulaKind::falsum;
    if (a.kind() == absorbing || b.kind() == absorbing)
        return is_and ? Formula::falsum() : Formula::verum();
    if (a.kind() == neutral)
        return b;
    if (b.kind() == neutral)
        return a;
    return is_and ? (a & b) : (a | b);
}

Literal literal_of(const Formula& f) {
    if (f.kind() == FormulaKind::negation)
        return neg(f.lhs().name());
    return pos(f.name());
}

bool is_literal(const Formula& f) {
    return f.kind() == FormulaKind::atom ||
           (f.kind() == FormulaKind::negation && f.lhs().kind() == FormulaKind::atom);
}

std::size_t literal_count(const ClauseSet& cs) {
    std::size_t n = 0;
    for (const auto& c : cs)
        n += c.size();
    return n;
}

std::optional<ClauseSet> distribute(const Formula& f, std::size_t budget) {
    if (is_literal(f))
        return ClauseSet{Clause{literal_of(f)}};
    auto lhs = distribute(f.lhs(), budget);
    if (!lhs)
        return std::nullopt;
    auto rhs = distribute(f.rhs(), budget);
    if (!rhs)
        return std::nullopt;
    ClauseSet out;
    if (f.kind() == FormulaKind::conjunction) {
        out = std::move(*lhs);
        out.insert(out.end(), rhs->begin(), rhs->end());
    } else {
        if (lhs->size() * rhs->size() > budget)
            return std::nullopt;
        for (const auto& x : *lhs) {
            for (const auto& y : *rhs) {
                Clause c = x;
                c.insert(c.end(), y.begin(), y.end());
                if (normalize(c))
                    out.push_back(std::move(c));
            }
        }
    }
    if (literal_count(out) > budget)
        return std::nullopt;
    return out;
}

/// Plaisted-Greenbaum encoding of a positive-polarity NNF formula: each
/// compound subformula g gets a fresh t with clauses for t -> g only.
Literal encode(const Formula& f, FreshNames& fresh, ClauseSet& out) {
    if (is_literal(f))
        return literal_of(f);
    Literal a = encode(f.lhs(), fresh, out);
    Literal b = encode(f.rhs(), fresh, out);
    Literal t = pos(fresh.next());
    if (f.kind() == FormulaKind::conjunction) {
        out.push_back({t.negated(), a});
        out.push_back({t.negated(), b});
    } else {
        out.push_back({t.negated(), a, b});
    }
    return t;
}

void definitional(const Formula& f, FreshNames& fresh, ClauseSet& out) {
    if (f.kind() == FormulaKind::conjunction) {
        definitional(f.lhs(), fresh, out);
        definitional(f.rhs(), fresh, out);
        return;
    }
    // Flatten the top-level disjunction into one clause.
    Clause top;
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
        Formula g = stack.back();
        stack.pop_back();
        if (g.kind() == FormulaKind::disjunction) {
            stack.push_back(g.rhs());
            stack.push_back(g.lhs());
        } else {
            top.push_back(encode(g, fresh, out));
        }
    }
    out.push_back(std::move(top));
}

}  // namespace

ClauseSet to_cnf(const Formula& f, FreshNames& fresh, const CnfOptions& options) {
    Formula n = nnf(f, true);
    if (n.kind() == FormulaKind::verum)
        return {};
    if (n.kind() == FormulaKind::falsum)
        return {Clause{}};
    ClauseSet out;
    if (auto d = distribute(n, options.definitional_threshold))
        out = std::move(*d);
    else
        definitional(n, fresh, out);
    ClauseSet kept;
    for (auto& c : out)
        if (normalize(c))
            kept.push_back(std::move(c));
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return kept;
}

ClauseSet to_cnf(const Formula& f) {
    FreshNames fresh;
    return to_cnf(f, fresh);
}

}  // namespace defarg
