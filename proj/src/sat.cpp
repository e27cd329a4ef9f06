#include "defarg/sat.hpp"

#include <algorithm>
#include <cstdlib>

namespace defarg {

namespace {

/// DPLL with two watched literals and chronological backtracking. Branches
/// on the lowest unassigned variable, trying false first.
class Dpll {
public:
    Dpll(int num_vars, const std::vector<IntClause>& clauses)
        : values_(static_cast<std::size_t>(num_vars) + 1, 0),
          watches_(2 * (static_cast<std::size_t>(num_vars) + 1)) {
        for (const auto& c : clauses) {
            if (c.empty()) {
                conflict_at_root_ = true;
            } else if (c.size() == 1) {
                units_.push_back(c[0]);
            } else {
                clauses_.push_back(c);
                auto idx = clauses_.size() - 1;
                watches_[slot(c[0])].push_back(idx);
                watches_[slot(c[1])].push_back(idx);
            }
        }
    }

    bool solve(std::span<const Lit> assumptions) {
        if (conflict_at_root_)
            return false;
        for (Lit u : units_)
            if (!enqueue(u))
                return false;
        for (Lit a : assumptions)
            if (!enqueue(a))
                return false;
        if (!propagate())
            return false;
        for (;;) {
            int v = next_unassigned();
            if (v == 0)
                return true;
            levels_.push_back({trail_.size(), false});
            enqueue(-v);
            while (!propagate()) {
                while (!levels_.empty() && levels_.back().flipped) {
                    undo_to(levels_.back().start);
                    levels_.pop_back();
                }
                if (levels_.empty())
                    return false;
                auto& top = levels_.back();
                Lit decision = trail_[top.start];
                undo_to(top.start);
                top.flipped = true;
                enqueue(-decision);
            }
        }
    }

    std::vector<bool> model() const {
        std::vector<bool> m(values_.size(), false);
        for (std::size_t v = 1; v < values_.size(); ++v)
            m[v] = values_[v] > 0;
        return m;
    }

private:
    struct Level {
        std::size_t start;
        bool flipped;
    };

    static std::size_t slot(Lit l) { return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0); }

    int value(Lit l) const {
        int v = values_[static_cast<std::size_t>(std::abs(l))];
        return l < 0 ? -v : v;
    }

    bool enqueue(Lit l) {
        int cur = value(l);
        if (cur != 0)
            return cur > 0;
        values_[static_cast<std::size_t>(std::abs(l))] = static_cast<std::int8_t>(l > 0 ? 1 : -1);
        trail_.push_back(l);
        return true;
    }

    void undo_to(std::size_t pos) {
        while (trail_.size() > pos) {
            values_[static_cast<std::size_t>(std::abs(trail_.back()))] = 0;
            trail_.pop_back();
        }
        head_ = std::min(head_, pos);
    }

    int next_unassigned() {
        for (std::size_t v = 1; v < values_.size(); ++v)
            if (values_[v] == 0)
                return static_cast<int>(v);
        return 0;
    }

    bool propagate() {
        while (head_ < trail_.size()) {
            Lit falsified = -trail_[head_++];
            auto& ws = watches_[slot(falsified)];
            std::size_t keep = 0;
            bool ok = true;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                auto ci = ws[i];
                if (!ok) {
                    ws[keep++] = ci;
                    continue;
                }
                auto& c = clauses_[ci];
                if (c[0] == falsified)
                    std::swap(c[0], c[1]);
                if (value(c[0]) > 0) {
                    ws[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (value(c[k]) >= 0) {
                        std::swap(c[1], c[k]);
                        watches_[slot(c[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved)
                    continue;
                ws[keep++] = ci;
                if (!enqueue(c[0]))
                    ok = false;
            }
            ws.resize(keep);
            if (!ok)
                return false;
        }
        return true;
    }

    std::vector<std::int8_t> values_;
    std::vector<IntClause> clauses_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<Lit> units_;
    std::vector<Lit> trail_;
    std::vector<Level> levels_;
    std::size_t head_ = 0;
    bool conflict_at_root_ = false;
};

}  // namespace

Cnf Cnf::from(const TheorySet& theory, const CnfOptions& options) {
    Cnf cnf;
    cnf.options_ = options;
    for (const auto& name : theory.vocabulary())
        cnf.var(name);
    for (const auto& f : theory)
        cnf.add_formula(f);
    return cnf;
}

int Cnf::var(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end())
        return it->second;
    names_.emplace_back(name);
    int v = static_cast<int>(names_.size());
    index_.emplace(names_.back(), v);
    return v;
}

std::optional<int> Cnf::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Lit Cnf::lit(const Literal& l) {
    int v = var(l.atom);
    return l.positive ? v : -v;
}

Literal Cnf::literal(Lit l) const { return {name(std::abs(l)), l > 0}; }

void Cnf::add_clause(IntClause c) {
    std::sort(c.begin(), c.end(), lit_less);
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] == -c[i - 1])
            return;
    if (c.empty())
        has_empty_ = true;
    clauses_.push_back(std::move(c));
}

void Cnf::add_clauses(const ClauseSet& clauses) {
    for (const auto& c : clauses) {
        IntClause ic;
        ic.reserve(c.size());
        for (const auto& l : c)
            ic.push_back(lit(l));
        add_clause(std::move(ic));
    }
}

void Cnf::add_formula(const Formula& f) {
    fresh_.avoid([this](const std::string& n) { return index_.count(n) != 0; });
    ClauseSet cs = to_cnf(f, fresh_, options_);
    add_clauses(cs);
}

ClauseSet Cnf::to_clause_set() const {
    ClauseSet out;
    for (const auto& c : clauses_) {
        Clause cl;
        for (Lit l : c)
            cl.push_back(literal(l));
        out.push_back(std::move(cl));
    }
    canonicalize(out);
    return out;
}

bool Cnf::satisfiable(std::span<const Lit> assumptions) const {
    Dpll solver(num_vars(), clauses_);
    return solver.solve(assumptions);
}

std::optional<std::vector<bool>> Cnf::model(std::span<const Lit> assumptions) const {
    Dpll solver(num_vars(), clauses_);
    if (!solver.solve(assumptions))
        return std::nullopt;
    return solver.model();
}

bool is_satisfiable(const TheorySet& theory, std::span<const Literal> units) {
    Cnf cnf = Cnf::from(theory);
    std::vector<Lit> lits;
    for (const auto& u : units)
        lits.push_back(cnf.lit(u));
    return cnf.satisfiable(lits);
}

bool entails(const TheorySet& theory, const Formula& f) {
    Cnf cnf = Cnf::from(theory);
    cnf.add_formula(!f);
    return !cnf.satisfiable();
}

bool equivalent(const TheorySet& a, const TheorySet& b) {
    auto covers = [](const TheorySet& x, const TheorySet& y) {
        return std::all_of(y.begin(), y.end(), [&](const Formula& f) { return entails(x, f); });
    };
    return covers(a, b) && covers(b, a);
}

}  // namespace defarg
