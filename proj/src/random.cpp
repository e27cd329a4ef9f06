#include "defarg/random.hpp"

#include <algorithm>

namespace defarg {

std::vector<std::string> Generator::names(std::size_t n, const std::string& prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

Literal Generator::literal(const std::vector<std::string>& vars) { return {vars[below(vars.size())], coin()}; }

Clause Generator::clause(const std::vector<std::string>& vars, std::size_t max_len) {
    std::vector<std::string> pool = vars;
    std::size_t len = 1 + below(std::min(max_len, pool.size()));
    Clause c;
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t k = below(pool.size());
        c.push_back({pool[k], coin()});
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return c;
}

ClauseSet Generator::clauses(const std::vector<std::string>& vars, std::size_t max_count, std::size_t max_len) {
    ClauseSet out;
    std::size_t count = below(max_count + 1);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(clause(vars, max_len));
    return out;
}

Formula Generator::formula(const std::vector<std::string>& vars, std::size_t depth) {
    if (depth == 0 || below(3) == 0) {
        if (below(12) == 0)
            return coin() ? Formula::verum() : Formula::falsum();
        return Formula::atom(vars[below(vars.size())]);
    }
    std::size_t op = below(4);
    Formula left = formula(vars, depth - 1);
    if (op == 0)
        return !left;
    Formula right = formula(vars, depth - 1);
    if (op == 1)
        return left & right;
    if (op == 2)
        return left | right;
    return implies(left, right);
}

DefaultTheory random_theory(Generator& gen, const TheoryShape& shape) {
    const auto vars = Generator::names(1 + gen.below(shape.max_vars));
    TheorySet facts;
    for (const auto& c : gen.clauses(vars, shape.max_facts, shape.max_clause_length))
        facts.insert(to_formula(c));
    std::vector<Default> defaults;
    std::size_t count = 1 + gen.below(shape.max_defaults);
    for (std::size_t i = 0; i < count; ++i) {
        Default d;
        d.name = "d" + std::to_string(i + 1);
        d.prerequisite = gen.below(3) == 0 ? Formula::verum() : gen.formula(vars, shape.formula_depth);
        std::size_t k = 1 + gen.below(shape.max_justifications);
        for (std::size_t j = 0; j < k; ++j)
            d.justifications.push_back(gen.formula(vars, shape.formula_depth));
        d.consequence = gen.formula(vars, shape.formula_depth);
        defaults.push_back(std::move(d));
    }
    return DefaultTheory(std::move(facts), std::move(defaults));
}

ArgumentationSystem random_system(Generator& gen, std::size_t assumption_count, std::size_t var_count,
                                  std::size_t clause_count) {
    auto assumptions = Generator::names(assumption_count, "@a");
    auto vars = Generator::names(var_count, "x");
    auto all = assumptions;
    all.insert(all.end(), vars.begin(), vars.end());
    TheorySet theory;
    for (std::size_t i = 0; i < clause_count; ++i)
        theory.insert(to_formula(gen.clause(all, 3)));
    return ArgumentationSystem(std::move(theory), std::move(assumptions));
}

}  // namespace defarg
