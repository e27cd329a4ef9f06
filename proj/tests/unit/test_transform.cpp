#include <doctest.h>

#include "defarg/error.hpp"
#include "defarg/fixtures.hpp"
#include "defarg/random.hpp"
#include "defarg/transform.hpp"

using namespace defarg;

TEST_CASE("translation of a two-default theory") {
    auto system = translate(load_fixture("disjunctive"));
    std::vector<std::string> xi;
    for (const auto& f : system.theory())
        xi.push_back(f.to_string());
    CHECK(xi == std::vector<std::string>{"e | o", "@d1.p -> !e", "@d1.j1 -> r", "@d1.c -> r", "@d2.p -> !o",
                                         "@d2.j1 -> r", "@d2.c -> r"});
    CHECK(system.assumptions() == std::vector<std::string>{"@d1.p", "@d2.p", "@d1.j1", "@d2.j1", "@d1.c", "@d2.c"});
    CHECK(system.source_vars() == Vocabulary{"e", "o", "r"});
    CHECK(system.fact_count() == 1);
}

TEST_CASE("registry lookups") {
    auto system = translate(parse_theory("default d1 = a : b, c / d.\ndefault d2 = true : e / f."));
    const auto& reg = system.registry();
    CHECK(assumption_of(reg, "d1", AssumptionKind::justification, 2) == "@d1.j2");
    CHECK(assumption_of(reg, "d2", AssumptionKind::consequence) == "@d2.c");
    CHECK_THROWS_AS(assumption_of(reg, "d3", AssumptionKind::prerequisite), LookupError);
    CHECK_THROWS_AS(assumption_of(reg, "d1", AssumptionKind::justification, 3), LookupError);
    CHECK_THROWS_AS(assumption_of(reg, "d1", AssumptionKind::justification), LookupError);
    CHECK_THROWS_AS(assumption_of(reg, "d1", AssumptionKind::consequence, 1), LookupError);
    auto ref = reg.lookup("@d1.j2");
    REQUIRE(ref);
    CHECK(ref->default_name == "d1");
    CHECK(ref->kind == AssumptionKind::justification);
    CHECK(ref->index == 2);
    CHECK_FALSE(reg.lookup("@d9.c"));
    CHECK(system.is_assumption("@d2.p"));
    CHECK_FALSE(system.is_assumption("e"));
}

TEST_CASE("property: size, freshness and recoverability") {
    Generator gen(41);
    for (int i = 0; i < 100; ++i) {
        auto theory = random_theory(gen);
        auto system = translate(theory);
        std::size_t expected = 0;
        for (const auto& d : theory.defaults())
            expected += d.justifications.size() + 2;
        CHECK(system.theory().size() - theory.facts().size() == expected);
        CHECK(system.assumptions().size() == expected);

        auto source = vars(theory);
        for (const auto& a : system.assumptions())
            CHECK(source.count(a) == 0);

        // Facts come first, then each default's block in order.
        for (std::size_t k = 0; k < theory.facts().size(); ++k)
            CHECK(system.theory()[k] == theory.facts()[k]);
        std::size_t at = theory.facts().size();
        for (const auto& d : theory.defaults()) {
            const auto& a = system.registry().of(d.name);
            CHECK(system.theory()[at++] == implies(Formula::atom(a.prerequisite), !d.prerequisite));
            for (std::size_t j = 0; j < d.justifications.size(); ++j)
                CHECK(system.theory()[at++] == implies(Formula::atom(a.justifications[j]), d.justifications[j]));
            CHECK(system.theory()[at++] == implies(Formula::atom(a.consequence), d.consequence));
        }
    }
}

TEST_CASE("general systems take the non-assumptions as source vocabulary") {
    ArgumentationSystem s(TheorySet{parse_formula("a1 -> p"), parse_formula("!p")}, {"a1"});
    CHECK(s.source_vars() == Vocabulary{"p"});
    CHECK(s.registry().empty());
    CHECK(to_theory_text(s).find("# assumptions: a1") != std::string::npos);
}
