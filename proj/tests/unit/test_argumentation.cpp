#include <doctest.h>

#include "brute.hpp"
#include "defarg/argumentation.hpp"
#include "defarg/fixtures.hpp"
#include "defarg/random.hpp"

using namespace defarg;

namespace {

std::vector<std::string> strings(const std::vector<Term>& terms) {
    std::vector<std::string> out;
    for (const auto& t : terms)
        out.push_back(t.to_string());
    return out;
}

ArgumentationSystem system_of(std::initializer_list<const char*> formulas, std::vector<std::string> assumptions) {
    TheorySet t;
    for (const char* f : formulas)
        t.insert(parse_formula(f));
    return ArgumentationSystem(std::move(t), std::move(assumptions));
}

}  // namespace

TEST_CASE("terms") {
    Term t{pos("b"), neg("a"), pos("b")};
    CHECK(t.size() == 2);
    CHECK(t.to_string() == "{!a, b}");
    CHECK_THROWS_AS((Term{pos("a"), neg("a")}), std::invalid_argument);
    CHECK_FALSE(Term::make({pos("a"), neg("a")}));
    CHECK(Term{pos("a")}.is_subset_of(t) == false);
    CHECK(Term{neg("a")}.is_subset_of(t));
    CHECK_FALSE(t.compatible_with(Term{pos("a")}));
    CHECK(t.compatible_with(Term{pos("c")}));
    CHECK_FALSE(t.with(pos("a")));
    CHECK(t.positive_part() == Term{pos("b")});
    CHECK(Term{}.to_string() == "{}");
}

TEST_CASE("minimal contradictions of small systems") {
    auto nogoods = system_of({"a1 -> p", "a2 -> q", "!p", "!q"}, {"a1", "a2"});
    CHECK(strings(minimal_contradictions(nogoods)) == std::vector<std::string>{"{a1}", "{a2}"});
    auto none = system_of({"a1 -> p"}, {"a1"});
    CHECK(minimal_contradictions(none).empty());
    auto broken = system_of({"p", "!p", "a1 -> q"}, {"a1"});
    CHECK(strings(minimal_contradictions(broken)) == std::vector<std::string>{"{}"});
}

TEST_CASE("supporting arguments need every extension to stay consistent") {
    auto exclusive = system_of({"a1 -> p", "a2 -> q", "p -> !q"}, {"a1", "a2"});
    CHECK(strings(supporting_arguments(exclusive, parse_formula("p"))) == std::vector<std::string>{"{a1, !a2}"});
    CHECK(strings(supporting_arguments(exclusive, parse_formula("q"))) == std::vector<std::string>{"{!a1, a2}"});
    CHECK(strings(supporting_arguments(exclusive, parse_formula("true"))) ==
          std::vector<std::string>{"{!a1}", "{!a2}"});
}

TEST_CASE("property: minimal contradictions match enumeration") {
    Generator gen(43);
    for (int i = 0; i < 300; ++i) {
        auto system = random_system(gen, 1 + gen.below(5), gen.below(4), gen.below(8));
        brute::System b(system);
        CHECK(minimal_contradictions(system) == b.contradictions());
    }
}

TEST_CASE("property: safety through contradictions matches superset enumeration") {
    Generator gen(47);
    for (int i = 0; i < 100; ++i) {
        auto system = random_system(gen, 1 + gen.below(4), gen.below(3), gen.below(7));
        brute::System b(system);
        auto mics = minimal_contradictions(system);
        for (const auto& t : b.terms())
            CHECK(is_safe_term(mics, t) == b.safe(t));
    }
}

TEST_CASE("property: supporting arguments match enumeration") {
    Generator gen(53);
    for (int i = 0; i < 150; ++i) {
        auto system = random_system(gen, 1 + gen.below(4), 1 + gen.below(3), gen.below(7));
        brute::System b(system);
        std::vector<std::string> vars(system.source_vars().begin(), system.source_vars().end());
        if (vars.empty())
            continue;
        Formula f = gen.formula(vars, 2);
        CAPTURE(f.to_string());
        CHECK(supporting_arguments(system, f) == b.supporting(f));
    }
}

TEST_CASE("property: support by positive part matches enumeration") {
    Generator gen(59);
    for (int i = 0; i < 100; ++i) {
        auto system = random_system(gen, 1 + gen.below(4), 1 + gen.below(3), gen.below(7));
        brute::System b(system);
        std::vector<std::string> vars(system.source_vars().begin(), system.source_vars().end());
        if (vars.empty())
            continue;
        Formula f = gen.formula(vars, 2);
        std::vector<Term> all_support;
        for (const auto& t : b.terms())
            if (b.safe(t) && b.table.entails(t.literals(), f))
                all_support.push_back(t);
        for (const auto& t : b.terms()) {
            auto anchor = t.positive_names();
            bool want = std::any_of(all_support.begin(), all_support.end(),
                                    [&](const Term& s) { return s.positive_names() == anchor; });
            CHECK(supports_with_positive_part(system, f, anchor) == want);
        }
    }
}

TEST_CASE("minimal supporting arguments can miss a default term") {
    // A chained default: the only default term holds both consequences,
    // while the minimal support for b drops the first one.
    auto system = translate(parse_theory("default d1 = true : a / a.\ndefault d2 = a : b / b."));
    auto sp = supporting_arguments(system, parse_formula("b"));
    std::vector<std::string> anchor = {"@d1.c", "@d2.c"};
    bool minimal_hit = std::any_of(sp.begin(), sp.end(), [&](const Term& t) { return t.positive_names() == anchor; });
    CHECK_FALSE(minimal_hit);
    CHECK(supports_with_positive_part(system, parse_formula("b"), anchor));
}

TEST_CASE("positive parts of minimal support on two exclusive defaults") {
    auto system = translate(load_fixture("bd"));
    auto sp = supporting_arguments(system, parse_formula("b"));
    std::set<std::vector<std::string>> parts;
    for (const auto& t : sp)
        parts.insert(t.positive_names());
    CHECK(parts == std::set<std::vector<std::string>>{{"@d1.c"}});
}

TEST_CASE("property: both inconsistency backends agree") {
    Generator gen(61);
    for (int i = 0; i < 150; ++i) {
        auto system = random_system(gen, 1 + gen.below(5), gen.below(3), gen.below(8));
        InconsistencyTest sat(system, InconsistencyBackend::satisfiability);
        InconsistencyTest index(system, InconsistencyBackend::minimal_contradictions);
        for (const auto& t : brute::all_terms(system.assumptions()))
            CHECK(sat(t) == index(t));
    }
}

TEST_CASE("structures") {
    auto system = translate(load_fixture("refuting"));
    CHECK(is_structure(system, Term{}, std::vector<Literal>{}));
    CHECK_FALSE(is_structure(system, Term{pos("@d1.c")}, std::vector<Literal>{pos("@d1.j1")}));
    CHECK(is_structure(system, CJPair::top()));
    CHECK_FALSE(is_structure(system, CJPair::bottom()));
}

TEST_CASE("one application step") {
    auto system = translate(load_fixture("refuting"));
    const auto& a = system.registry().of("d1");
    CHECK(is_applicable(system, a, Term{}));
    auto once = apply_default(system, a, CJPair::top());
    CHECK(once == CJPair{{"@d1.c"}, {"@d1.j1"}, false});
    CHECK_FALSE(is_structure(system, once));
    CHECK(apply_default(system, a, once) == CJPair::bottom());
    CHECK(once.to_string() == "<{@d1.c}, {@d1.j1}>");
    CHECK(CJPair::bottom().to_string() == "<{false}, {}>");
}

TEST_CASE("property: application steps are idempotent and the sink absorbs") {
    Generator gen(67);
    for (int i = 0; i < 100; ++i) {
        auto theory = random_theory(gen);
        auto system = translate(theory);
        InconsistencyTest test(system, InconsistencyBackend::satisfiability);
        for (const auto& a : system.registry().entries()) {
            auto once = apply_default(test, a, CJPair::top());
            auto twice = apply_default(test, a, once);
            if (once != CJPair::bottom() && is_structure(test, once))
                CHECK(twice == once);
            CHECK(apply_default(test, a, CJPair::bottom()) == CJPair::bottom());
        }
    }
}
