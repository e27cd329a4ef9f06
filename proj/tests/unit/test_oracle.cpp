#include <doctest.h>

#include "defarg/error.hpp"
#include "defarg/fixtures.hpp"
#include "defarg/oracle.hpp"
#include "defarg/random.hpp"
#include "defarg/sat.hpp"

using namespace defarg;

namespace {

TheorySet theory_of(std::initializer_list<const char*> fs) {
    TheorySet t;
    for (const char* f : fs)
        t.insert(parse_formula(f));
    return t;
}

}  // namespace

TEST_CASE("guess and verify") {
    auto two = load_fixture("two-extensions");
    CHECK(is_extension(two, {"d1", "d3"}));
    CHECK(is_extension(two, {"d2"}));
    CHECK_FALSE(is_extension(two, {"d1", "d2"}));
    CHECK_FALSE(is_extension(two, {}));
    auto self = load_fixture("self-defeating");
    CHECK_FALSE(is_extension(self, {}));
    CHECK_FALSE(is_extension(self, {"d1"}));
    CHECK_THROWS_AS(is_extension(two, {"d7"}), LookupError);
}

TEST_CASE("oracle extensions of small theories") {
    auto two = oracle_extensions(load_fixture("two-extensions"));
    REQUIRE(two.size() == 2);
    CHECK(equivalent(two[0].base, theory_of({"b -> !a & !c", "a", "c"})));
    CHECK(equivalent(two[1].base, theory_of({"b -> !a & !c", "b"})));

    auto blocked = oracle_extensions(load_fixture("blocked"));
    REQUIRE(blocked.size() == 1);
    CHECK(equivalent(blocked[0].base, theory_of({"p", "q"})));

    CHECK(oracle_extensions(load_fixture("self-defeating")).empty());

    auto broken = oracle_extensions(load_fixture("inconsistent-facts"));
    REQUIRE(broken.size() == 1);
    CHECK(broken[0].inconsistent);
}

TEST_CASE("oracle bound") {
    std::string text;
    for (int i = 1; i <= 13; ++i)
        text += "default d" + std::to_string(i) + " = true : p / p.\n";
    auto many = parse_theory(text);
    CHECK_THROWS_AS(oracle_extensions(many), BoundExceeded);
    CHECK(oracle_extensions(many, {13}).size() == 1);
}

TEST_CASE("oracle consequences") {
    auto bd = oracle_extensions(load_fixture("bd"));
    CHECK(oracle_credulous(bd, parse_formula("b")));
    CHECK_FALSE(oracle_skeptical(bd, parse_formula("b")));
    CHECK(oracle_skeptical(bd, parse_formula("d")));
}

TEST_CASE("property: extensions are consistent, distinct and self-supporting") {
    Generator gen(101);
    for (int i = 0; i < 200; ++i) {
        auto theory = random_theory(gen);
        auto exts = oracle_extensions(theory);
        for (std::size_t a = 0; a < exts.size(); ++a) {
            if (exts[a].inconsistent)
                continue;
            CHECK(is_satisfiable(exts[a].base));
            for (std::size_t b = a + 1; b < exts.size(); ++b)
                CHECK_FALSE(equivalent(exts[a].base, exts[b].base));
            for (const auto& name : exts[a].generating_defaults) {
                const Default* d = theory.find(name);
                REQUIRE(d);
                CHECK(entails(exts[a].base, d->prerequisite));
                for (const auto& j : d->justifications)
                    CHECK_FALSE(entails(exts[a].base, !j));
            }
        }
    }
}
