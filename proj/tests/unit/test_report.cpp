#include <doctest.h>
#include <json.hpp>

#include "defarg/fixtures.hpp"
#include "defarg/oracle.hpp"
#include "defarg/random.hpp"
#include "defarg/report.hpp"

using namespace defarg;
using Json = nlohmann::json;

TEST_CASE("extension schema") {
    auto theory = load_fixture("chain");
    DefaultReasoner r(translate(theory));
    auto j = Json::parse(render_extensions(r, true, true));
    CHECK(j["classification"] == "extensions(1)");
    REQUIRE(j["extensions"].size() == 1);
    CHECK(j["extensions"][0]["defaultTerm"] == Json::array({"@d1.c", "@d3.c"}));
    CHECK(j["extensions"][0]["generatingDefaults"] == Json::array({"d1", "d3"}));
    CHECK(j["extensions"][0]["marginal"] == Json::array({"!d", "!f"}));
    auto without = Json::parse(render_extensions(r, false, true));
    CHECK_FALSE(without["extensions"][0].contains("marginal"));
}

TEST_CASE("translation schema") {
    auto j = Json::parse(render_translate(translate(parse_theory("default d1 = a : b / c.")), true));
    CHECK(j["xi"] == Json::array({"@d1.p -> !a", "@d1.j1 -> b", "@d1.c -> c"}));
    CHECK(j["assumptions"]["d1"]["p"] == "@d1.p");
    CHECK(j["assumptions"]["d1"]["j"] == Json::array({"@d1.j1"}));
    CHECK(j["assumptions"]["d1"]["c"] == "@d1.c");
}

TEST_CASE("text renderings") {
    DefaultReasoner r(translate(load_fixture("chain")));
    CHECK(render_terms(r, false) == "{@d1.c, @d3.c} <- d1, d3\n");
    CHECK(render_classification(r.classify(), false) == "extensions(1)\n");
    CHECK(render_contradictions(r.system(), false) ==
          "{@d1.c, @d2.j1}\n{@d1.p}\n{@d2.c, @d3.j1}\n{@d2.p}\n{@d3.p}\n");
    CHECK(render_extensions(r, true, false) ==
          "classification: extensions(1)\n"
          "extension {@d1.c, @d3.c}\n"
          "  generating: d1, d3\n"
          "  marginal: !d; !f\n");
}

TEST_CASE("property: reasoner and oracle reports are byte-identical") {
    Generator gen(103);
    for (int i = 0; i < 200; ++i) {
        auto theory = random_theory(gen);
        DefaultReasoner r(translate(theory));
        auto oracle = oracle_extensions(theory);
        for (bool json : {false, true}) {
            CAPTURE(to_string(theory));
            CHECK(render_extensions(r, true, json) == render_oracle(theory, oracle, true, json));
        }
    }
}
