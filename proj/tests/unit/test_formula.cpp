#include <doctest.h>

#include "defarg/default_theory.hpp"
#include "defarg/error.hpp"
#include "defarg/formula.hpp"
#include "defarg/random.hpp"

using namespace defarg;

TEST_CASE("precedence and associativity") {
    CHECK(parse_formula("a | b & c").to_string() == "a | b & c");
    CHECK(parse_formula("(a | b) & c").to_string() == "(a | b) & c");
    CHECK(parse_formula("a -> b -> c") == implies(Formula::atom("a"), implies(Formula::atom("b"), Formula::atom("c"))));
    CHECK(parse_formula("(a -> b) -> c").to_string() == "(a -> b) -> c");
    CHECK(parse_formula("!a & !b").to_string() == "!a & !b");
    CHECK(parse_formula("!(a & b)").to_string() == "!(a & b)");
    CHECK(parse_formula("a & (b & c)").to_string() == "a & (b & c)");
    CHECK(parse_formula("a & b & c").to_string() == "a & b & c");
    CHECK(parse_formula("true").kind() == FormulaKind::verum);
    CHECK(parse_formula("false").kind() == FormulaKind::falsum);
}

TEST_CASE("comments and whitespace") {
    CHECK(parse_formula("  a # trailing\n & b") == (Formula::atom("a") & Formula::atom("b")));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    CHECK_THROWS_AS(parse_formula("a &"), ParseError);
    CHECK_THROWS_AS(parse_formula("(a"), ParseError);
    CHECK_THROWS_AS(parse_formula("a b"), ParseError);
    try {
        parse_formula("a &\n  &");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("the assumption marker is reserved") {
    CHECK_THROWS_AS(parse_formula("@d1.c"), ReservedNameError);
    CHECK_THROWS_AS(parse_theory("fact @x."), ReservedNameError);
}

TEST_CASE("evaluation") {
    auto f = parse_formula("a -> b & !c");
    auto at = [](bool a, bool b, bool c) {
        return [=](const std::string& n) { return n == "a" ? a : n == "b" ? b : c; };
    };
    CHECK(f.evaluate(at(false, false, true)));
    CHECK(f.evaluate(at(true, true, false)));
    CHECK_FALSE(f.evaluate(at(true, true, true)));
}

TEST_CASE("structural equality and hashing") {
    auto a = parse_formula("p & (q | !r)");
    auto b = parse_formula("p&(q|!r)");
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK_FALSE(a == parse_formula("(q | !r) & p"));
    CHECK(a.vocabulary() == Vocabulary{"p", "q", "r"});
}

TEST_CASE("theory sets keep insertion order and drop duplicates") {
    TheorySet t;
    CHECK(t.insert(parse_formula("b")));
    CHECK(t.insert(parse_formula("a")));
    CHECK_FALSE(t.insert(parse_formula("b")));
    REQUIRE(t.size() == 2);
    CHECK(t[0].to_string() == "b");
    CHECK(t.contains(parse_formula("a")));
}

TEST_CASE("property: printing parses back to the same formula") {
    Generator gen(11);
    auto vars = Generator::names(4);
    for (int i = 0; i < 2000; ++i) {
        Formula f = gen.formula(vars, 4);
        CAPTURE(f.to_string());
        CHECK(parse_formula(f.to_string()) == f);
    }
}

TEST_CASE("theory files") {
    auto t = parse_theory(
        "# facts\n"
        "fact b -> d.\n"
        "default d1 = true : !c / b.\n"
        "default d2 = true : !b, e / c.\n");
    CHECK(t.facts().size() == 1);
    REQUIRE(t.defaults().size() == 2);
    CHECK(t.defaults()[1].justifications.size() == 2);
    CHECK(t.find("d2") != nullptr);
    CHECK(t.find("d3") == nullptr);
    CHECK(vars(t) == Vocabulary{"b", "c", "d", "e"});
}

TEST_CASE("malformed theory files") {
    CHECK_THROWS_AS(parse_theory("default d1 = a : / b."), ParseError);
    CHECK_THROWS_AS(parse_theory("default d1 = a : b."), ParseError);
    CHECK_THROWS_AS(parse_theory("default d1 = a : b / c.\ndefault d1 = a : b / c."), ParseError);
    CHECK_THROWS_AS(parse_theory("fact a"), ParseError);
    CHECK_THROWS_AS(parse_theory("rule a."), ParseError);
}

TEST_CASE("programmatic theories are validated") {
    Default d{"d1", Formula::verum(), {}, Formula::atom("p")};
    CHECK_THROWS_AS(DefaultTheory({}, {d}), TheoryError);
    d.justifications = {Formula::atom("p")};
    CHECK_THROWS_AS(DefaultTheory({}, {d, d}), TheoryError);
    Default bad{"d2", Formula::atom("@x"), {Formula::atom("p")}, Formula::atom("p")};
    CHECK_THROWS_AS(DefaultTheory({}, {bad}), TheoryError);
    CHECK_NOTHROW(DefaultTheory({}, {d}));
}

TEST_CASE("property: theory text round-trips") {
    Generator gen(5);
    for (int i = 0; i < 300; ++i) {
        auto t = random_theory(gen);
        auto back = parse_theory(to_string(t));
        CHECK(back.defaults() == t.defaults());
        CHECK(back.facts().formulas() == t.facts().formulas());
    }
}

TEST_CASE("selectors") {
    auto t = parse_theory(
        "default d1 = a : b, c / d.\n"
        "default d2 = a : c / e.\n"
        "default d3 = f : g / d.\n");
    std::vector<std::string> names = {"d1", "d2"};
    auto jus = select(t, names, Selector::jus);
    CHECK(jus.size() == 2);
    auto pre = select(t.defaults(), Selector::pre);
    CHECK(pre.size() == 2);
    CHECK(select(t.defaults(), Selector::con).size() == 2);
    std::vector<std::string> unknown = {"d9"};
    CHECK_THROWS_AS(select(t, unknown, Selector::con), LookupError);
}

TEST_CASE("property: selecting a union is the union of selections") {
    Generator gen(21);
    for (int i = 0; i < 200; ++i) {
        auto t = random_theory(gen);
        std::vector<std::string> left, right, both;
        for (const auto& d : t.defaults()) {
            bool l = gen.coin(), r = gen.coin();
            if (l)
                left.push_back(d.name);
            if (r)
                right.push_back(d.name);
            if (l || r)
                both.push_back(d.name);
        }
        for (auto which : {Selector::pre, Selector::jus, Selector::con}) {
            TheorySet united = select(t, left, which);
            united.insert_all(select(t, right, which));
            TheorySet direct = select(t, both, which);
            CHECK(united.size() == direct.size());
            for (const auto& f : direct)
                CHECK(united.contains(f));
        }
    }
}
