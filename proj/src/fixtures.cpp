#include "defarg/fixtures.hpp"

#include "defarg/error.hpp"

namespace defarg {

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        {"two-extensions",
         "fact b -> !a & !c.\n"
         "default d1 = true : a / a.\n"
         "default d2 = true : b / b.\n"
         "default d3 = true : c / c.\n"},
        {"self-defeating", "default d1 = true : p / !p.\n"},
        {"blocked",
         "fact p.\n"
         "fact q.\n"
         "default d1 = p : !q / !q.\n"},
        {"disjunctive",
         "fact e | o.\n"
         "default d1 = e : r / r.\n"
         "default d2 = o : r / r.\n"},
        {"refuting", "fact p.\ndefault d1 = p : q / !q.\n"},
        {"inconsistent-facts",
         "fact p.\n"
         "fact !p.\n"
         "default d1 = p : q / q.\n"},
        {"no-extension", "default d1 = true : !p / p.\n"},
        {"unique-trivial",
         "fact e | o.\n"
         "default d1 = e : r / r.\n"},
        {"chain",
         "default d1 = true : c / !d.\n"
         "default d2 = true : d / !e.\n"
         "default d3 = true : e / !f.\n"},
        {"bd",
         "fact b -> d.\n"
         "fact c -> d.\n"
         "default d1 = true : !c / b.\n"
         "default d2 = true : !b / c.\n"},
        {"independent",
         "default d1 = true : p / p.\n"
         "default d2 = true : q / q.\n"},
    };
    return all;
}

const Fixture& fixture(std::string_view name) {
    for (const auto& f : fixtures())
        if (f.name == name)
            return f;
    throw LookupError("unknown fixture '" + std::string(name) + "'");
}

DefaultTheory load_fixture(std::string_view name) { return parse_theory(fixture(name).text); }

}  // namespace defarg
