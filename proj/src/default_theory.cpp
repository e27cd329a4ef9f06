#include "defarg/default_theory.hpp"

#include <unordered_set>

#include "defarg/error.hpp"
#include "lexer.hpp"

namespace defarg {

namespace {

void require_user_vocabulary(const Formula& f, const std::string& where) {
    for (const auto& name : f.vocabulary())
        if (!is_user_name(name))
            throw TheoryError("proposition '" + name + "' in " + where + " is not a user identifier");
}

}  // namespace

DefaultTheory::DefaultTheory(TheorySet facts, std::vector<Default> defaults)
    : facts_(std::move(facts)), defaults_(std::move(defaults)) {
    for (const auto& f : facts_)
        require_user_vocabulary(f, "fact " + f.to_string());
    std::unordered_set<std::string> names;
    for (const auto& d : defaults_) {
        if (!is_user_name(d.name))
            throw TheoryError("invalid default name '" + d.name + "'");
        if (!names.insert(d.name).second)
            throw TheoryError("duplicate default name '" + d.name + "'");
        if (d.justifications.empty())
            throw TheoryError("default '" + d.name + "' has an empty justification list");
        const std::string where = "default " + d.name;
        require_user_vocabulary(d.prerequisite, where);
        for (const auto& j : d.justifications)
            require_user_vocabulary(j, where);
        require_user_vocabulary(d.consequence, where);
    }
}

const Default* DefaultTheory::find(std::string_view name) const {
    for (const auto& d : defaults_)
        if (d.name == name)
            return &d;
    return nullptr;
}

DefaultTheory parse_theory(std::string_view text) {
    using detail::Token;
    detail::Lexer lex(text);
    TheorySet facts;
    std::vector<Default> defaults;
    std::unordered_set<std::string> names;

    while (lex.peek() != Token::end) {
        if (lex.peek() != Token::identifier || (lex.text() != "fact" && lex.text() != "default"))
            lex.fail("expected 'fact' or 'default'");
        if (lex.text() == "fact") {
            lex.advance();
            facts.insert(detail::parse_implication(lex));
            lex.expect(Token::dot, "after fact");
            continue;
        }
        lex.advance();
        if (lex.peek() != Token::identifier)
            lex.fail("expected default name");
        Default d;
        d.name = lex.text();
        if (!names.insert(d.name).second)
            lex.fail("duplicate default name '" + d.name + "'");
        lex.advance();
        lex.expect(Token::equals, "after default name");
        d.prerequisite = detail::parse_implication(lex);
        lex.expect(Token::colon, "after prerequisite");
        if (lex.peek() == Token::slash)
            lex.fail("default '" + d.name + "' has an empty justification list");
        d.justifications.push_back(detail::parse_implication(lex));
        while (lex.peek() == Token::comma) {
            lex.advance();
            d.justifications.push_back(detail::parse_implication(lex));
        }
        lex.expect(Token::slash, "after justifications");
        if (lex.peek() == Token::dot)
            lex.fail("default '" + d.name + "' is missing its consequence");
        d.consequence = detail::parse_implication(lex);
        lex.expect(Token::dot, "after default");
        defaults.push_back(std::move(d));
    }
    return DefaultTheory(std::move(facts), std::move(defaults));
}

std::string to_string(const DefaultTheory& theory) {
    std::string out;
    for (const auto& f : theory.facts())
        out += "fact " + f.to_string() + ".\n";
    for (const auto& d : theory.defaults()) {
        out += "default " + d.name + " = " + d.prerequisite.to_string() + " : ";
        for (std::size_t i = 0; i < d.justifications.size(); ++i) {
            if (i)
                out += ", ";
            out += d.justifications[i].to_string();
        }
        out += " / " + d.consequence.to_string() + ".\n";
    }
    return out;
}

TheorySet select(std::span<const Default> defaults, Selector which) {
    TheorySet out;
    for (const auto& d : defaults) {
        switch (which) {
        case Selector::pre: out.insert(d.prerequisite); break;
        case Selector::con: out.insert(d.consequence); break;
        case Selector::jus:
            for (const auto& j : d.justifications)
                out.insert(j);
            break;
        }
    }
    return out;
}

TheorySet select(const DefaultTheory& theory, std::span<const std::string> names, Selector which) {
    std::vector<Default> chosen;
    for (const auto& n : names) {
        const Default* d = theory.find(n);
        if (!d)
            throw LookupError("unknown default '" + n + "'");
        chosen.push_back(*d);
    }
    return select(chosen, which);
}

Vocabulary vars(const DefaultTheory& theory) {
    Vocabulary v = theory.facts().vocabulary();
    for (const auto& d : theory.defaults()) {
        d.prerequisite.collect_vocabulary(v);
        for (const auto& j : d.justifications)
            j.collect_vocabulary(v);
        d.consequence.collect_vocabulary(v);
    }
    return v;
}

}  // namespace defarg
