#include <cctype>

#include "defarg/error.hpp"
#include "lexer.hpp"

namespace defarg {
namespace detail {

const char* describe(Token t) {
    switch (t) {
    case Token::identifier: return "identifier";
    case Token::kw_true: return "'true'";
    case Token::kw_false: return "'false'";
    case Token::bang: return "'!'";
    case Token::amp: return "'&'";
    case Token::bar: return "'|'";
    case Token::arrow: return "'->'";
    case Token::lparen: return "'('";
    case Token::rparen: return "')'";
    case Token::colon: return "':'";
    case Token::comma: return "','";
    case Token::slash: return "'/'";
    case Token::dot: return "'.'";
    case Token::equals: return "'='";
    case Token::end: return "end of input";
    }
    return "token";
}

Lexer::Lexer(std::string_view text) : src_(text) { advance(); }

void Lexer::bump() {
    if (at(pos_) == '\n') {
        ++cur_line_;
        cur_col_ = 1;
    } else {
        ++cur_col_;
    }
    ++pos_;
}

void Lexer::fail(const std::string& what) const { throw ParseError(what, line_, column_); }

void Lexer::expect(Token t, const char* context) {
    if (current_ != t)
        fail(std::string("expected ") + describe(t) + " " + context + ", found " + describe(current_));
    advance();
}

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

void Lexer::advance() {
    for (;;) {
        char c = at(pos_);
        if (c == '#') {
            while (pos_ < src_.size() && at(pos_) != '\n')
                bump();
        } else if (c != '\0' && std::isspace(static_cast<unsigned char>(c))) {
            bump();
        } else {
            break;
        }
    }
    line_ = cur_line_;
    column_ = cur_col_;
    lexeme_.clear();
    if (pos_ >= src_.size()) {
        current_ = Token::end;
        return;
    }
    const char c = at(pos_);
    if (c == assumption_marker) {
        throw ReservedNameError("reserved character '@' in identifier", line_, column_);
    }
    if (ident_start(c)) {
        while (ident_char(at(pos_))) {
            lexeme_ += at(pos_);
            bump();
        }
        if (at(pos_) == assumption_marker)
            throw ReservedNameError("reserved character '@' in identifier", cur_line_, cur_col_);
        if (lexeme_ == "true")
            current_ = Token::kw_true;
        else if (lexeme_ == "false")
            current_ = Token::kw_false;
        else
            current_ = Token::identifier;
        return;
    }
    lexeme_ = c;
    switch (c) {
    case '!': current_ = Token::bang; break;
    case '&': current_ = Token::amp; break;
    case '|': current_ = Token::bar; break;
    case '(': current_ = Token::lparen; break;
    case ')': current_ = Token::rparen; break;
    case ':': current_ = Token::colon; break;
    case ',': current_ = Token::comma; break;
    case '/': current_ = Token::slash; break;
    case '.': current_ = Token::dot; break;
    case '=': current_ = Token::equals; break;
    case '-':
        if (at(pos_ + 1) != '>')
            fail("expected '->'");
        bump();
        lexeme_ = "->";
        current_ = Token::arrow;
        break;
    default:
        fail(std::string("unexpected character '") + c + "'");
    }
    bump();
}

namespace {

Formula parse_unary(Lexer& lex);

Formula parse_primary(Lexer& lex) {
    switch (lex.peek()) {
    case Token::identifier: {
        auto f = Formula::atom(lex.text());
        lex.advance();
        return f;
    }
    case Token::kw_true: lex.advance(); return Formula::verum();
    case Token::kw_false: lex.advance(); return Formula::falsum();
    case Token::lparen: {
        lex.advance();
        auto f = parse_implication(lex);
        lex.expect(Token::rparen, "to close '('");
        return f;
    }
    default:
        lex.fail(std::string("expected formula, found ") + describe(lex.peek()));
    }
}

Formula parse_unary(Lexer& lex) {
    if (lex.peek() == Token::bang) {
        lex.advance();
        return Formula::negation(parse_unary(lex));
    }
    return parse_primary(lex);
}

Formula parse_conjunction(Lexer& lex) {
    auto f = parse_unary(lex);
    while (lex.peek() == Token::amp) {
        lex.advance();
        f = Formula::conjunction(f, parse_unary(lex));
    }
    return f;
}

Formula parse_disjunction(Lexer& lex) {
    auto f = parse_conjunction(lex);
    while (lex.peek() == Token::bar) {
        lex.advance();
        f = Formula::disjunction(f, parse_conjunction(lex));
    }
    return f;
}

}  // namespace

Formula parse_implication(Lexer& lex) {
    auto f = parse_disjunction(lex);
    if (lex.peek() == Token::arrow) {
        lex.advance();
        return Formula::implication(f, parse_implication(lex));
    }
    return f;
}

}  // namespace detail

Formula parse_formula(std::string_view text) {
    detail::Lexer lex(text);
    auto f = detail::parse_implication(lex);
    if (lex.peek() != detail::Token::end)
        lex.fail(std::string("unexpected ") + detail::describe(lex.peek()) + " after formula");
    return f;
}

}  // namespace defarg
