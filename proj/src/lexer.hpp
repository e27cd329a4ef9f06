#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "defarg/formula.hpp"

namespace defarg::detail {

enum class Token {
    identifier,
    kw_true,
    kw_false,
    bang,
    amp,
    bar,
    arrow,
    lparen,
    rparen,
    colon,
    comma,
    slash,
    dot,
    equals,
    end
};

const char* describe(Token t);

/// Tokenizer shared by the formula and theory parsers. `#` starts a comment
/// running to end of line.
class Lexer {
public:
    explicit Lexer(std::string_view text);

    Token peek() const { return current_; }
    const std::string& text() const { return lexeme_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    void advance();
    [[noreturn]] void fail(const std::string& what) const;
    void expect(Token t, const char* context);

private:
    char at(std::size_t i) const { return i < src_.size() ? src_[i] : '\0'; }
    void bump();

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t cur_line_ = 1;
    std::size_t cur_col_ = 1;

    Token current_ = Token::end;
    std::string lexeme_;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

/// implication := disjunction ("->" implication)?
Formula parse_implication(Lexer& lex);

}  // namespace defarg::detail
