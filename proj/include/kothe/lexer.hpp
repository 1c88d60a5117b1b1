// Token stream shared by the quiver DSL and representation-file parsers.
// '#' starts a comment to end of line; whitespace is insignificant.

#pragma once

#include <string>
#include <vector>

#include "kothe/field.hpp"

namespace kothe::qv {

struct Token {
    enum class Kind { word, number, punct, arrow, eof };
    Kind kind = Kind::eof;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src);

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
    bool at_eof() const { return peek().kind == Token::Kind::eof; }
    std::size_t byte_offset() const;  // offset of the current token in src

    // expect helpers; throw ParseError with position on mismatch
    Token expect_word(const std::string& what);
    Token expect_punct(char c);
    Token expect_keyword(const std::string& kw);
    bool try_punct(char c);

    [[noreturn]] void fail(const std::string& msg) const;

private:
    std::vector<Token> toks_;
    std::vector<std::size_t> offsets_;
    std::size_t pos_ = 0;
};

}  // namespace kothe::qv
