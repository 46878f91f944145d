#pragma once

// Shared tokenizer for the formula, sequent and term grammars.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "skewcoh/errors.hpp"

namespace skewcoh::detail {

enum class Tok {
  Ident,
  LParen,
  RParen,
  TensorMap,  // (*)
  Star,
  Semi,
  Dot,
  Comma,
  LBracket,
  RBracket,
  Pipe,
  Turnstile,  // |-
  Dash,
  End,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    advance();
    return true;
  }

  Token expect(Tok k, const char* what) {
    if (cur_.kind != k) fail(std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    if (cur_.kind == Tok::End) throw SyntaxError(msg + ", found end of input", cur_.pos);
    throw SyntaxError(msg + ", found '" + std::string(cur_.text) + "'", cur_.pos);
  }

 private:
  void advance() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) ++at_;
    const std::size_t start = at_;
    if (at_ >= src_.size()) {
      cur_ = {Tok::End, {}, start};
      return;
    }
    const char c = src_[at_];
    auto single = [&](Tok k) {
      ++at_;
      cur_ = {k, src_.substr(start, 1), start};
    };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (at_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[at_])) || src_[at_] == '_'))
        ++at_;
      cur_ = {Tok::Ident, src_.substr(start, at_ - start), start};
      return;
    }
    switch (c) {
      case '(':
        if (src_.substr(at_, 3) == "(*)") {
          at_ += 3;
          cur_ = {Tok::TensorMap, src_.substr(start, 3), start};
        } else {
          single(Tok::LParen);
        }
        return;
      case ')': return single(Tok::RParen);
      case '*': return single(Tok::Star);
      case ';': return single(Tok::Semi);
      case '.': return single(Tok::Dot);
      case ',': return single(Tok::Comma);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case '-': return single(Tok::Dash);
      case '|':
        if (src_.substr(at_, 2) == "|-") {
          at_ += 2;
          cur_ = {Tok::Turnstile, src_.substr(start, 2), start};
        } else {
          single(Tok::Pipe);
        }
        return;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
  }

  std::string_view src_;
  std::size_t at_ = 0;
  Token cur_{Tok::End, {}, 0};
};

}  // namespace skewcoh::detail
