#pragma once

#include "lexer.hpp"
#include "skewcoh/syntax.hpp"

namespace skewcoh::detail {

// formula := primary ('*' primary)*
// primary := ident | 'I' | '(' formula ')'
Formula parse_formula(Lexer& lex);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace skewcoh::detail
