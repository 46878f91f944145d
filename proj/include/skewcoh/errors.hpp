#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewcoh {

// Malformed surface syntax. `position` is a 0-based character offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Ill-typed categorical term, or a cut whose cut formulas do not match.
// `where` is either a subterm path ("root.g.f") or a source position.
class TypeError : public std::runtime_error {
 public:
  TypeError(const std::string& message, std::string where)
      : std::runtime_error(message + " (" + where + ")"), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// A derivation node that is not an instance of its rule schema.
class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skewcoh
