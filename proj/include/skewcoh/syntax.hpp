#pragma once

// Formulas and sequents of the skew monoidal sequent calculus.
//
// A formula is an atom, the unit I, or a tensor A * B. A sequent
// `S | G |- C` has a stoup S (empty or one formula), an ordered context G,
// and a single succedent C. Left rules only ever touch the stoup.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skewcoh {

enum class FormulaKind : std::uint8_t { Atom, Unit, Tensor };

class Formula {
 public:
  // Throws std::invalid_argument unless `name` matches [A-Za-z][A-Za-z0-9_]*
  // and is not the reserved unit name "I".
  static Formula atom(std::string name);
  static Formula unit();
  static Formula tensor(Formula left, Formula right);

  FormulaKind kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == FormulaKind::Atom; }
  bool is_unit() const noexcept { return kind() == FormulaKind::Unit; }
  bool is_tensor() const noexcept { return kind() == FormulaKind::Tensor; }

  // Atom name; empty for non-atoms.
  const std::string& name() const noexcept { return node_->name; }
  // Tensor operands. Precondition: is_tensor().
  const Formula& left() const noexcept { return *node_->left; }
  const Formula& right() const noexcept { return *node_->right; }

  // Number of I and * occurrences.
  std::size_t connectives() const noexcept { return node_->connectives; }
  // Number of nodes (atoms, units and tensors).
  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  // Total order: by size, then kind, then name/operands. Only used to make
  // containers deterministic.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
    std::size_t connectives;
    std::size_t size;
    std::size_t hash;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using Stoup = std::optional<Formula>;
using Context = std::vector<Formula>;

struct Sequent {
  Stoup stoup;
  Context context;
  Formula succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const noexcept;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

enum class Phase : std::uint8_t { L, R };

// Termination measure for focused proof search, ordered lexicographically.
struct Rank {
  std::size_t connectives = 0;     // I and * occurrences in the whole sequent
  unsigned stoup_emptiness = 0;    // 0 for a formula in the stoup, 1 for empty
  unsigned phase = 0;              // 0 for R, 1 for L

  friend auto operator<=>(const Rank&, const Rank&) = default;
};

Rank rank(const Sequent& seq, Phase phase);

// Surface syntax: atoms are identifiers, `I` is the unit, `*` is a
// left-associative tensor, parentheses group. Throws SyntaxError.
Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

// `S | G |- C` with `-` for the empty stoup and G a comma-separated list.
Sequent parse_sequent(std::string_view text);
std::string print_sequent(const Sequent& seq);
std::string print_context(const Context& ctx);

std::vector<std::string> frontier(const Formula& f);

// <S>: the empty stoup reads as I.
Formula interp_stoup(const Stoup& s);
// [[S | A1..An]] = (..(<S> * A1) ..) * An
Formula interp_antecedent(const Stoup& s, const Context& g);

std::size_t connectives(const Sequent& seq);

// Every unit-free formula with `tensors` tensors whose leaves are all `atom`,
// in a fixed order (left subtree size ascending).
std::vector<Formula> unit_free_shapes(std::size_t tensors, const Formula& atom);

}  // namespace skewcoh
