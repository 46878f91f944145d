#pragma once

// The categorical calculus: terms built from id, composition, tensor of maps
// and the structural maps lam, rho, al. Maps of the free skew monoidal
// category are terms up to the equational theory, which is decided here by
// comparing focused normal forms.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewcoh/syntax.hpp"

namespace skewcoh {

enum class TermKind : std::uint8_t { Id, Comp, Tensor, Lam, Rho, Al };

struct MapType {
  Formula dom;
  Formula cod;

  friend bool operator==(const MapType&, const MapType&) = default;
};

class CatTerm {
 public:
  static CatTerm id(Formula a);
  // g . f, i.e. f first. Diagrammatic `f ; g` in the surface syntax.
  static CatTerm comp(CatTerm g, CatTerm f);
  static CatTerm tensor(CatTerm f, CatTerm g);
  static CatTerm lam(Formula a);  // I * A => A
  static CatTerm rho(Formula a);  // A => A * I
  static CatTerm al(Formula a, Formula b, Formula c);  // (A * B) * C => A * (B * C)

  TermKind kind() const noexcept { return node_->kind; }
  // Formula arguments of id/lam/rho (one) and al (three).
  const std::vector<Formula>& objects() const noexcept { return node_->objects; }
  // comp(g, f): lhs() is g and rhs() is f. tensor(f, g): lhs() is f, rhs() is g.
  const CatTerm& lhs() const noexcept { return node_->children[0]; }
  const CatTerm& rhs() const noexcept { return node_->children[1]; }

  // The typing, or nullopt when some composition does not match up.
  const std::optional<MapType>& type() const noexcept { return node_->type; }

  // Term constructors plus the connectives of all formula arguments.
  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const CatTerm& a, const CatTerm& b) noexcept;

 private:
  struct Node {
    TermKind kind;
    std::vector<Formula> objects;
    std::vector<CatTerm> children;
    std::optional<MapType> type;
    std::size_t size;
    std::size_t hash;
  };
  explicit CatTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static CatTerm make(TermKind k, std::vector<Formula> objs, std::vector<CatTerm> kids);

  std::shared_ptr<const Node> node_;
};

// Throws TypeError naming the path to the first offending composition.
MapType infer_type(const CatTerm& t);

// id[A], lam[A], rho[A], al[A,B,C], `f ; g` (diagrammatic), `g . f`,
// `f (*) g`. Precedence from loosest: `;`, `.`, `(*)`; all left-associative.
// Throws SyntaxError, or TypeError carrying the position of the bad operator.
CatTerm parse_term(std::string_view text);
// Prints with `;` only and the fewest parentheses that re-parse to the same tree.
std::string print_term(const CatTerm& t);

// Equality of maps. Throws TypeError if the two terms have different types.
bool decide_equal(const CatTerm& f, const CatTerm& g);

// Canonical representative of the map denoted by f; constant on equal maps.
CatTerm normal_form(const CatTerm& f);

// One representative per map A => C, in enumeration order.
std::vector<CatTerm> fskmaps(const Formula& a, const Formula& c);
std::size_t hom_count(const Formula& a, const Formula& c);

}  // namespace skewcoh
