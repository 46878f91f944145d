#pragma once

// The focused subsystem. Every equivalence class of cut-free derivations has
// exactly one focused representative, so structural equality of focused
// derivations decides equality of maps and exhaustive focused search
// enumerates hom-sets without duplicates.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "skewcoh/seqcalc.hpp"
#include "skewcoh/syntax.hpp"

namespace skewcoh {

enum class FocRule : std::uint8_t { Uf, Switch, IL, OtL, AxAtm, IR, OtR };

std::string_view rule_name(FocRule r);

// Phase-annotated derivation. L-phase rules: Uf, Switch, IL, OtL.
// R-phase rules: AxAtm, IR, OtR. R-phase stoups are empty or atomic.
class FocDeriv {
 public:
  static FocDeriv uf(FocDeriv premise);      // A | G |- C (L)  =>  - | A, G |- C (L)
  static FocDeriv sw(FocDeriv premise);      // T | G |- C (R)  =>  T | G |- C (L)
  static FocDeriv il(FocDeriv premise);      // - | G |- C (L)  =>  I | G |- C (L)
  static FocDeriv otl(FocDeriv premise);     // A | B, G |- C (L)  =>  A * B | G |- C (L)
  static FocDeriv ax_atm(Formula x);         // X | |- X (R)
  static FocDeriv ir();                      // - | |- I (R)
  // T | G |- A (R),  - | D |- B (L)  =>  T | G, D |- A * B (R)
  static FocDeriv otr(FocDeriv left, FocDeriv right);
  static FocDeriv otr(FocDeriv left, FocDeriv right, std::size_t split);

  FocRule rule() const noexcept { return node_->rule; }
  Phase phase() const noexcept { return node_->phase; }
  const Sequent& conclusion() const noexcept { return node_->seq; }
  std::span<const FocDeriv> premises() const noexcept { return node_->premises; }
  const FocDeriv& premise(std::size_t i = 0) const noexcept { return node_->premises[i]; }
  std::size_t split() const noexcept { return node_->split; }
  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const FocDeriv& a, const FocDeriv& b) noexcept;

 private:
  struct Node {
    FocRule rule;
    Phase phase;
    Sequent seq;
    std::vector<FocDeriv> premises;
    std::size_t split;
    std::size_t size;
    std::size_t hash;
  };
  explicit FocDeriv(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static FocDeriv make(FocRule r, Phase p, Sequent s, std::vector<FocDeriv> ps,
                       std::size_t split);

  std::shared_ptr<const Node> node_;
};

struct FocDerivHash {
  std::size_t operator()(const FocDeriv& d) const noexcept { return d.hash(); }
};

// Re-derives every node's conclusion and phase from scratch and checks the
// irreducible-stoup discipline. Returns false on any violation.
bool validate(const FocDeriv& d);

// Phase erasure. Throw RuleError if the phase does not match.
SeqDeriv emb_l(const FocDeriv& d);
SeqDeriv emb_r(const FocDeriv& d);

// Admissible rules of the focused calculus (results are L-phase unless noted).
FocDeriv foc_ax(const Formula& a);
FocDeriv foc_ir();
FocDeriv foc_otr(const FocDeriv& f, const FocDeriv& g);
FocDeriv foc_scut(const FocDeriv& f, const FocDeriv& g);
FocDeriv foc_ccut(const FocDeriv& f, const FocDeriv& g, std::size_t position);
// f is R-phase; the result is L-phase.
FocDeriv foc_scut_r(const FocDeriv& f, const FocDeriv& g);
// g is R-phase; so is the result.
FocDeriv foc_ccut_r(const FocDeriv& f, const FocDeriv& g, std::size_t position);

// The focused representative of a cut-free derivation.
FocDeriv focus(const SeqDeriv& d);

// Every L-phase focused derivation of the sequent, each exactly once.
// Order: uf before switch on an empty stoup; in R phase ax, then IR, then
// otR with increasing split and left-premise-major products.
std::vector<FocDeriv> focderivs(const Sequent& seq);
std::vector<FocDeriv> focderivs(const Stoup& s, const Context& g, const Formula& c);
std::vector<FocDeriv> focderivs_r(const Sequent& seq);

bool derivable(const Sequent& seq);
bool derivable(const Stoup& s, const Context& g, const Formula& c);

}  // namespace skewcoh
