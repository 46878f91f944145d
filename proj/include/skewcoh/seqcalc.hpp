#pragma once

// Cut-free derivations of the skew monoidal sequent calculus, the admissible
// cut rules, translations to and from the categorical calculus, and the
// congruence that identifies derivations denoting the same map.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "skewcoh/catcalc.hpp"
#include "skewcoh/syntax.hpp"

namespace skewcoh {

enum class SeqRule : std::uint8_t { Ax, Uf, IL, IR, OtL, OtR };

std::string_view rule_name(SeqRule r);

// A cut-free derivation. Constructors check the rule schema and throw
// RuleError on mismatch, so every value is well-formed.
class SeqDeriv {
 public:
  static SeqDeriv ax(Formula a);                    //  A | |- A
  static SeqDeriv uf(SeqDeriv premise);             //  A | G |- C   =>  - | A, G |- C
  static SeqDeriv il(SeqDeriv premise);             //  - | G |- C   =>  I | G |- C
  static SeqDeriv ir();                             //  - | |- I
  static SeqDeriv otl(SeqDeriv premise);            //  A | B, G |- C  =>  A * B | G |- C
  static SeqDeriv otr(SeqDeriv left, SeqDeriv right);
  // As above, additionally checking that the left premise takes `split`
  // context formulas.
  static SeqDeriv otr(SeqDeriv left, SeqDeriv right, std::size_t split);

  SeqRule rule() const noexcept { return node_->rule; }
  const Sequent& conclusion() const noexcept { return node_->seq; }
  std::span<const SeqDeriv> premises() const noexcept { return node_->premises; }
  const SeqDeriv& premise(std::size_t i = 0) const noexcept { return node_->premises[i]; }
  // Number of conclusion context formulas owned by the left premise of otR.
  std::size_t split() const noexcept { return node_->split; }

  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const SeqDeriv& a, const SeqDeriv& b) noexcept;

 private:
  struct Node {
    SeqRule rule;
    Sequent seq;
    std::vector<SeqDeriv> premises;
    std::size_t split;
    std::size_t size;
    std::size_t hash;
  };
  explicit SeqDeriv(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static SeqDeriv make(SeqRule r, Sequent s, std::vector<SeqDeriv> ps, std::size_t split);

  std::shared_ptr<const Node> node_;
};

struct SeqDerivHash {
  std::size_t operator()(const SeqDeriv& d) const noexcept { return d.hash(); }
};

enum class GenRule : std::uint8_t { Ax, Uf, IL, IR, OtL, OtR, Scut, Ccut };

std::string_view rule_name(GenRule r);

// A derivation that may contain explicit cuts.
class GeneralSeqDeriv {
 public:
  static GeneralSeqDeriv ax(Formula a);
  static GeneralSeqDeriv uf(GeneralSeqDeriv premise);
  static GeneralSeqDeriv il(GeneralSeqDeriv premise);
  static GeneralSeqDeriv ir();
  static GeneralSeqDeriv otl(GeneralSeqDeriv premise);
  static GeneralSeqDeriv otr(GeneralSeqDeriv left, GeneralSeqDeriv right);
  // f : S | G |- A,  g : A | D |- C   =>  S | G, D |- C
  static GeneralSeqDeriv scut(GeneralSeqDeriv f, GeneralSeqDeriv g);
  // f : - | G |- A,  g : S | D0, A, D1 |- C  with |D0| = position
  static GeneralSeqDeriv ccut(GeneralSeqDeriv f, GeneralSeqDeriv g, std::size_t position);
  static GeneralSeqDeriv from(const SeqDeriv& d);

  GenRule rule() const noexcept { return node_->rule; }
  const Sequent& conclusion() const noexcept { return node_->seq; }
  std::span<const GeneralSeqDeriv> premises() const noexcept { return node_->premises; }
  const GeneralSeqDeriv& premise(std::size_t i = 0) const noexcept {
    return node_->premises[i];
  }
  // otR: split point. ccut: position of the cut formula in the second premise.
  std::size_t split() const noexcept { return node_->attr; }
  std::size_t position() const noexcept { return node_->attr; }
  std::size_t size() const noexcept { return node_->size; }

  friend bool operator==(const GeneralSeqDeriv& a, const GeneralSeqDeriv& b) noexcept;

 private:
  struct Node {
    GenRule rule;
    Sequent seq;
    std::vector<GeneralSeqDeriv> premises;
    std::size_t attr;
    std::size_t size;
    std::size_t hash;
  };
  explicit GeneralSeqDeriv(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static GeneralSeqDeriv make(GenRule r, Sequent s, std::vector<GeneralSeqDeriv> ps,
                              std::size_t attr);

  std::shared_ptr<const Node> node_;
};

// Admissible cuts on cut-free derivations. Both throw TypeError when the cut
// formulas disagree.
SeqDeriv scut(const SeqDeriv& f, const SeqDeriv& g);
SeqDeriv ccut(const SeqDeriv& f, const SeqDeriv& g, std::size_t position);

SeqDeriv eliminate_cuts(const GeneralSeqDeriv& d);

// Translations between the calculi.
SeqDeriv cmplt(const CatTerm& t);
CatTerm sound(const SeqDeriv& d);
CatTerm sound(const GeneralSeqDeriv& d);

// [[f | G]] : [[A | G]] => [[B | G]]
CatTerm act_context(const CatTerm& f, const Context& g);
// psi : [[A * B | G]] => A * [[B | G]]
CatTerm psi(const Formula& a, const Formula& b, const Context& g);
// varphi : [[S | G, D]] => [[S | G]] * [[- | D]]
CatTerm varphi(const Stoup& s, const Context& g, const Context& d);

// Inverses of IL and otL. Throw RuleError on a stoup of the wrong shape.
SeqDeriv il_inv(const SeqDeriv& d);
SeqDeriv otl_inv(const SeqDeriv& d);
// d : [[S | G]] | D |- C   =>   S | G, D |- C
SeqDeriv otl_inv_star(const SeqDeriv& d, const Stoup& s, const Context& g);
// d : S | G, D |- C   =>   [[S | G]] | D |- C
SeqDeriv otl_star(const SeqDeriv& d, const Stoup& s, const Context& g);
// t : [[S | G]] => C   =>   S | G |- C
SeqDeriv strcmplt(const CatTerm& t, const Stoup& s, const Context& g);

// All results of rewriting one subderivation with one of the five
// congruence equations oriented left to right. Duplicates removed.
std::vector<SeqDeriv> circeq_rewrite_step(const SeqDeriv& d);
// Innermost rewriting to the unique normal form. Throws std::logic_error if
// the rewrite budget is exhausted, which would indicate a bug.
SeqDeriv circeq_normalize(const SeqDeriv& d);
// Throws RuleError when the conclusions differ.
bool decide_circeq(const SeqDeriv& f, const SeqDeriv& g);

}  // namespace skewcoh
