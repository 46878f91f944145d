#pragma once

// Two concrete skew monoidal categories used as semantic checks.
//
// Nat: the poset of naturals with I = n and x * y = (x -. n) + y, where -. is
// truncated subtraction. A map A => C exists only when eval A <= eval C.
//
// Ptd: finite pointed sets. (X,p) * (Y,q) is the disjoint sum pointed at the
// left basepoint; I is a one-point set. Elements are indices, with the left
// summand occupying the low indices.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewcoh/catcalc.hpp"
#include "skewcoh/seqcalc.hpp"
#include "skewcoh/syntax.hpp"

namespace skewcoh {

// An atom without a value in the model.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NatModel {
  std::uint64_t n = 0;
  std::map<std::string, std::uint64_t> valuation;
};

std::uint64_t eval_formula_nat(const Formula& f, const NatModel& m);
// eval [[S | G]] <= eval C for the conclusion of d.
bool check_nat_soundness(const SeqDeriv& d, const NatModel& m);

struct PointedSet {
  std::size_t size = 1;
  std::size_t basepoint = 0;

  friend bool operator==(const PointedSet&, const PointedSet&) = default;
};

struct PtdModel {
  std::map<std::string, PointedSet> valuation;
};

struct PtdFunction {
  PointedSet dom;
  PointedSet cod;
  std::vector<std::size_t> table;

  friend bool operator==(const PtdFunction&, const PtdFunction&) = default;
};

PointedSet eval_formula_ptd(const Formula& f, const PtdModel& m);
// Throws TypeError on an ill-typed term.
PtdFunction eval_catterm_ptd(const CatTerm& t, const PtdModel& m);
// Throws TypeError if the terms have different types.
bool check_ptd_equal(const CatTerm& f, const CatTerm& g, const PtdModel& m);

// Key-value model description:
//
//   model = nat        model = ptd
//   unit = 3           X = 3:1      # size:basepoint
//   X = 5
//
// `#` starts a comment. Throws SyntaxError with the offset of the bad line.
std::variant<NatModel, PtdModel> parse_model(std::string_view text);

}  // namespace skewcoh
