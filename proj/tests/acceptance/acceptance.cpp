// One PASS/FAIL line per acceptance criterion. A criterion passes only if
// every check holds exactly and it finishes within its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "cut_equations.hpp"
#include "oracles.hpp"
#include "skewcoh/catcalc.hpp"
#include "skewcoh/cli.hpp"
#include "skewcoh/focused.hpp"
#include "skewcoh/models.hpp"
#include "skewcoh/seqcalc.hpp"

using namespace skewcoh;
using namespace skewcoh::testing;

namespace {

// Collects failures; the detail text of the first few is kept for the report.
class Outcome {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks";
    if (!info_.empty()) s += ", " + info_;
    if (failures_) s += ", " + std::to_string(failures_) + " failed: " + notes_;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
  std::string info_;
};

struct Criterion {
  int number;
  const char* title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

Formula F(const char* s) { return parse_formula(s); }
CatTerm P(const char* s) { return parse_term(s); }
Sequent S(const char* s) { return parse_sequent(s); }

// ---------------------------------------------------------------------------

void derivability_matrix(Outcome& o) {
  const std::pair<const char*, bool> verdicts[] = {
      {"X * Y * Z | |- X * (Y * Z)", true},  {"X * (Y * Z) | |- X * Y * Z", false},
      {"X | |- X * I", true},                {"X * I | |- X", false},
      {"I * X | |- X", true},                {"X | |- I * X", false},
      {"X * (I * Y) * Z | |- X * I * (Y * Z)", true},
      {"X * I * (Y * Z) | |- X * (I * Y) * Z", false},
  };
  for (const auto& [text, expect] : verdicts) {
    const Sequent s = S(text);
    o.check(derivable(s) == expect, text);
    o.check(brute_derivations(s).empty() != expect, std::string("oracle: ") + text);
  }
  const Formula a = F("X * (I * Y) * Z");
  const Formula c = F("X * I * (Y * Z)");
  o.check(focderivs(a, {}, c).size() == 1, "unique map count");
  o.check(hom_count(a, c) == 1, "unique map hom_count");
  o.check(brute_class_count({a, {}, c}) == 1, "unique map oracle");
}

void prototypical_inequations(Outcome& o) {
  const std::pair<const char*, const char*> pairs[] = {
      {"lam[I] ; rho[I]", "id[I * I]"},
      {"al[X, I, Y] ; rho[X] (*) lam[Y]", "id[X * I * Y]"},
      {"rho[X] (*) lam[Y] ; al[X, I, Y]", "id[X * (I * Y)]"},
  };
  for (const auto& [f, g] : pairs) {
    o.check(!decide_equal(P(f), P(g)), std::string(f) + " vs " + g);
    o.check(!(normal_form(P(f)) == normal_form(P(g))), std::string("normal forms ") + f);
  }
}

// ---------------------------------------------------------------------------

class HomCache {
 public:
  const std::vector<CatTerm>& maps(const Formula& a, const Formula& c) {
    auto key = std::make_pair(a, c);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, fskmaps(a, c)).first;
    return it->second;
  }

 private:
  struct Less {
    bool operator()(const std::pair<Formula, Formula>& x,
                    const std::pair<Formula, Formula>& y) const {
      if (auto c = x.first <=> y.first; c != 0) return c < 0;
      return (x.second <=> y.second) < 0;
    }
  };
  std::map<std::pair<Formula, Formula>, std::vector<CatTerm>, Less> cache_;
};

struct Equation {
  const char* name;
  std::size_t objects;
  // (dom, cod) object indices of each map variable
  std::vector<std::pair<std::size_t, std::size_t>> maps;
  std::function<std::pair<CatTerm, CatTerm>(const std::vector<Formula>&,
                                            const std::vector<CatTerm>&)>
      sides;
};

std::vector<Equation> structural_equations() {
  using T = CatTerm;
  const Formula I = Formula::unit();
  auto ot = [](const Formula& a, const Formula& b) { return Formula::tensor(a, b); };
  return {
      {"left identity", 2, {{0, 1}},
       [](auto& x, auto& m) { return std::pair{T::comp(T::id(x[1]), m[0]), m[0]}; }},
      {"right identity", 2, {{0, 1}},
       [](auto& x, auto& m) { return std::pair{T::comp(m[0], T::id(x[0])), m[0]}; }},
      {"associativity", 4, {{0, 1}, {1, 2}, {2, 3}},
       [](auto&, auto& m) {
         return std::pair{T::comp(m[2], T::comp(m[1], m[0])), T::comp(T::comp(m[2], m[1]), m[0])};
       }},
      {"tensor of identities", 2, {},
       [ot](auto& x, auto&) {
         return std::pair{T::tensor(T::id(x[0]), T::id(x[1])), T::id(ot(x[0], x[1]))};
       }},
      {"tensor of composites", 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}},
       [](auto&, auto& m) {
         return std::pair{T::tensor(T::comp(m[1], m[0]), T::comp(m[3], m[2])),
                          T::comp(T::tensor(m[1], m[3]), T::tensor(m[0], m[2]))};
       }},
      {"naturality of lam", 2, {{0, 1}},
       [I](auto& x, auto& m) {
         return std::pair{T::comp(T::lam(x[1]), T::tensor(T::id(I), m[0])),
                          T::comp(m[0], T::lam(x[0]))};
       }},
      {"naturality of rho", 2, {{0, 1}},
       [I](auto& x, auto& m) {
         return std::pair{T::comp(T::tensor(m[0], T::id(I)), T::rho(x[0])),
                          T::comp(T::rho(x[1]), m[0])};
       }},
      {"naturality of al", 6, {{0, 1}, {2, 3}, {4, 5}},
       [](auto& x, auto& m) {
         return std::pair{T::comp(T::tensor(m[0], T::tensor(m[1], m[2])), T::al(x[0], x[2], x[4])),
                          T::comp(T::al(x[1], x[3], x[5]), T::tensor(T::tensor(m[0], m[1]), m[2]))};
       }},
      {"law (a)", 0, {},
       [I](auto&, auto&) { return std::pair{T::comp(T::lam(I), T::rho(I)), T::id(I)}; }},
      {"law (b)", 2, {},
       [I, ot](auto& x, auto&) {
         return std::pair{T::comp(T::tensor(T::id(x[0]), T::lam(x[1])),
                                  T::comp(T::al(x[0], I, x[1]),
                                          T::tensor(T::rho(x[0]), T::id(x[1])))),
                          T::id(ot(x[0], x[1]))};
       }},
      {"law (c)", 2, {},
       [I, ot](auto& x, auto&) {
         return std::pair{T::comp(T::lam(ot(x[0], x[1])), T::al(I, x[0], x[1])),
                          T::tensor(T::lam(x[0]), T::id(x[1]))};
       }},
      {"law (d)", 2, {},
       [I, ot](auto& x, auto&) {
         return std::pair{T::comp(T::al(x[0], x[1], I), T::rho(ot(x[0], x[1]))),
                          T::tensor(T::id(x[0]), T::rho(x[1]))};
       }},
      {"law (e)", 4, {},
       [ot](auto& x, auto&) {
         const auto& [a, b, c, d] = std::tie(x[0], x[1], x[2], x[3]);
         return std::pair{
             T::comp(T::al(a, b, ot(c, d)), T::al(ot(a, b), c, d)),
             T::comp(T::tensor(T::id(a), T::al(b, c, d)),
                     T::comp(T::al(a, ot(b, c), d), T::tensor(T::al(a, b, c), T::id(d))))};
       }},
  };
}

void equation_suite(Outcome& o) {
  HomCache homs;
  for (const auto& eq : structural_equations()) {
    std::size_t instances = 0;
    const auto tuples =
        eq.objects == 0 ? std::vector<std::vector<Formula>>{{}} : formula_tuples(eq.objects, 4, 2);
    for (const auto& x : tuples) {
      std::vector<const std::vector<CatTerm>*> choices;
      bool empty = false;
      for (const auto& [d, c] : eq.maps) {
        choices.push_back(&homs.maps(x[d], x[c]));
        empty = empty || choices.back()->empty();
      }
      if (empty) continue;
      std::vector<std::size_t> idx(choices.size(), 0);
      while (true) {
        std::vector<CatTerm> m;
        for (std::size_t i = 0; i < idx.size(); ++i) m.push_back((*choices[i])[idx[i]]);
        const auto [lhs, rhs] = eq.sides(x, m);
        ++instances;
        o.check(decide_equal(lhs, rhs), std::string(eq.name) + ": " + print_term(lhs));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k]->size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
    o.check(instances > 0, std::string(eq.name) + " has no instances");
  }
}

// ---------------------------------------------------------------------------

void roundtrips(Outcome& o) {
  std::size_t focused = 0, plain = 0;
  for (const auto& [a, c] : matched_pairs(5, 2)) {
    const Sequent s{a, {}, c};
    for (const auto& d : focderivs(s)) {
      ++focused;
      o.check(focus(emb_l(d)) == d, "focus . emb_l on " + print_sequent(s));
    }
    for (const auto& d : brute_derivations(s)) {
      ++plain;
      o.check(decide_circeq(emb_l(focus(d)), d), "emb_l . focus on " + print_sequent(s));
      o.check(decide_circeq(strcmplt(sound(d), s.stoup, s.context), d),
              "strcmplt . sound on " + print_sequent(s));
    }
  }
  std::size_t terms = 0;
  for (const auto& t : terms_upto(6, 2)) {
    ++terms;
    o.check(decide_equal(sound(cmplt(t)), t), "sound . cmplt on " + print_term(t));
  }
  o.note(std::to_string(focused) + " focused, " + std::to_string(plain) + " cut-free, " +
         std::to_string(terms) + " terms");
}

void enumeration_oracle(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& [a, c] : matched_pairs(5, 3)) {
    ++pairs;
    const Sequent s{a, {}, c};
    o.check(focderivs(s).size() == brute_class_count(s), "count on " + print_sequent(s));
  }
  for (const auto& [a, c] : formula_pairs(5, 3)) {
    ++pairs;
    const Sequent s{a, {}, c};
    o.check(focderivs(s).size() == brute_class_count(s), "count on " + print_sequent(s));
  }
  o.check(hom_count(F("I * I"), F("I * I")) == 2, "hom_count(I * I, I * I)");
  o.note(std::to_string(pairs) + " pairs");
}

void cut_equations(Outcome& o) {
  const struct {
    CutLevel level;
    std::size_t ctx;
    const char* tag;
  } runs[] = {{CutLevel::Focused, 3, "focused"}, {CutLevel::Unfocused, 2, "unfocused"}};
  for (const auto& r : runs) {
    const DerivPool pool = make_pool(4, r.ctx, 2);
    std::size_t total = 0;
    for (const auto& e : check_cut_equations(pool, r.level)) {
      total += e.instances;
      o.check(e.instances > 0, std::string(r.tag) + " " + e.name + " has no instances");
      for (std::size_t i = 0; i < e.failures; ++i)
        o.check(false, std::string(r.tag) + " " + e.name + " at " + e.first_failure);
      o.check(true, e.name);
    }
    o.note(std::string(r.tag) + " " + std::to_string(total) + " instances");
  }
}

bool unit_free(const Formula& f) {
  if (f.is_unit()) return false;
  return f.is_atom() || (unit_free(f.left()) && unit_free(f.right()));
}

void tamari(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& [a, c] : matched_pairs(4, 3)) {
    if (!unit_free(a) || !unit_free(c)) continue;
    ++pairs;
    o.check(hom_count(a, c) <= 1, "degenerate " + print_formula(a) + " => " + print_formula(c));
  }
  o.note(std::to_string(pairs) + " unit-free pairs");
  const std::size_t expected[] = {1, 3, 13, 68};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::ostringstream out, err;
    const int code = run_cli({"tamari", std::to_string(n)}, out, err);
    const std::string got = out.str();
    o.check(code == 0, "tamari exit code");
    o.check(got == std::to_string(tamari_rotation_pairs(n)) + "\n", "tamari vs rotation oracle");
    o.check(got == std::to_string(tamari_closed_form(n)) + "\n", "tamari vs closed form");
    o.check(got == std::to_string(expected[n - 1]) + "\n", "tamari " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------

PtdModel random_ptd(std::mt19937_64& rng) {
  PtdModel m;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t size = 1 + rng() % 3;
    m.valuation[atom_no(i).name()] = {size, rng() % size};
  }
  return m;
}

// Every model over `atoms` with carriers of size at most 3.
std::vector<PtdModel> all_ptd_models(const std::vector<std::string>& atoms) {
  std::vector<PointedSet> sets;
  for (std::size_t size = 1; size <= 3; ++size)
    for (std::size_t b = 0; b < size; ++b) sets.push_back({size, b});
  std::vector<PtdModel> out{PtdModel{}};
  for (const auto& a : atoms) {
    std::vector<PtdModel> next;
    for (const auto& m : out)
      for (const auto& s : sets) {
        PtdModel n = m;
        n.valuation[a] = s;
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  return out;
}

void models(Outcome& o) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const SeqDeriv d = random_derivation(rng, 6, 3);
    NatModel m{rng() % 7, {}};
    for (std::size_t k = 0; k < 3; ++k) m.valuation[atom_no(k).name()] = rng() % 9;
    o.check(check_nat_soundness(d, m), "nat model on " + print_sequent(d.conclusion()));
  }

  std::size_t agreeing = 0;
  auto agree = [&](const CatTerm& f, const CatTerm& g) {
    if (!decide_equal(f, g)) return;
    ++agreeing;
    for (int k = 0; k < 4; ++k)
      o.check(check_ptd_equal(f, g, random_ptd(rng)), "ptd on " + print_term(f));
  };
  std::map<std::string, std::vector<CatTerm>> by_type;
  for (int i = 0; i < 400; ++i) {
    const CatTerm t = random_term(rng, 4, 2);
    agree(t, normal_form(t));
    const MapType ty = infer_type(t);
    by_type[print_formula(ty.dom) + " => " + print_formula(ty.cod)].push_back(t);
  }
  for (const auto& [_, ts] : by_type)
    for (std::size_t i = 0; i < ts.size() && i < 12; ++i)
      for (std::size_t j = i + 1; j < ts.size() && j < 12; ++j) agree(ts[i], ts[j]);
  for (const auto& eq : structural_equations()) {
    if (!eq.maps.empty()) continue;
    for (const auto& x : eq.objects == 0 ? std::vector<std::vector<Formula>>{{}}
                                         : formula_tuples(eq.objects, 2, 2)) {
      const auto [lhs, rhs] = eq.sides(x, {});
      agree(lhs, rhs);
    }
  }
  o.note(std::to_string(agreeing) + " equal pairs");

  const std::pair<const char*, const char*> pairs[] = {
      {"lam[I] ; rho[I]", "id[I * I]"},
      {"al[X, I, Y] ; rho[X] (*) lam[Y]", "id[X * I * Y]"},
      {"rho[X] (*) lam[Y] ; al[X, I, Y]", "id[X * (I * Y)]"},
  };
  for (const auto& [f, g] : pairs) {
    bool separated = false;
    for (const auto& m : all_ptd_models({"X", "Y"}))
      if (!check_ptd_equal(P(f), P(g), m)) {
        separated = true;
        break;
      }
    o.check(separated, std::string("no separating model for ") + f);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "derivability matrix", 1.0, derivability_matrix},
      {2, "prototypical inequations", 1.0, prototypical_inequations},
      {3, "equation suite", 30.0, equation_suite},
      {4, "roundtrips", 60.0, roundtrips},
      {5, "enumeration matches the brute-force oracle", 60.0, enumeration_oracle},
      {6, "cut equations", 60.0, cut_equations},
      {7, "Tamari degeneracy and counts", 30.0, tamari},
      {8, "model soundness", 30.0, models},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.ok() && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s [%s%s] (%.2f s, budget %.0f s)\n", pass ? "PASS" : "FAIL",
                c.number, c.title, o.summary().c_str(), in_time ? "" : ", over budget", secs,
                c.budget_s);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
