#include "oracles.hpp"

#include <deque>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace skewcoh::testing {

Formula atom_no(std::size_t i) {
  static const char* names[] = {"X", "Y", "Z", "W", "V", "U"};
  if (i < 6) return Formula::atom(names[i]);
  return Formula::atom("A" + std::to_string(i));
}

std::vector<Formula> formulas_with(std::size_t conns, std::size_t atoms) {
  std::vector<Formula> out;
  if (conns == 0) {
    for (std::size_t i = 0; i < atoms; ++i) out.push_back(atom_no(i));
    return out;
  }
  if (conns == 1) out.push_back(Formula::unit());
  for (std::size_t l = 0; l < conns; ++l) {
    const auto ls = formulas_with(l, atoms);
    const auto rs = formulas_with(conns - 1 - l, atoms);
    for (const auto& a : ls)
      for (const auto& b : rs) out.push_back(Formula::tensor(a, b));
  }
  return out;
}

std::vector<Formula> formulas_upto(std::size_t max_conns, std::size_t atoms) {
  std::vector<Formula> out;
  for (std::size_t c = 0; c <= max_conns; ++c) {
    auto fs = formulas_with(c, atoms);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

namespace {

std::size_t leaves(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom: return 1;
    case FormulaKind::Unit: return 0;
    case FormulaKind::Tensor: return leaves(f.left()) + leaves(f.right());
  }
  return 0;
}

Formula relabel(const Formula& f, const std::vector<std::size_t>& rgs, std::size_t& at) {
  switch (f.kind()) {
    case FormulaKind::Atom: return atom_no(rgs[at++]);
    case FormulaKind::Unit: return f;
    case FormulaKind::Tensor: {
      Formula l = relabel(f.left(), rgs, at);
      return Formula::tensor(std::move(l), relabel(f.right(), rgs, at));
    }
  }
  return f;
}

// Restricted growth strings of length n with values below k.
void growth_strings(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t top) {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v <= top && v < k; ++v) {
      cur.push_back(v);
      go(std::max(top, v + 1));
      cur.pop_back();
    }
  };
  go(0);
}

void all_strings(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(n, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == k) cur[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

std::vector<std::vector<Formula>> formula_tuples(std::size_t arity, std::size_t max_total,
                                                 std::size_t max_atoms, bool canonical) {
  std::vector<std::vector<Formula>> shapes_by_conns;
  for (std::size_t c = 0; c <= max_total; ++c) shapes_by_conns.push_back(formulas_with(c, 1));

  std::vector<std::vector<Formula>> out;
  std::vector<Formula> cur;
  std::unordered_map<std::size_t, std::vector<std::vector<std::size_t>>> rgs_cache;
  std::function<void(std::size_t)> go = [&](std::size_t budget) {
    if (cur.size() == arity) {
      std::size_t n = 0;
      for (const auto& f : cur) n += leaves(f);
      auto it = rgs_cache.find(n);
      if (it == rgs_cache.end()) {
        std::vector<std::vector<std::size_t>> rs;
        if (canonical)
          growth_strings(n, max_atoms, rs);
        else
          all_strings(n, max_atoms, rs);
        it = rgs_cache.emplace(n, std::move(rs)).first;
      }
      for (const auto& rgs : it->second) {
        std::size_t at = 0;
        std::vector<Formula> t;
        for (const auto& f : cur) t.push_back(relabel(f, rgs, at));
        out.push_back(std::move(t));
      }
      return;
    }
    for (std::size_t c = 0; c <= budget; ++c)
      for (const auto& s : shapes_by_conns[c]) {
        cur.push_back(s);
        go(budget - c);
        cur.pop_back();
      }
  };
  go(max_total);
  return out;
}

std::vector<std::pair<Formula, Formula>> formula_pairs(std::size_t max_total,
                                                       std::size_t max_atoms) {
  std::vector<std::pair<Formula, Formula>> out;
  for (auto& t : formula_tuples(2, max_total, max_atoms)) out.emplace_back(t[0], t[1]);
  return out;
}

std::vector<std::pair<Formula, Formula>> matched_pairs(std::size_t max_each,
                                                       std::size_t max_atoms) {
  std::vector<std::vector<Formula>> by_leaves;
  for (const auto& f : formulas_upto(max_each, 1)) {
    const std::size_t n = leaves(f);
    if (by_leaves.size() <= n) by_leaves.resize(n + 1);
    by_leaves[n].push_back(f);
  }
  std::vector<std::pair<Formula, Formula>> out;
  for (std::size_t n = 0; n < by_leaves.size(); ++n) {
    std::vector<std::vector<std::size_t>> rs;
    growth_strings(n, max_atoms, rs);
    for (const auto& a : by_leaves[n])
      for (const auto& c : by_leaves[n])
        for (const auto& r : rs) {
          std::size_t i = 0, j = 0;
          Formula ra = relabel(a, r, i);
          out.emplace_back(std::move(ra), relabel(c, r, j));
        }
  }
  return out;
}

std::vector<Sequent> sequents_upto(std::size_t max_conns, std::size_t max_ctx,
                                   std::size_t max_atoms, bool canonical) {
  std::vector<Sequent> out;
  for (int stoup = 0; stoup <= 1; ++stoup)
    for (std::size_t n = 0; n <= max_ctx; ++n)
      for (auto& t : formula_tuples(stoup + n + 1, max_conns, max_atoms, canonical)) {
        Sequent s{std::nullopt, {}, t.back()};
        std::size_t i = 0;
        if (stoup) s.stoup = t[i++];
        for (std::size_t k = 0; k < n; ++k) s.context.push_back(t[i++]);
        out.push_back(std::move(s));
      }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Brute {
 public:
  const std::vector<SeqDeriv>& all(const Sequent& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::vector<SeqDeriv> out;
    const Formula& c = s.succedent;
    if (s.stoup && s.context.empty() && *s.stoup == c) out.push_back(SeqDeriv::ax(c));
    if (!s.stoup && s.context.empty() && c.is_unit()) out.push_back(SeqDeriv::ir());
    if (!s.stoup && !s.context.empty()) {
      Context rest(s.context.begin() + 1, s.context.end());
      for (const auto& d : all({s.context.front(), rest, c})) out.push_back(SeqDeriv::uf(d));
    }
    if (s.stoup && s.stoup->is_unit())
      for (const auto& d : all({std::nullopt, s.context, c})) out.push_back(SeqDeriv::il(d));
    if (s.stoup && s.stoup->is_tensor()) {
      Context g{s.stoup->right()};
      g.insert(g.end(), s.context.begin(), s.context.end());
      for (const auto& d : all({s.stoup->left(), g, c})) out.push_back(SeqDeriv::otl(d));
    }
    if (c.is_tensor())
      for (std::size_t k = 0; k <= s.context.size(); ++k) {
        Context g(s.context.begin(), s.context.begin() + k);
        Context d(s.context.begin() + k, s.context.end());
        const auto ls = all({s.stoup, g, c.left()});
        if (ls.empty()) continue;
        const auto rs = all({std::nullopt, d, c.right()});
        for (const auto& l : ls)
          for (const auto& r : rs) out.push_back(SeqDeriv::otr(l, r));
      }
    return memo_.emplace(s, std::move(out)).first->second;
  }

 private:
  std::unordered_map<Sequent, std::vector<SeqDeriv>, SequentHash> memo_;
};

}  // namespace

std::vector<SeqDeriv> brute_derivations(const Sequent& s) { return Brute().all(s); }

std::size_t brute_class_count(const Sequent& s) {
  std::unordered_set<SeqDeriv, SeqDerivHash> classes;
  for (const auto& d : brute_derivations(s)) classes.insert(circeq_normalize(d));
  return classes.size();
}

// ---------------------------------------------------------------------------

namespace {

void rotations(const Formula& f, std::vector<Formula>& out) {
  if (!f.is_tensor()) return;
  if (f.left().is_tensor())
    out.push_back(Formula::tensor(f.left().left(), Formula::tensor(f.left().right(), f.right())));
  std::vector<Formula> sub;
  rotations(f.left(), sub);
  for (auto& r : sub) out.push_back(Formula::tensor(r, f.right()));
  sub.clear();
  rotations(f.right(), sub);
  for (auto& r : sub) out.push_back(Formula::tensor(f.left(), r));
}

}  // namespace

std::size_t tamari_rotation_pairs(std::size_t n) {
  std::size_t total = 0;
  for (const auto& start : unit_free_shapes(n, atom_no(0))) {
    std::unordered_set<Formula, FormulaHash> seen{start};
    std::deque<Formula> queue{start};
    while (!queue.empty()) {
      Formula f = queue.front();
      queue.pop_front();
      std::vector<Formula> next;
      rotations(f, next);
      for (auto& g : next)
        if (seen.insert(g).second) queue.push_back(g);
    }
    total += seen.size();
  }
  return total;
}

std::size_t tamari_closed_form(std::size_t n) {
  // 2 * C(4n+1, n+1) / ((3n+1)(3n+2))
  unsigned __int128 binom = 1;
  for (std::size_t i = 1; i <= n + 1; ++i) binom = binom * (3 * n + i) / i;
  return static_cast<std::size_t>(2 * binom / ((3 * n + 1) * (3 * n + 2)));
}

// ---------------------------------------------------------------------------

Formula random_formula(std::mt19937_64& rng, std::size_t max_conns, std::size_t atoms) {
  std::function<Formula(std::size_t)> gen = [&](std::size_t c) -> Formula {
    if (c == 0) return atom_no(std::uniform_int_distribution<std::size_t>(0, atoms - 1)(rng));
    if (c == 1 && rng() % 2 == 0) return Formula::unit();
    const std::size_t l = std::uniform_int_distribution<std::size_t>(0, c - 1)(rng);
    Formula a = gen(l);
    return Formula::tensor(std::move(a), gen(c - 1 - l));
  };
  return gen(std::uniform_int_distribution<std::size_t>(0, max_conns)(rng));
}

SeqDeriv random_derivation(std::mt19937_64& rng, std::size_t depth, std::size_t atoms) {
  if (depth == 0) {
    if (rng() % 6 == 0) return SeqDeriv::ir();
    return SeqDeriv::ax(random_formula(rng, 2, atoms));
  }
  auto sub = [&] { return random_derivation(rng, depth - 1, atoms); };
  switch (rng() % 5) {
    case 0: return sub();
    case 1: {
      SeqDeriv p = sub();
      return p.conclusion().stoup ? SeqDeriv::uf(p) : SeqDeriv::il(p);
    }
    case 2: {
      SeqDeriv p = sub();
      if (!p.conclusion().stoup) return SeqDeriv::il(p);
      if (p.conclusion().context.empty()) return p;
      return SeqDeriv::otl(p);
    }
    default: {
      SeqDeriv l = sub();
      SeqDeriv r = sub();
      if (r.conclusion().stoup) r = SeqDeriv::uf(r);
      return SeqDeriv::otr(l, r);
    }
  }
}

namespace {

CatTerm term_from(std::mt19937_64& rng, const Formula& dom, std::size_t depth,
                  std::size_t atoms) {
  std::vector<int> options{0, 1};  // id, rho
  if (dom.is_tensor() && dom.left().is_unit()) options.push_back(2);
  if (dom.is_tensor() && dom.left().is_tensor()) options.push_back(3);
  if (depth > 0) {
    if (dom.is_tensor()) options.push_back(4);
    options.push_back(5);
    options.push_back(5);
  }
  switch (options[rng() % options.size()]) {
    case 0: return CatTerm::id(dom);
    case 1: return CatTerm::rho(dom);
    case 2: return CatTerm::lam(dom.right());
    case 3: return CatTerm::al(dom.left().left(), dom.left().right(), dom.right());
    case 4:
      return CatTerm::tensor(term_from(rng, dom.left(), depth - 1, atoms),
                             term_from(rng, dom.right(), depth - 1, atoms));
    default: {
      CatTerm f = term_from(rng, dom, depth - 1, atoms);
      CatTerm g = term_from(rng, f.type()->cod, depth - 1, atoms);
      return CatTerm::comp(g, f);
    }
  }
}

}  // namespace

CatTerm random_term(std::mt19937_64& rng, std::size_t depth, std::size_t atoms) {
  return term_from(rng, random_formula(rng, 3, atoms), depth, atoms);
}

std::vector<CatTerm> terms_upto(std::size_t max_size, std::size_t atoms) {
  std::vector<std::vector<CatTerm>> by_size(max_size + 1);
  for (std::size_t s = 1; s <= max_size; ++s) {
    auto& out = by_size[s];
    for (const auto& a : formulas_with(s - 1, atoms)) {
      out.push_back(CatTerm::id(a));
      out.push_back(CatTerm::lam(a));
      out.push_back(CatTerm::rho(a));
    }
    for (const auto& t : formula_tuples(3, s - 1, atoms)) {
      std::size_t c = 0;
      for (const auto& f : t) c += f.connectives();
      if (c == s - 1) out.push_back(CatTerm::al(t[0], t[1], t[2]));
    }
    if (s < 3) continue;
    for (std::size_t l = 1; l + 1 < s; ++l) {
      const auto& ls = by_size[l];
      const auto& rs = by_size[s - 1 - l];
      for (const auto& f : ls)
        for (const auto& g : rs) out.push_back(CatTerm::tensor(f, g));
      std::unordered_map<Formula, std::vector<const CatTerm*>, FormulaHash> by_dom;
      for (const auto& g : rs) by_dom[g.type()->dom].push_back(&g);
      for (const auto& f : ls) {
        auto it = by_dom.find(f.type()->cod);
        if (it == by_dom.end()) continue;
        for (const CatTerm* g : it->second) out.push_back(CatTerm::comp(*g, f));
      }
    }
  }
  std::vector<CatTerm> all;
  for (auto& v : by_size) all.insert(all.end(), v.begin(), v.end());
  return all;
}

}  // namespace skewcoh::testing
