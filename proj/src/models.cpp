#include "skewcoh/models.hpp"

#include <charconv>
#include <numeric>
#include <optional>

#include "skewcoh/errors.hpp"

namespace skewcoh {

std::uint64_t eval_formula_nat(const Formula& f, const NatModel& m) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto it = m.valuation.find(f.name());
      if (it == m.valuation.end()) throw ModelError("no value for atom " + f.name());
      return it->second;
    }
    case FormulaKind::Unit: return m.n;
    case FormulaKind::Tensor: {
      const std::uint64_t x = eval_formula_nat(f.left(), m);
      return (x > m.n ? x - m.n : 0) + eval_formula_nat(f.right(), m);
    }
  }
  return 0;
}

bool check_nat_soundness(const SeqDeriv& d, const NatModel& m) {
  const Sequent& s = d.conclusion();
  return eval_formula_nat(interp_antecedent(s.stoup, s.context), m) <=
         eval_formula_nat(s.succedent, m);
}

PointedSet eval_formula_ptd(const Formula& f, const PtdModel& m) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto it = m.valuation.find(f.name());
      if (it == m.valuation.end()) throw ModelError("no value for atom " + f.name());
      return it->second;
    }
    case FormulaKind::Unit: return {1, 0};
    case FormulaKind::Tensor: {
      const PointedSet a = eval_formula_ptd(f.left(), m);
      const PointedSet b = eval_formula_ptd(f.right(), m);
      return {a.size + b.size, a.basepoint};
    }
  }
  return {};
}

namespace {

PtdFunction identity(const PointedSet& a) {
  PtdFunction r{a, a, std::vector<std::size_t>(a.size)};
  std::iota(r.table.begin(), r.table.end(), std::size_t{0});
  return r;
}

PtdFunction eval(const CatTerm& t, const PtdModel& m) {
  const auto& o = t.objects();
  switch (t.kind()) {
    case TermKind::Id: return identity(eval_formula_ptd(o[0], m));
    case TermKind::Lam: {
      // Both the unit's point and the basepoint of A go to the basepoint.
      const PointedSet a = eval_formula_ptd(o[0], m);
      PtdFunction r{{1 + a.size, 0}, a, {a.basepoint}};
      for (std::size_t x = 0; x < a.size; ++x) r.table.push_back(x);
      return r;
    }
    case TermKind::Rho: {
      const PointedSet a = eval_formula_ptd(o[0], m);
      PtdFunction r = identity(a);
      r.cod = {a.size + 1, a.basepoint};
      return r;
    }
    case TermKind::Al:
      return identity(eval_formula_ptd(Formula::tensor(Formula::tensor(o[0], o[1]), o[2]), m));
    case TermKind::Comp: {
      const PtdFunction f = eval(t.rhs(), m);
      const PtdFunction g = eval(t.lhs(), m);
      PtdFunction r{f.dom, g.cod, {}};
      r.table.reserve(f.table.size());
      for (std::size_t x : f.table) r.table.push_back(g.table[x]);
      return r;
    }
    case TermKind::Tensor: {
      const PtdFunction f = eval(t.lhs(), m);
      const PtdFunction g = eval(t.rhs(), m);
      PtdFunction r{{f.dom.size + g.dom.size, f.dom.basepoint},
                    {f.cod.size + g.cod.size, f.cod.basepoint},
                    f.table};
      for (std::size_t x : g.table) r.table.push_back(f.cod.size + x);
      return r;
    }
  }
  return {};
}

}  // namespace

PtdFunction eval_catterm_ptd(const CatTerm& t, const PtdModel& m) {
  infer_type(t);
  return eval(t, m);
}

bool check_ptd_equal(const CatTerm& f, const CatTerm& g, const PtdModel& m) {
  if (!(infer_type(f) == infer_type(g)))
    throw TypeError("terms have different types", "root");
  return eval(f, m) == eval(g, m);
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::uint64_t> number(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool valid_atom(std::string_view s) {
  try {
    Formula::atom(std::string(s));
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

std::variant<NatModel, PtdModel> parse_model(std::string_view text) {
  struct Entry {
    std::string_view key, value;
    std::size_t offset;
  };
  std::vector<Entry> entries;
  std::string_view kind;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    auto nl = text.find('\n', offset);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(offset, nl - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw SyntaxError("expected 'key = value'", offset);
      Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), offset};
      if (e.key == "model") {
        if (e.value != "nat" && e.value != "ptd")
          throw SyntaxError("model must be nat or ptd", offset);
        kind = e.value;
      } else {
        entries.push_back(e);
      }
    }
    offset = nl + 1;
  }
  if (kind.empty()) throw SyntaxError("missing 'model = nat|ptd' line", 0);

  if (kind == "nat") {
    NatModel m;
    for (const auto& e : entries) {
      auto v = number(e.value);
      if (!v) throw SyntaxError("expected a natural number", e.offset);
      if (e.key == "unit") {
        m.n = *v;
      } else if (valid_atom(e.key)) {
        m.valuation[std::string(e.key)] = *v;
      } else {
        throw SyntaxError("bad atom name '" + std::string(e.key) + "'", e.offset);
      }
    }
    return m;
  }

  PtdModel m;
  for (const auto& e : entries) {
    if (!valid_atom(e.key))
      throw SyntaxError("bad atom name '" + std::string(e.key) + "'", e.offset);
    const auto colon = e.value.find(':');
    std::optional<std::uint64_t> size, base;
    if (colon == std::string_view::npos) {
      size = number(e.value);
      base = 0;
    } else {
      size = number(trim(e.value.substr(0, colon)));
      base = number(trim(e.value.substr(colon + 1)));
    }
    if (!size || !base || *size == 0 || *base >= *size)
      throw SyntaxError("expected size:basepoint with basepoint < size", e.offset);
    m.valuation[std::string(e.key)] = {static_cast<std::size_t>(*size),
                                       static_cast<std::size_t>(*base)};
  }
  return m;
}

}  // namespace skewcoh
