#include "skewcoh/focused.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "parse_detail.hpp"
#include "skewcoh/errors.hpp"

namespace skewcoh {

using detail::hash_combine;

namespace {

bool irreducible(const Stoup& s) { return !s || s->is_atom(); }

Context tail(const Context& c, std::size_t from) {
  return Context(c.begin() + static_cast<std::ptrdiff_t>(from), c.end());
}

[[noreturn]] void schema(const char* rule, const std::string& why) {
  throw RuleError(std::string(rule) + ": " + why);
}

}  // namespace

std::string_view rule_name(FocRule r) {
  switch (r) {
    case FocRule::Uf: return "uf";
    case FocRule::Switch: return "switch";
    case FocRule::IL: return "IL";
    case FocRule::OtL: return "otL";
    case FocRule::AxAtm: return "ax";
    case FocRule::IR: return "IR";
    case FocRule::OtR: return "otR";
  }
  return "?";
}

FocDeriv FocDeriv::make(FocRule r, Phase ph, Sequent s, std::vector<FocDeriv> ps,
                        std::size_t split) {
  std::size_t size = 1;
  std::size_t h = hash_combine(static_cast<std::size_t>(r) + 101, split);
  if (r == FocRule::AxAtm) h = hash_combine(h, s.succedent.hash());
  for (const auto& p : ps) {
    size += p.size();
    h = hash_combine(h, p.hash());
  }
  return FocDeriv(
      std::make_shared<const Node>(Node{r, ph, std::move(s), std::move(ps), split, size, h}));
}

FocDeriv FocDeriv::uf(FocDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (premise.phase() != Phase::L) schema("uf", "premise must be L-phase");
  if (!p.stoup) schema("uf", "premise stoup must be nonempty");
  Context ctx{*p.stoup};
  ctx.insert(ctx.end(), p.context.begin(), p.context.end());
  Sequent s{std::nullopt, std::move(ctx), p.succedent};
  return make(FocRule::Uf, Phase::L, std::move(s), {std::move(premise)}, 0);
}

FocDeriv FocDeriv::sw(FocDeriv premise) {
  if (premise.phase() != Phase::R) schema("switch", "premise must be R-phase");
  Sequent s = premise.conclusion();
  return make(FocRule::Switch, Phase::L, std::move(s), {std::move(premise)}, 0);
}

FocDeriv FocDeriv::il(FocDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (premise.phase() != Phase::L) schema("IL", "premise must be L-phase");
  if (p.stoup) schema("IL", "premise stoup must be empty");
  Sequent s{Formula::unit(), p.context, p.succedent};
  return make(FocRule::IL, Phase::L, std::move(s), {std::move(premise)}, 0);
}

FocDeriv FocDeriv::otl(FocDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (premise.phase() != Phase::L) schema("otL", "premise must be L-phase");
  if (!p.stoup || p.context.empty()) schema("otL", "premise needs a stoup and a context");
  Sequent s{Formula::tensor(*p.stoup, p.context.front()), tail(p.context, 1), p.succedent};
  return make(FocRule::OtL, Phase::L, std::move(s), {std::move(premise)}, 0);
}

FocDeriv FocDeriv::ax_atm(Formula x) {
  if (!x.is_atom()) schema("ax", "focused axiom is restricted to atoms");
  Sequent s{x, {}, x};
  return make(FocRule::AxAtm, Phase::R, std::move(s), {}, 0);
}

FocDeriv FocDeriv::ir() {
  Sequent s{std::nullopt, {}, Formula::unit()};
  return make(FocRule::IR, Phase::R, std::move(s), {}, 0);
}

FocDeriv FocDeriv::otr(FocDeriv left, FocDeriv right) {
  const Sequent& l = left.conclusion();
  const Sequent& r = right.conclusion();
  if (left.phase() != Phase::R) schema("otR", "left premise must be R-phase");
  if (right.phase() != Phase::L) schema("otR", "right premise must be L-phase");
  if (r.stoup) schema("otR", "right premise stoup must be empty");
  const std::size_t split = l.context.size();
  Context ctx = l.context;
  ctx.insert(ctx.end(), r.context.begin(), r.context.end());
  Sequent s{l.stoup, std::move(ctx), Formula::tensor(l.succedent, r.succedent)};
  return make(FocRule::OtR, Phase::R, std::move(s), {std::move(left), std::move(right)}, split);
}

FocDeriv FocDeriv::otr(FocDeriv left, FocDeriv right, std::size_t split) {
  if (left.conclusion().context.size() != split)
    schema("otR", "split does not match the left premise context");
  return otr(std::move(left), std::move(right));
}

bool operator==(const FocDeriv& a, const FocDeriv& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.rule() != b.rule() || a.size() != b.size() ||
      a.split() != b.split())
    return false;
  if (a.rule() == FocRule::AxAtm) return a.conclusion().succedent == b.conclusion().succedent;
  for (std::size_t i = 0; i < a.premises().size(); ++i)
    if (!(a.premise(i) == b.premise(i))) return false;
  return true;
}

namespace {

struct Judgement {
  Sequent seq;
  Phase phase;
};

std::optional<Judgement> recheck(const FocDeriv& d) {
  std::vector<Judgement> ps;
  for (const auto& p : d.premises()) {
    auto j = recheck(p);
    if (!j) return std::nullopt;
    ps.push_back(std::move(*j));
  }
  std::optional<Judgement> out;
  switch (d.rule()) {
    case FocRule::Uf:
      if (ps[0].phase == Phase::L && ps[0].seq.stoup) {
        Context ctx{*ps[0].seq.stoup};
        ctx.insert(ctx.end(), ps[0].seq.context.begin(), ps[0].seq.context.end());
        out = Judgement{{std::nullopt, std::move(ctx), ps[0].seq.succedent}, Phase::L};
      }
      break;
    case FocRule::Switch:
      if (ps[0].phase == Phase::R) out = Judgement{ps[0].seq, Phase::L};
      break;
    case FocRule::IL:
      if (ps[0].phase == Phase::L && !ps[0].seq.stoup)
        out = Judgement{{Formula::unit(), ps[0].seq.context, ps[0].seq.succedent}, Phase::L};
      break;
    case FocRule::OtL:
      if (ps[0].phase == Phase::L && ps[0].seq.stoup && !ps[0].seq.context.empty())
        out = Judgement{{Formula::tensor(*ps[0].seq.stoup, ps[0].seq.context.front()),
                         tail(ps[0].seq.context, 1), ps[0].seq.succedent},
                        Phase::L};
      break;
    case FocRule::AxAtm: {
      const Formula& x = d.conclusion().succedent;
      if (x.is_atom()) out = Judgement{{x, {}, x}, Phase::R};
      break;
    }
    case FocRule::IR: out = Judgement{{std::nullopt, {}, Formula::unit()}, Phase::R}; break;
    case FocRule::OtR:
      if (ps[0].phase == Phase::R && ps[1].phase == Phase::L && !ps[1].seq.stoup &&
          d.split() == ps[0].seq.context.size()) {
        Context ctx = ps[0].seq.context;
        ctx.insert(ctx.end(), ps[1].seq.context.begin(), ps[1].seq.context.end());
        out = Judgement{{ps[0].seq.stoup, std::move(ctx),
                         Formula::tensor(ps[0].seq.succedent, ps[1].seq.succedent)},
                        Phase::R};
      }
      break;
  }
  if (!out) return std::nullopt;
  if (out->phase == Phase::R && !irreducible(out->seq.stoup)) return std::nullopt;
  if (out->phase != d.phase() || !(out->seq == d.conclusion())) return std::nullopt;
  return out;
}

}  // namespace

bool validate(const FocDeriv& d) { return recheck(d).has_value(); }

// ---------------------------------------------------------------------------
// Embedding into the unfocused calculus

namespace {

SeqDeriv embed(const FocDeriv& d) {
  switch (d.rule()) {
    case FocRule::Uf: return SeqDeriv::uf(embed(d.premise()));
    case FocRule::Switch: return embed(d.premise());
    case FocRule::IL: return SeqDeriv::il(embed(d.premise()));
    case FocRule::OtL: return SeqDeriv::otl(embed(d.premise()));
    case FocRule::AxAtm: return SeqDeriv::ax(d.conclusion().succedent);
    case FocRule::IR: return SeqDeriv::ir();
    case FocRule::OtR: return SeqDeriv::otr(embed(d.premise(0)), embed(d.premise(1)));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SeqDeriv emb_l(const FocDeriv& d) {
  if (d.phase() != Phase::L) throw RuleError("emb_l: derivation is not L-phase");
  return embed(d);
}

SeqDeriv emb_r(const FocDeriv& d) {
  if (d.phase() != Phase::R) throw RuleError("emb_r: derivation is not R-phase");
  return embed(d);
}

// ---------------------------------------------------------------------------
// Admissible rules

FocDeriv foc_ir() { return FocDeriv::sw(FocDeriv::ir()); }

FocDeriv foc_otr(const FocDeriv& f, const FocDeriv& g) {
  if (f.phase() != Phase::L || g.phase() != Phase::L)
    throw RuleError("foc_otr: premises must be L-phase");
  if (g.conclusion().stoup) throw RuleError("foc_otr: right premise stoup must be empty");
  switch (f.rule()) {
    case FocRule::Uf: return FocDeriv::uf(foc_otr(f.premise(), g));
    case FocRule::IL: return FocDeriv::il(foc_otr(f.premise(), g));
    case FocRule::OtL: return FocDeriv::otl(foc_otr(f.premise(), g));
    case FocRule::Switch: return FocDeriv::sw(FocDeriv::otr(f.premise(), g));
    default: break;
  }
  throw std::logic_error("foc_otr: L-phase derivation with an R-phase rule");
}

FocDeriv foc_ax(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Atom: return FocDeriv::sw(FocDeriv::ax_atm(a));
    case FormulaKind::Unit: return FocDeriv::il(foc_ir());
    case FormulaKind::Tensor:
      return FocDeriv::otl(foc_otr(foc_ax(a.left()), FocDeriv::uf(foc_ax(a.right()))));
  }
  throw std::logic_error("unreachable");
}

namespace {

FocDeriv scut_l(const FocDeriv& f, const FocDeriv& g);
FocDeriv scut_r(const FocDeriv& f, const FocDeriv& g);
FocDeriv ccut_l(const FocDeriv& f, const FocDeriv& g, std::size_t pos);
FocDeriv ccut_r(const FocDeriv& f, const FocDeriv& g, std::size_t pos);

FocDeriv scut_l(const FocDeriv& f, const FocDeriv& g) {
  switch (f.rule()) {
    case FocRule::Uf: return FocDeriv::uf(scut_l(f.premise(), g));
    case FocRule::IL: return FocDeriv::il(scut_l(f.premise(), g));
    case FocRule::OtL: return FocDeriv::otl(scut_l(f.premise(), g));
    case FocRule::Switch: return scut_r(f.premise(), g);
    default: break;
  }
  throw std::logic_error("foc_scut: malformed L-phase derivation");
}

FocDeriv scut_r(const FocDeriv& f, const FocDeriv& g) {
  switch (f.rule()) {
    case FocRule::AxAtm: return g;
    case FocRule::IR:
      // An L-phase derivation with stoup I must end in IL.
      if (g.rule() == FocRule::IL) return g.premise();
      break;
    case FocRule::OtR:
      // ... and one with a tensor stoup must end in otL.
      if (g.rule() == FocRule::OtL)
        return ccut_l(f.premise(1), scut_r(f.premise(0), g.premise()), f.split());
      break;
    default: break;
  }
  throw std::logic_error("foc_scut_r: impossible premise combination");
}

FocDeriv ccut_l(const FocDeriv& f, const FocDeriv& g, std::size_t pos) {
  switch (g.rule()) {
    case FocRule::Uf:
      if (pos == 0) return scut_l(f, g.premise());
      return FocDeriv::uf(ccut_l(f, g.premise(), pos - 1));
    case FocRule::IL: return FocDeriv::il(ccut_l(f, g.premise(), pos));
    case FocRule::OtL: return FocDeriv::otl(ccut_l(f, g.premise(), pos + 1));
    case FocRule::Switch: return FocDeriv::sw(ccut_r(f, g.premise(), pos));
    default: break;
  }
  throw std::logic_error("foc_ccut: malformed L-phase derivation");
}

FocDeriv ccut_r(const FocDeriv& f, const FocDeriv& g, std::size_t pos) {
  if (g.rule() == FocRule::OtR) {
    if (pos < g.split()) return FocDeriv::otr(ccut_r(f, g.premise(0), pos), g.premise(1));
    return FocDeriv::otr(g.premise(0), ccut_l(f, g.premise(1), pos - g.split()));
  }
  throw std::logic_error("foc_ccut_r: cut formula position in an empty context");
}

void check_scut(const FocDeriv& f, const FocDeriv& g, Phase fphase) {
  if (f.phase() != fphase || g.phase() != Phase::L)
    throw RuleError("foc_scut: premise phase mismatch");
  const auto& st = g.conclusion().stoup;
  if (!st || !(*st == f.conclusion().succedent))
    throw TypeError("foc_scut: succedent of the first premise is not the stoup of the second",
                    "scut");
}

void check_ccut(const FocDeriv& f, const FocDeriv& g, std::size_t pos, Phase gphase) {
  if (f.phase() != Phase::L || g.phase() != gphase)
    throw RuleError("foc_ccut: premise phase mismatch");
  if (f.conclusion().stoup) throw TypeError("foc_ccut: first premise stoup must be empty", "ccut");
  const auto& ctx = g.conclusion().context;
  if (pos >= ctx.size() || !(ctx[pos] == f.conclusion().succedent))
    throw TypeError("foc_ccut: cut formula not found at the given position", "ccut");
}

}  // namespace

FocDeriv foc_scut(const FocDeriv& f, const FocDeriv& g) {
  check_scut(f, g, Phase::L);
  return scut_l(f, g);
}

FocDeriv foc_scut_r(const FocDeriv& f, const FocDeriv& g) {
  check_scut(f, g, Phase::R);
  return scut_r(f, g);
}

FocDeriv foc_ccut(const FocDeriv& f, const FocDeriv& g, std::size_t position) {
  check_ccut(f, g, position, Phase::L);
  return ccut_l(f, g, position);
}

FocDeriv foc_ccut_r(const FocDeriv& f, const FocDeriv& g, std::size_t position) {
  check_ccut(f, g, position, Phase::R);
  return ccut_r(f, g, position);
}

FocDeriv focus(const SeqDeriv& d) {
  switch (d.rule()) {
    case SeqRule::Ax: return foc_ax(d.conclusion().succedent);
    case SeqRule::Uf: return FocDeriv::uf(focus(d.premise()));
    case SeqRule::IL: return FocDeriv::il(focus(d.premise()));
    case SeqRule::IR: return foc_ir();
    case SeqRule::OtL: return FocDeriv::otl(focus(d.premise()));
    case SeqRule::OtR: return foc_otr(focus(d.premise(0)), focus(d.premise(1)));
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Proof search

namespace {

class Search {
 public:
  const std::vector<FocDeriv>& left(const Sequent& s) {
    if (auto it = left_.find(s); it != left_.end()) return it->second;
    std::vector<FocDeriv> out;
    if (!s.stoup) {
      if (!s.context.empty())
        for (const auto& d : left({s.context.front(), tail(s.context, 1), s.succedent}))
          out.push_back(FocDeriv::uf(d));
      for (const auto& d : right(s)) out.push_back(FocDeriv::sw(d));
    } else if (s.stoup->is_atom()) {
      for (const auto& d : right(s)) out.push_back(FocDeriv::sw(d));
    } else if (s.stoup->is_unit()) {
      for (const auto& d : left({std::nullopt, s.context, s.succedent}))
        out.push_back(FocDeriv::il(d));
    } else {
      Context ctx{s.stoup->right()};
      ctx.insert(ctx.end(), s.context.begin(), s.context.end());
      for (const auto& d : left({s.stoup->left(), std::move(ctx), s.succedent}))
        out.push_back(FocDeriv::otl(d));
    }
    return left_.emplace(s, std::move(out)).first->second;
  }

  const std::vector<FocDeriv>& right(const Sequent& s) {
    if (auto it = right_.find(s); it != right_.end()) return it->second;
    std::vector<FocDeriv> out;
    const Formula& c = s.succedent;
    if (s.stoup && s.context.empty() && *s.stoup == c) out.push_back(FocDeriv::ax_atm(c));
    if (!s.stoup && s.context.empty() && c.is_unit()) out.push_back(FocDeriv::ir());
    if (c.is_tensor()) {
      for (std::size_t k = 0; k <= s.context.size(); ++k) {
        Context g(s.context.begin(), s.context.begin() + static_cast<std::ptrdiff_t>(k));
        const auto& ls = right({s.stoup, std::move(g), c.left()});
        if (ls.empty()) continue;
        const auto& rs = left({std::nullopt, tail(s.context, k), c.right()});
        for (const auto& l : ls)
          for (const auto& r : rs) out.push_back(FocDeriv::otr(l, r));
      }
    }
    return right_.emplace(s, std::move(out)).first->second;
  }

 private:
  std::unordered_map<Sequent, std::vector<FocDeriv>, SequentHash> left_;
  std::unordered_map<Sequent, std::vector<FocDeriv>, SequentHash> right_;
};

class Decide {
 public:
  bool left(const Sequent& s) {
    if (auto it = left_.find(s); it != left_.end()) return it->second;
    bool ok = false;
    if (!s.stoup) {
      ok = (!s.context.empty() && left({s.context.front(), tail(s.context, 1), s.succedent})) ||
           right(s);
    } else if (s.stoup->is_atom()) {
      ok = right(s);
    } else if (s.stoup->is_unit()) {
      ok = left({std::nullopt, s.context, s.succedent});
    } else {
      Context ctx{s.stoup->right()};
      ctx.insert(ctx.end(), s.context.begin(), s.context.end());
      ok = left({s.stoup->left(), std::move(ctx), s.succedent});
    }
    left_.emplace(s, ok);
    return ok;
  }

  bool right(const Sequent& s) {
    if (auto it = right_.find(s); it != right_.end()) return it->second;
    const Formula& c = s.succedent;
    bool ok = (s.stoup && s.context.empty() && *s.stoup == c) ||
              (!s.stoup && s.context.empty() && c.is_unit());
    if (!ok && c.is_tensor()) {
      for (std::size_t k = 0; k <= s.context.size() && !ok; ++k) {
        Context g(s.context.begin(), s.context.begin() + static_cast<std::ptrdiff_t>(k));
        ok = right({s.stoup, std::move(g), c.left()}) &&
             left({std::nullopt, tail(s.context, k), c.right()});
      }
    }
    right_.emplace(s, ok);
    return ok;
  }

 private:
  std::unordered_map<Sequent, bool, SequentHash> left_;
  std::unordered_map<Sequent, bool, SequentHash> right_;
};

}  // namespace

std::vector<FocDeriv> focderivs(const Sequent& seq) { return Search().left(seq); }

std::vector<FocDeriv> focderivs(const Stoup& s, const Context& g, const Formula& c) {
  return focderivs(Sequent{s, g, c});
}

std::vector<FocDeriv> focderivs_r(const Sequent& seq) {
  if (!irreducible(seq.stoup)) return {};
  return Search().right(seq);
}

bool derivable(const Sequent& seq) { return Decide().left(seq); }

bool derivable(const Stoup& s, const Context& g, const Formula& c) {
  return derivable(Sequent{s, g, c});
}

}  // namespace skewcoh
