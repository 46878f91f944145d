#include "skewcoh/seqcalc.hpp"

#include <algorithm>
#include <stdexcept>

#include "parse_detail.hpp"
#include "skewcoh/errors.hpp"
#include "skewcoh/focused.hpp"

namespace skewcoh {

using detail::hash_combine;

namespace {

Context concat(const Context& a, const Context& b) {
  Context out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Context slice(const Context& c, std::size_t from, std::size_t to) {
  return Context(c.begin() + static_cast<std::ptrdiff_t>(from),
                 c.begin() + static_cast<std::ptrdiff_t>(to));
}

Context tail(const Context& c, std::size_t from) { return slice(c, from, c.size()); }

[[noreturn]] void schema(const char* rule, const std::string& why) {
  throw RuleError(std::string(rule) + ": " + why);
}

}  // namespace

std::string_view rule_name(SeqRule r) {
  switch (r) {
    case SeqRule::Ax: return "ax";
    case SeqRule::Uf: return "uf";
    case SeqRule::IL: return "IL";
    case SeqRule::IR: return "IR";
    case SeqRule::OtL: return "otL";
    case SeqRule::OtR: return "otR";
  }
  return "?";
}

std::string_view rule_name(GenRule r) {
  switch (r) {
    case GenRule::Ax: return "ax";
    case GenRule::Uf: return "uf";
    case GenRule::IL: return "IL";
    case GenRule::IR: return "IR";
    case GenRule::OtL: return "otL";
    case GenRule::OtR: return "otR";
    case GenRule::Scut: return "scut";
    case GenRule::Ccut: return "ccut";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SeqDeriv

SeqDeriv SeqDeriv::make(SeqRule r, Sequent s, std::vector<SeqDeriv> ps, std::size_t split) {
  std::size_t size = 1;
  std::size_t h = hash_combine(static_cast<std::size_t>(r) + 17, split);
  if (r == SeqRule::Ax) h = hash_combine(h, s.succedent.hash());
  for (const auto& p : ps) {
    size += p.size();
    h = hash_combine(h, p.hash());
  }
  return SeqDeriv(
      std::make_shared<const Node>(Node{r, std::move(s), std::move(ps), split, size, h}));
}

SeqDeriv SeqDeriv::ax(Formula a) {
  Sequent s{a, {}, a};
  return make(SeqRule::Ax, std::move(s), {}, 0);
}

SeqDeriv SeqDeriv::uf(SeqDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (!p.stoup) schema("uf", "premise stoup must be nonempty");
  Context ctx;
  ctx.reserve(p.context.size() + 1);
  ctx.push_back(*p.stoup);
  ctx.insert(ctx.end(), p.context.begin(), p.context.end());
  Sequent s{std::nullopt, std::move(ctx), p.succedent};
  return make(SeqRule::Uf, std::move(s), {std::move(premise)}, 0);
}

SeqDeriv SeqDeriv::il(SeqDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (p.stoup) schema("IL", "premise stoup must be empty");
  Sequent s{Formula::unit(), p.context, p.succedent};
  return make(SeqRule::IL, std::move(s), {std::move(premise)}, 0);
}

SeqDeriv SeqDeriv::ir() {
  Sequent s{std::nullopt, {}, Formula::unit()};
  return make(SeqRule::IR, std::move(s), {}, 0);
}

SeqDeriv SeqDeriv::otl(SeqDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (!p.stoup) schema("otL", "premise stoup must be nonempty");
  if (p.context.empty()) schema("otL", "premise context must be nonempty");
  Sequent s{Formula::tensor(*p.stoup, p.context.front()), tail(p.context, 1), p.succedent};
  return make(SeqRule::OtL, std::move(s), {std::move(premise)}, 0);
}

SeqDeriv SeqDeriv::otr(SeqDeriv left, SeqDeriv right) {
  const Sequent& l = left.conclusion();
  const Sequent& r = right.conclusion();
  if (r.stoup) schema("otR", "right premise stoup must be empty");
  const std::size_t split = l.context.size();
  Sequent s{l.stoup, concat(l.context, r.context),
            Formula::tensor(l.succedent, r.succedent)};
  return make(SeqRule::OtR, std::move(s), {std::move(left), std::move(right)}, split);
}

SeqDeriv SeqDeriv::otr(SeqDeriv left, SeqDeriv right, std::size_t split) {
  if (left.conclusion().context.size() != split)
    schema("otR", "split does not match the left premise context");
  return otr(std::move(left), std::move(right));
}

bool operator==(const SeqDeriv& a, const SeqDeriv& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.rule() != b.rule() || a.size() != b.size() ||
      a.split() != b.split())
    return false;
  if (a.rule() == SeqRule::Ax) return a.conclusion().succedent == b.conclusion().succedent;
  for (std::size_t i = 0; i < a.premises().size(); ++i)
    if (!(a.premise(i) == b.premise(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// GeneralSeqDeriv

GeneralSeqDeriv GeneralSeqDeriv::make(GenRule r, Sequent s, std::vector<GeneralSeqDeriv> ps,
                                      std::size_t attr) {
  std::size_t size = 1;
  std::size_t h = hash_combine(static_cast<std::size_t>(r) + 31, attr);
  if (r == GenRule::Ax) h = hash_combine(h, s.succedent.hash());
  for (const auto& p : ps) {
    size += p.size();
    h = hash_combine(h, p.node_->hash);
  }
  return GeneralSeqDeriv(
      std::make_shared<const Node>(Node{r, std::move(s), std::move(ps), attr, size, h}));
}

GeneralSeqDeriv GeneralSeqDeriv::ax(Formula a) {
  Sequent s{a, {}, a};
  return make(GenRule::Ax, std::move(s), {}, 0);
}

GeneralSeqDeriv GeneralSeqDeriv::uf(GeneralSeqDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (!p.stoup) schema("uf", "premise stoup must be nonempty");
  Context ctx{*p.stoup};
  ctx.insert(ctx.end(), p.context.begin(), p.context.end());
  Sequent s{std::nullopt, std::move(ctx), p.succedent};
  return make(GenRule::Uf, std::move(s), {std::move(premise)}, 0);
}

GeneralSeqDeriv GeneralSeqDeriv::il(GeneralSeqDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (p.stoup) schema("IL", "premise stoup must be empty");
  Sequent s{Formula::unit(), p.context, p.succedent};
  return make(GenRule::IL, std::move(s), {std::move(premise)}, 0);
}

GeneralSeqDeriv GeneralSeqDeriv::ir() {
  Sequent s{std::nullopt, {}, Formula::unit()};
  return make(GenRule::IR, std::move(s), {}, 0);
}

GeneralSeqDeriv GeneralSeqDeriv::otl(GeneralSeqDeriv premise) {
  const Sequent& p = premise.conclusion();
  if (!p.stoup) schema("otL", "premise stoup must be nonempty");
  if (p.context.empty()) schema("otL", "premise context must be nonempty");
  Sequent s{Formula::tensor(*p.stoup, p.context.front()), tail(p.context, 1), p.succedent};
  return make(GenRule::OtL, std::move(s), {std::move(premise)}, 0);
}

GeneralSeqDeriv GeneralSeqDeriv::otr(GeneralSeqDeriv left, GeneralSeqDeriv right) {
  const Sequent& l = left.conclusion();
  const Sequent& r = right.conclusion();
  if (r.stoup) schema("otR", "right premise stoup must be empty");
  const std::size_t split = l.context.size();
  Sequent s{l.stoup, concat(l.context, r.context),
            Formula::tensor(l.succedent, r.succedent)};
  return make(GenRule::OtR, std::move(s), {std::move(left), std::move(right)}, split);
}

GeneralSeqDeriv GeneralSeqDeriv::scut(GeneralSeqDeriv f, GeneralSeqDeriv g) {
  const Sequent& l = f.conclusion();
  const Sequent& r = g.conclusion();
  if (!r.stoup || !(*r.stoup == l.succedent))
    throw TypeError("scut: succedent of the first premise is not the stoup of the second",
                    "scut");
  Sequent s{l.stoup, concat(l.context, r.context), r.succedent};
  return make(GenRule::Scut, std::move(s), {std::move(f), std::move(g)}, 0);
}

GeneralSeqDeriv GeneralSeqDeriv::ccut(GeneralSeqDeriv f, GeneralSeqDeriv g,
                                      std::size_t position) {
  const Sequent& l = f.conclusion();
  const Sequent& r = g.conclusion();
  if (l.stoup) throw TypeError("ccut: first premise must have an empty stoup", "ccut");
  if (position >= r.context.size() || !(r.context[position] == l.succedent))
    throw TypeError("ccut: cut formula not found at the given position", "ccut");
  Context ctx = slice(r.context, 0, position);
  ctx.insert(ctx.end(), l.context.begin(), l.context.end());
  ctx.insert(ctx.end(), r.context.begin() + static_cast<std::ptrdiff_t>(position) + 1,
             r.context.end());
  Sequent s{r.stoup, std::move(ctx), r.succedent};
  return make(GenRule::Ccut, std::move(s), {std::move(f), std::move(g)}, position);
}

GeneralSeqDeriv GeneralSeqDeriv::from(const SeqDeriv& d) {
  switch (d.rule()) {
    case SeqRule::Ax: return ax(d.conclusion().succedent);
    case SeqRule::Uf: return uf(from(d.premise()));
    case SeqRule::IL: return il(from(d.premise()));
    case SeqRule::IR: return ir();
    case SeqRule::OtL: return otl(from(d.premise()));
    case SeqRule::OtR: return otr(from(d.premise(0)), from(d.premise(1)));
  }
  throw std::logic_error("unreachable");
}

bool operator==(const GeneralSeqDeriv& a, const GeneralSeqDeriv& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.rule() != b.rule() || a.size() != b.size() ||
      a.node_->attr != b.node_->attr)
    return false;
  if (a.rule() == GenRule::Ax) return a.conclusion().succedent == b.conclusion().succedent;
  for (std::size_t i = 0; i < a.premises().size(); ++i)
    if (!(a.premise(i) == b.premise(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Cut admissibility. Lexicographic induction on the cut formula and the pair
// of derivations: left rules and uf in the first premise commute first; a
// right rule meeting a right rule commutes into the second premise; a right
// rule meeting the matching left rule is the principal case.

namespace {

SeqDeriv ccut_impl(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos);

SeqDeriv scut_impl(const SeqDeriv& f, const SeqDeriv& g) {
  switch (f.rule()) {
    case SeqRule::Ax: return g;
    case SeqRule::Uf: return SeqDeriv::uf(scut_impl(f.premise(), g));
    case SeqRule::IL: return SeqDeriv::il(scut_impl(f.premise(), g));
    case SeqRule::OtL: return SeqDeriv::otl(scut_impl(f.premise(), g));
    case SeqRule::IR:
      switch (g.rule()) {
        case SeqRule::Ax: return f;
        case SeqRule::IL: return g.premise();
        case SeqRule::OtR: return SeqDeriv::otr(scut_impl(f, g.premise(0)), g.premise(1));
        default: break;
      }
      break;
    case SeqRule::OtR:
      switch (g.rule()) {
        case SeqRule::Ax: return f;
        case SeqRule::OtL:
          return ccut_impl(f.premise(1), scut_impl(f.premise(0), g.premise()), f.split());
        case SeqRule::OtR: return SeqDeriv::otr(scut_impl(f, g.premise(0)), g.premise(1));
        default: break;
      }
      break;
  }
  throw std::logic_error("scut: impossible premise combination");
}

SeqDeriv ccut_impl(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos) {
  switch (g.rule()) {
    case SeqRule::Uf:
      if (pos == 0) return scut_impl(f, g.premise());
      return SeqDeriv::uf(ccut_impl(f, g.premise(), pos - 1));
    case SeqRule::IL: return SeqDeriv::il(ccut_impl(f, g.premise(), pos));
    case SeqRule::OtL: return SeqDeriv::otl(ccut_impl(f, g.premise(), pos + 1));
    case SeqRule::OtR:
      if (pos < g.split())
        return SeqDeriv::otr(ccut_impl(f, g.premise(0), pos), g.premise(1));
      return SeqDeriv::otr(g.premise(0), ccut_impl(f, g.premise(1), pos - g.split()));
    case SeqRule::Ax:
    case SeqRule::IR: break;
  }
  throw std::logic_error("ccut: cut formula position in an empty context");
}

}  // namespace

SeqDeriv scut(const SeqDeriv& f, const SeqDeriv& g) {
  const auto& gs = g.conclusion().stoup;
  if (!gs || !(*gs == f.conclusion().succedent))
    throw TypeError("scut: succedent of the first premise is not the stoup of the second",
                    "scut");
  return scut_impl(f, g);
}

SeqDeriv ccut(const SeqDeriv& f, const SeqDeriv& g, std::size_t position) {
  if (f.conclusion().stoup)
    throw TypeError("ccut: first premise must have an empty stoup", "ccut");
  const auto& ctx = g.conclusion().context;
  if (position >= ctx.size() || !(ctx[position] == f.conclusion().succedent))
    throw TypeError("ccut: cut formula not found at the given position", "ccut");
  return ccut_impl(f, g, position);
}

SeqDeriv eliminate_cuts(const GeneralSeqDeriv& d) {
  switch (d.rule()) {
    case GenRule::Ax: return SeqDeriv::ax(d.conclusion().succedent);
    case GenRule::Uf: return SeqDeriv::uf(eliminate_cuts(d.premise()));
    case GenRule::IL: return SeqDeriv::il(eliminate_cuts(d.premise()));
    case GenRule::IR: return SeqDeriv::ir();
    case GenRule::OtL: return SeqDeriv::otl(eliminate_cuts(d.premise()));
    case GenRule::OtR:
      return SeqDeriv::otr(eliminate_cuts(d.premise(0)), eliminate_cuts(d.premise(1)));
    case GenRule::Scut:
      return scut_impl(eliminate_cuts(d.premise(0)), eliminate_cuts(d.premise(1)));
    case GenRule::Ccut:
      return ccut_impl(eliminate_cuts(d.premise(0)), eliminate_cuts(d.premise(1)),
                       d.position());
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Translations

namespace {

SeqDeriv cmplt_impl(const CatTerm& t) {
  using D = SeqDeriv;
  switch (t.kind()) {
    case TermKind::Id: return D::ax(t.objects()[0]);
    case TermKind::Comp: return scut_impl(cmplt_impl(t.rhs()), cmplt_impl(t.lhs()));
    case TermKind::Tensor:
      return D::otl(D::otr(cmplt_impl(t.lhs()), D::uf(cmplt_impl(t.rhs()))));
    case TermKind::Lam: return D::otl(D::il(D::uf(D::ax(t.objects()[0]))));
    case TermKind::Rho: return D::otr(D::ax(t.objects()[0]), D::ir());
    case TermKind::Al: {
      const auto& o = t.objects();
      return D::otl(D::otl(D::otr(D::ax(o[0]), D::uf(D::otr(D::ax(o[1]), D::uf(D::ax(o[2])))))));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SeqDeriv cmplt(const CatTerm& t) {
  infer_type(t);
  return cmplt_impl(t);
}

CatTerm act_context(const CatTerm& f, const Context& g) {
  CatTerm acc = f;
  for (const auto& c : g) acc = CatTerm::tensor(std::move(acc), CatTerm::id(c));
  return acc;
}

CatTerm psi(const Formula& a, const Formula& b, const Context& g) {
  if (g.empty()) return CatTerm::id(Formula::tensor(a, b));
  const Context rest = tail(g, 1);
  return CatTerm::comp(psi(a, Formula::tensor(b, g.front()), rest),
                       act_context(CatTerm::al(a, b, g.front()), rest));
}

namespace {

CatTerm varphi_formula(const Formula& a, const Context& g, const Context& d) {
  Formula acc = a;
  for (const auto& c : g) acc = Formula::tensor(std::move(acc), c);
  return CatTerm::comp(psi(acc, Formula::unit(), d), act_context(CatTerm::rho(acc), d));
}

GenRule as_gen(SeqRule r) { return static_cast<GenRule>(static_cast<std::uint8_t>(r)); }
GenRule as_gen(GenRule r) { return r; }

std::size_t position_of(const SeqDeriv&) { return 0; }
std::size_t position_of(const GeneralSeqDeriv& d) { return d.position(); }

template <class D>
CatTerm sound_impl(const D& d) {
  const Sequent& s = d.conclusion();
  switch (as_gen(d.rule())) {
    case GenRule::Ax: return CatTerm::id(s.succedent);
    case GenRule::Uf:
      return CatTerm::comp(sound_impl(d.premise()),
                           act_context(CatTerm::lam(s.context.front()), tail(s.context, 1)));
    case GenRule::IL:
    case GenRule::OtL: return sound_impl(d.premise());
    case GenRule::IR: return CatTerm::id(Formula::unit());
    case GenRule::OtR: {
      const std::size_t k = d.premise(0).conclusion().context.size();
      return CatTerm::comp(CatTerm::tensor(sound_impl(d.premise(0)), sound_impl(d.premise(1))),
                           varphi(s.stoup, slice(s.context, 0, k), tail(s.context, k)));
    }
    case GenRule::Scut: {
      const Sequent& gs = d.premise(1).conclusion();
      return CatTerm::comp(sound_impl(d.premise(1)),
                           act_context(sound_impl(d.premise(0)), gs.context));
    }
    case GenRule::Ccut: {
      const Sequent& fs = d.premise(0).conclusion();
      const Sequent& gs = d.premise(1).conclusion();
      const std::size_t pos = position_of(d);
      const Context d0 = slice(gs.context, 0, pos);
      const Context d1 = tail(gs.context, pos + 1);
      CatTerm h = CatTerm::comp(
          CatTerm::tensor(CatTerm::id(interp_antecedent(gs.stoup, d0)), sound_impl(d.premise(0))),
          varphi(gs.stoup, d0, fs.context));
      return CatTerm::comp(sound_impl(d.premise(1)), act_context(h, d1));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

CatTerm varphi(const Stoup& s, const Context& g, const Context& d) {
  return varphi_formula(interp_stoup(s), g, d);
}

CatTerm sound(const SeqDeriv& d) { return sound_impl(d); }
CatTerm sound(const GeneralSeqDeriv& d) { return sound_impl(d); }

// ---------------------------------------------------------------------------
// Invertibility of the left rules

SeqDeriv il_inv(const SeqDeriv& d) {
  const auto& st = d.conclusion().stoup;
  if (!st || !st->is_unit()) throw RuleError("il_inv: stoup must be I");
  switch (d.rule()) {
    case SeqRule::Ax: return SeqDeriv::ir();
    case SeqRule::IL: return d.premise();
    case SeqRule::OtR: return SeqDeriv::otr(il_inv(d.premise(0)), d.premise(1));
    default: break;
  }
  throw std::logic_error("il_inv: impossible rule");
}

SeqDeriv otl_inv(const SeqDeriv& d) {
  const auto& st = d.conclusion().stoup;
  if (!st || !st->is_tensor()) throw RuleError("otl_inv: stoup must be a tensor");
  switch (d.rule()) {
    case SeqRule::Ax:
      return SeqDeriv::otr(SeqDeriv::ax(st->left()), SeqDeriv::uf(SeqDeriv::ax(st->right())));
    case SeqRule::OtL: return d.premise();
    case SeqRule::OtR: return SeqDeriv::otr(otl_inv(d.premise(0)), d.premise(1));
    default: break;
  }
  throw std::logic_error("otl_inv: impossible rule");
}

SeqDeriv otl_inv_star(const SeqDeriv& d, const Stoup& s, const Context& g) {
  const auto& st = d.conclusion().stoup;
  if (!st || !(*st == interp_antecedent(s, g)))
    throw RuleError("otl_inv_star: stoup is not the interpretation of the antecedent");
  SeqDeriv acc = d;
  for (std::size_t i = g.size(); i-- > 0;) acc = otl_inv(acc);
  if (!s) acc = il_inv(acc);
  return acc;
}

SeqDeriv otl_star(const SeqDeriv& d, const Stoup& s, const Context& g) {
  const Sequent& c = d.conclusion();
  if (c.stoup != s || c.context.size() < g.size() ||
      !std::equal(g.begin(), g.end(), c.context.begin()))
    throw RuleError("otl_star: derivation does not start with the given antecedent");
  SeqDeriv acc = s ? d : SeqDeriv::il(d);
  for (std::size_t i = 0; i < g.size(); ++i) acc = SeqDeriv::otl(acc);
  return acc;
}

SeqDeriv strcmplt(const CatTerm& t, const Stoup& s, const Context& g) {
  const MapType ty = infer_type(t);
  if (!(ty.dom == interp_antecedent(s, g)))
    throw TypeError("strcmplt: domain is not the interpretation of the antecedent", "root");
  return otl_inv_star(cmplt(t), s, g);
}

// ---------------------------------------------------------------------------
// The congruence on cut-free derivations

namespace {

SeqDeriv rebuild(const SeqDeriv& d, std::vector<SeqDeriv> ps) {
  switch (d.rule()) {
    case SeqRule::Ax:
    case SeqRule::IR: return d;
    case SeqRule::Uf: return SeqDeriv::uf(std::move(ps[0]));
    case SeqRule::IL: return SeqDeriv::il(std::move(ps[0]));
    case SeqRule::OtL: return SeqDeriv::otl(std::move(ps[0]));
    case SeqRule::OtR: return SeqDeriv::otr(std::move(ps[0]), std::move(ps[1]));
  }
  throw std::logic_error("unreachable");
}

std::optional<SeqDeriv> rewrite_root(const SeqDeriv& d) {
  if (d.rule() == SeqRule::Ax) {
    const Formula& a = d.conclusion().succedent;
    if (a.is_unit()) return SeqDeriv::il(SeqDeriv::ir());
    if (a.is_tensor())
      return SeqDeriv::otl(
          SeqDeriv::otr(SeqDeriv::ax(a.left()), SeqDeriv::uf(SeqDeriv::ax(a.right()))));
    return std::nullopt;
  }
  if (d.rule() == SeqRule::OtR) {
    const SeqDeriv& l = d.premise(0);
    const SeqDeriv& r = d.premise(1);
    switch (l.rule()) {
      case SeqRule::Uf: return SeqDeriv::uf(SeqDeriv::otr(l.premise(), r));
      case SeqRule::IL: return SeqDeriv::il(SeqDeriv::otr(l.premise(), r));
      case SeqRule::OtL: return SeqDeriv::otl(SeqDeriv::otr(l.premise(), r));
      default: break;
    }
  }
  return std::nullopt;
}

void push_unique(std::vector<SeqDeriv>& out, SeqDeriv d) {
  if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
}

class Normalizer {
 public:
  explicit Normalizer(std::size_t budget) : budget_(budget) {}

  SeqDeriv full(const SeqDeriv& d) {
    if (d.premises().empty()) return root(d);
    std::vector<SeqDeriv> ps;
    bool changed = false;
    for (const auto& p : d.premises()) {
      ps.push_back(full(p));
      changed = changed || !(ps.back() == p);
    }
    return root(changed ? rebuild(d, std::move(ps)) : d);
  }

 private:
  void tick() {
    if (budget_-- == 0) throw std::logic_error("circeq_normalize: rewrite budget exhausted");
  }

  // Premises are already normal.
  SeqDeriv root(const SeqDeriv& d) {
    if (d.rule() == SeqRule::Ax) {
      const Formula& a = d.conclusion().succedent;
      if (a.is_unit()) {
        tick();
        return SeqDeriv::il(SeqDeriv::ir());
      }
      if (a.is_tensor()) {
        tick();
        SeqDeriv l = root(SeqDeriv::ax(a.left()));
        SeqDeriv r = root(SeqDeriv::ax(a.right()));
        return SeqDeriv::otl(root(SeqDeriv::otr(std::move(l), SeqDeriv::uf(std::move(r)))));
      }
      return d;
    }
    if (d.rule() == SeqRule::OtR) {
      const SeqDeriv& l = d.premise(0);
      const SeqDeriv& r = d.premise(1);
      switch (l.rule()) {
        case SeqRule::Uf: tick(); return SeqDeriv::uf(root(SeqDeriv::otr(l.premise(), r)));
        case SeqRule::IL: tick(); return SeqDeriv::il(root(SeqDeriv::otr(l.premise(), r)));
        case SeqRule::OtL: tick(); return SeqDeriv::otl(root(SeqDeriv::otr(l.premise(), r)));
        default: break;
      }
    }
    return d;
  }

  std::size_t budget_;
};

}  // namespace

std::vector<SeqDeriv> circeq_rewrite_step(const SeqDeriv& d) {
  std::vector<SeqDeriv> out;
  if (auto r = rewrite_root(d)) push_unique(out, std::move(*r));
  const auto ps = d.premises();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (auto& sub : circeq_rewrite_step(ps[i])) {
      std::vector<SeqDeriv> next(ps.begin(), ps.end());
      next[i] = std::move(sub);
      push_unique(out, rebuild(d, std::move(next)));
    }
  }
  return out;
}

SeqDeriv circeq_normalize(const SeqDeriv& d) {
  constexpr std::size_t kBudget = 50'000'000;
  return Normalizer(kBudget).full(d);
}

bool decide_circeq(const SeqDeriv& f, const SeqDeriv& g) {
  if (!(f.conclusion() == g.conclusion()))
    throw RuleError("decide_circeq: derivations have different conclusions");
  return focus(f) == focus(g);
}

}  // namespace skewcoh
