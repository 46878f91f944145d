#include "skewcoh/catcalc.hpp"

#include <stdexcept>
#include <utility>

#include "parse_detail.hpp"
#include "skewcoh/errors.hpp"
#include "skewcoh/focused.hpp"
#include "skewcoh/seqcalc.hpp"

namespace skewcoh {

using detail::hash_combine;

namespace {

std::optional<MapType> compute_type(TermKind k, const std::vector<Formula>& o,
                                    const std::vector<CatTerm>& c) {
  switch (k) {
    case TermKind::Id: return MapType{o[0], o[0]};
    case TermKind::Lam: return MapType{Formula::tensor(Formula::unit(), o[0]), o[0]};
    case TermKind::Rho: return MapType{o[0], Formula::tensor(o[0], Formula::unit())};
    case TermKind::Al:
      return MapType{Formula::tensor(Formula::tensor(o[0], o[1]), o[2]),
                     Formula::tensor(o[0], Formula::tensor(o[1], o[2]))};
    case TermKind::Comp: {
      const auto& g = c[0].type();
      const auto& f = c[1].type();
      if (!g || !f || !(f->cod == g->dom)) return std::nullopt;
      return MapType{f->dom, g->cod};
    }
    case TermKind::Tensor: {
      const auto& f = c[0].type();
      const auto& g = c[1].type();
      if (!f || !g) return std::nullopt;
      return MapType{Formula::tensor(f->dom, g->dom), Formula::tensor(f->cod, g->cod)};
    }
  }
  return std::nullopt;
}

}  // namespace

CatTerm CatTerm::make(TermKind k, std::vector<Formula> objs, std::vector<CatTerm> kids) {
  std::size_t size = 1;
  std::size_t h = static_cast<std::size_t>(k) + 7;
  for (const auto& o : objs) {
    size += o.connectives();
    h = hash_combine(h, o.hash());
  }
  for (const auto& c : kids) {
    size += c.size();
    h = hash_combine(h, c.hash());
  }
  auto type = compute_type(k, objs, kids);
  return CatTerm(std::make_shared<const Node>(
      Node{k, std::move(objs), std::move(kids), std::move(type), size, h}));
}

CatTerm CatTerm::id(Formula a) { return make(TermKind::Id, {std::move(a)}, {}); }
CatTerm CatTerm::comp(CatTerm g, CatTerm f) {
  return make(TermKind::Comp, {}, {std::move(g), std::move(f)});
}
CatTerm CatTerm::tensor(CatTerm f, CatTerm g) {
  return make(TermKind::Tensor, {}, {std::move(f), std::move(g)});
}
CatTerm CatTerm::lam(Formula a) { return make(TermKind::Lam, {std::move(a)}, {}); }
CatTerm CatTerm::rho(Formula a) { return make(TermKind::Rho, {std::move(a)}, {}); }
CatTerm CatTerm::al(Formula a, Formula b, Formula c) {
  return make(TermKind::Al, {std::move(a), std::move(b), std::move(c)}, {});
}

bool operator==(const CatTerm& a, const CatTerm& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.objects() != b.objects()) return false;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i)
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  return true;
}

namespace {

void check_path(const CatTerm& t, const std::string& path) {
  if (t.type()) return;
  if (t.kind() == TermKind::Comp) {
    check_path(t.rhs(), path + ".f");
    check_path(t.lhs(), path + ".g");
    const MapType& f = *t.rhs().type();
    const MapType& g = *t.lhs().type();
    throw TypeError("cannot compose: codomain " + print_formula(f.cod) +
                        " of the first map differs from domain " + print_formula(g.dom) +
                        " of the second",
                    path);
  }
  check_path(t.lhs(), path + ".l");
  check_path(t.rhs(), path + ".r");
}

}  // namespace

MapType infer_type(const CatTerm& t) {
  check_path(t, "root");
  return *t.type();
}

// ---------------------------------------------------------------------------
// Surface syntax

namespace {

using detail::Lexer;
using detail::Tok;

class TermParser {
 public:
  explicit TermParser(std::string_view src) : lex_(src) {}

  CatTerm run() {
    CatTerm t = sequence();
    if (lex_.peek().kind != Tok::End) lex_.fail("expected ';', '.', '(*)' or end of input");
    return t;
  }

 private:
  CatTerm sequence() {
    CatTerm t = dotted();
    while (lex_.peek().kind == Tok::Semi) {
      const std::size_t at = lex_.next().pos;
      t = compose(dotted(), std::move(t), at);
    }
    return t;
  }

  CatTerm dotted() {
    CatTerm t = tensored();
    while (lex_.peek().kind == Tok::Dot) {
      const std::size_t at = lex_.next().pos;
      t = compose(std::move(t), tensored(), at);
    }
    return t;
  }

  CatTerm tensored() {
    CatTerm t = primary();
    while (lex_.accept(Tok::TensorMap)) t = CatTerm::tensor(std::move(t), primary());
    return t;
  }

  CatTerm primary() {
    if (lex_.accept(Tok::LParen)) {
      CatTerm t = sequence();
      lex_.expect(Tok::RParen, "')'");
      return t;
    }
    if (lex_.peek().kind != Tok::Ident) lex_.fail("expected a term");
    const std::string_view head = lex_.peek().text;
    if (head == "id") return unary(CatTerm::id);
    if (head == "lam") return unary(CatTerm::lam);
    if (head == "rho") return unary(CatTerm::rho);
    if (head == "al") {
      lex_.next();
      lex_.expect(Tok::LBracket, "'['");
      Formula a = detail::parse_formula(lex_);
      lex_.expect(Tok::Comma, "','");
      Formula b = detail::parse_formula(lex_);
      lex_.expect(Tok::Comma, "','");
      Formula c = detail::parse_formula(lex_);
      lex_.expect(Tok::RBracket, "']'");
      return CatTerm::al(std::move(a), std::move(b), std::move(c));
    }
    lex_.fail("expected id, lam, rho or al");
  }

  CatTerm unary(CatTerm (*make)(Formula)) {
    lex_.next();
    lex_.expect(Tok::LBracket, "'['");
    Formula a = detail::parse_formula(lex_);
    lex_.expect(Tok::RBracket, "']'");
    return make(std::move(a));
  }

  static CatTerm compose(CatTerm g, CatTerm f, std::size_t at) {
    CatTerm t = CatTerm::comp(g, f);
    if (!t.type())
      throw TypeError("cannot compose " + print_formula(f.type()->dom) + " => " +
                          print_formula(f.type()->cod) + " with " +
                          print_formula(g.type()->dom) + " => " +
                          print_formula(g.type()->cod),
                      "position " + std::to_string(at));
    return t;
  }

  Lexer lex_;
};

void print_into(const CatTerm& t, std::string& out);

void print_wrapped(const CatTerm& t, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_into(t, out);
  if (wrap) out += ')';
}

void print_into(const CatTerm& t, std::string& out) {
  const auto& o = t.objects();
  switch (t.kind()) {
    case TermKind::Id: out += "id[" + print_formula(o[0]) + "]"; return;
    case TermKind::Lam: out += "lam[" + print_formula(o[0]) + "]"; return;
    case TermKind::Rho: out += "rho[" + print_formula(o[0]) + "]"; return;
    case TermKind::Al:
      out += "al[" + print_formula(o[0]) + ", " + print_formula(o[1]) + ", " +
             print_formula(o[2]) + "]";
      return;
    case TermKind::Comp:
      print_wrapped(t.rhs(), false, out);
      out += " ; ";
      print_wrapped(t.lhs(), t.lhs().kind() == TermKind::Comp, out);
      return;
    case TermKind::Tensor:
      print_wrapped(t.lhs(), t.lhs().kind() == TermKind::Comp, out);
      out += " (*) ";
      print_wrapped(t.rhs(), t.rhs().kind() == TermKind::Comp || t.rhs().kind() == TermKind::Tensor,
                    out);
      return;
  }
}

}  // namespace

CatTerm parse_term(std::string_view text) { return TermParser(text).run(); }

std::string print_term(const CatTerm& t) {
  std::string out;
  print_into(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Equality, normal forms, hom-sets

bool decide_equal(const CatTerm& f, const CatTerm& g) {
  const MapType tf = infer_type(f);
  const MapType tg = infer_type(g);
  if (!(tf == tg))
    throw TypeError("terms have different types: " + print_formula(tf.dom) + " => " +
                        print_formula(tf.cod) + " vs " + print_formula(tg.dom) + " => " +
                        print_formula(tg.cod),
                    "root");
  return focus(cmplt(f)) == focus(cmplt(g));
}

CatTerm normal_form(const CatTerm& f) { return sound(emb_l(focus(cmplt(f)))); }

std::vector<CatTerm> fskmaps(const Formula& a, const Formula& c) {
  std::vector<CatTerm> out;
  for (const auto& d : focderivs(a, {}, c)) out.push_back(sound(emb_l(d)));
  return out;
}

std::size_t hom_count(const Formula& a, const Formula& c) {
  return focderivs(a, {}, c).size();
}

}  // namespace skewcoh
