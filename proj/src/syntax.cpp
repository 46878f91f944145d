#include "skewcoh/syntax.hpp"

#include <functional>
#include <stdexcept>

#include "parse_detail.hpp"

namespace skewcoh {

using detail::hash_combine;
using detail::Lexer;
using detail::Tok;

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty() || name == "I") return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("invalid atom name '" + name + "'");
  const std::size_t h = hash_combine(0x41, std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Atom, std::move(name), nullptr, nullptr, 0, 1, h}));
}

Formula Formula::unit() {
  static const Formula u(
      std::make_shared<const Node>(Node{FormulaKind::Unit, {}, nullptr, nullptr, 1, 1, 0x49}));
  return u;
}

Formula Formula::tensor(Formula left, Formula right) {
  const std::size_t h = hash_combine(hash_combine(0x2a, left.hash()), right.hash());
  const std::size_t conn = 1 + left.connectives() + right.connectives();
  const std::size_t size = 1 + left.size() + right.size();
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Tensor, {}, std::make_shared<const Formula>(std::move(left)),
           std::make_shared<const Formula>(std::move(right)), conn, size, h}));
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case FormulaKind::Atom: return a.name() == b.name();
    case FormulaKind::Unit: return true;
    case FormulaKind::Tensor: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case FormulaKind::Atom: return a.name() <=> b.name();
    case FormulaKind::Unit: return std::strong_ordering::equal;
    case FormulaKind::Tensor:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
  return std::strong_ordering::equal;
}

std::size_t SequentHash::operator()(const Sequent& s) const noexcept {
  std::size_t h = s.stoup ? hash_combine(1, s.stoup->hash()) : 2;
  for (const auto& f : s.context) h = hash_combine(h, f.hash());
  return hash_combine(h, s.succedent.hash());
}

std::size_t connectives(const Sequent& seq) {
  std::size_t n = seq.stoup ? seq.stoup->connectives() : 0;
  for (const auto& f : seq.context) n += f.connectives();
  return n + seq.succedent.connectives();
}

Rank rank(const Sequent& seq, Phase phase) {
  return Rank{connectives(seq), seq.stoup ? 0u : 1u, phase == Phase::R ? 0u : 1u};
}

namespace detail {

namespace {

Formula parse_primary(Lexer& lex) {
  if (lex.peek().kind == Tok::Ident) {
    auto t = lex.next();
    if (t.text == "I") return Formula::unit();
    return Formula::atom(std::string(t.text));
  }
  if (lex.accept(Tok::LParen)) {
    Formula f = parse_formula(lex);
    lex.expect(Tok::RParen, "')'");
    return f;
  }
  lex.fail("expected a formula");
}

}  // namespace

Formula parse_formula(Lexer& lex) {
  Formula acc = parse_primary(lex);
  while (lex.accept(Tok::Star)) acc = Formula::tensor(std::move(acc), parse_primary(lex));
  return acc;
}

}  // namespace detail

Formula parse_formula(std::string_view text) {
  Lexer lex(text);
  Formula f = detail::parse_formula(lex);
  if (lex.peek().kind != Tok::End) lex.fail("expected end of formula");
  return f;
}

std::string print_formula(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom: return f.name();
    case FormulaKind::Unit: return "I";
    case FormulaKind::Tensor: {
      std::string out = print_formula(f.left());
      out += " * ";
      if (f.right().is_tensor())
        out += "(" + print_formula(f.right()) + ")";
      else
        out += print_formula(f.right());
      return out;
    }
  }
  return {};
}

Sequent parse_sequent(std::string_view text) {
  Lexer lex(text);
  Stoup stoup;
  if (!lex.accept(Tok::Dash)) stoup = detail::parse_formula(lex);
  lex.expect(Tok::Pipe, "'|' after the stoup");
  Context ctx;
  if (lex.peek().kind != Tok::Turnstile) {
    ctx.push_back(detail::parse_formula(lex));
    while (lex.accept(Tok::Comma)) ctx.push_back(detail::parse_formula(lex));
  }
  lex.expect(Tok::Turnstile, "'|-'");
  Formula succ = detail::parse_formula(lex);
  if (lex.peek().kind != Tok::End) lex.fail("expected end of sequent");
  return Sequent{std::move(stoup), std::move(ctx), std::move(succ)};
}

std::string print_context(const Context& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(ctx[i]);
  }
  return out;
}

std::string print_sequent(const Sequent& seq) {
  std::string out = seq.stoup ? print_formula(*seq.stoup) : "-";
  out += " | ";
  if (!seq.context.empty()) out += print_context(seq.context) + " ";
  out += "|- ";
  out += print_formula(seq.succedent);
  return out;
}

namespace {

void collect_frontier(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom: out.push_back(f.name()); break;
    case FormulaKind::Unit: break;
    case FormulaKind::Tensor:
      collect_frontier(f.left(), out);
      collect_frontier(f.right(), out);
      break;
  }
}

}  // namespace

std::vector<std::string> frontier(const Formula& f) {
  std::vector<std::string> out;
  collect_frontier(f, out);
  return out;
}

Formula interp_stoup(const Stoup& s) { return s ? *s : Formula::unit(); }

Formula interp_antecedent(const Stoup& s, const Context& g) {
  Formula acc = interp_stoup(s);
  for (const auto& a : g) acc = Formula::tensor(std::move(acc), a);
  return acc;
}

std::vector<Formula> unit_free_shapes(std::size_t tensors, const Formula& atom) {
  std::vector<std::vector<Formula>> by_size(tensors + 1);
  by_size[0] = {atom};
  for (std::size_t n = 1; n <= tensors; ++n)
    for (std::size_t l = 0; l < n; ++l)
      for (const auto& a : by_size[l])
        for (const auto& b : by_size[n - 1 - l]) by_size[n].push_back(Formula::tensor(a, b));
  return by_size[tensors];
}

}  // namespace skewcoh
