#include "skewcoh/render.hpp"

#include <json.hpp>
#include <type_traits>

#include "skewcoh/errors.hpp"

namespace skewcoh {

using nlohmann::json;

namespace {

// Uniform access to the three derivation types.
std::string_view label(const SeqDeriv& d) { return rule_name(d.rule()); }
std::string_view label(const GeneralSeqDeriv& d) { return rule_name(d.rule()); }
std::string_view label(const FocDeriv& d) { return rule_name(d.rule()); }

std::string phase_tag(const SeqDeriv&) { return {}; }
std::string phase_tag(const GeneralSeqDeriv&) { return {}; }
std::string phase_tag(const FocDeriv& d) { return d.phase() == Phase::L ? "L" : "R"; }

void attrs(const SeqDeriv& d, json& j) {
  if (d.rule() == SeqRule::OtR) j["split"] = d.split();
}
void attrs(const GeneralSeqDeriv& d, json& j) {
  if (d.rule() == GenRule::OtR) j["split"] = d.split();
  if (d.rule() == GenRule::Ccut) j["position"] = d.position();
}
void attrs(const FocDeriv& d, json& j) {
  if (d.rule() == FocRule::OtR) j["split"] = d.split();
}

template <class D>
void text_into(const D& d, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  const std::string ph = phase_tag(d);
  if (!ph.empty()) out += "[" + ph + "] ";
  out += std::string(label(d)) + "  " + print_sequent(d.conclusion()) + "\n";
  for (const auto& p : d.premises()) text_into(p, depth + 1, out);
}

std::string latex_rule(std::string_view r) {
  if (r == "IL") return "\\mathsf{I}\\mathsf{L}";
  if (r == "IR") return "\\mathsf{I}\\mathsf{R}";
  if (r == "otL") return "{\\otimes}\\mathsf{L}";
  if (r == "otR") return "{\\otimes}\\mathsf{R}";
  return "\\mathsf{" + std::string(r) + "}";
}

std::string turnstile(const SeqDeriv&) { return "\\vdash"; }
std::string turnstile(const GeneralSeqDeriv&) { return "\\vdash"; }
std::string turnstile(const FocDeriv& d) {
  return d.phase() == Phase::L ? "\\vdash_{\\mathsf{L}}" : "\\vdash_{\\mathsf{R}}";
}

std::string latex_sequent_with(const Sequent& s, const std::string& ts) {
  std::string out = s.stoup ? latex_formula(*s.stoup) : std::string("-");
  out += " \\mid ";
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i) out += ", ";
    out += latex_formula(s.context[i]);
  }
  if (!s.context.empty()) out += ' ';
  return out + ts + " " + latex_formula(s.succedent);
}

template <class D>
void latex_into(const D& d, std::string& out) {
  for (const auto& p : d.premises()) latex_into(p, out);
  if (d.premises().empty()) out += "\\AxiomC{}\n";
  out += "\\RightLabel{$" + latex_rule(label(d)) + "$}\n";
  out += d.premises().size() == 2 ? "\\BinaryInfC{$" : "\\UnaryInfC{$";
  out += latex_sequent_with(d.conclusion(), turnstile(d)) + "$}\n";
}

template <class D>
std::string latex(const D& d) {
  std::string out = "\\begin{prooftree}\n";
  latex_into(d, out);
  return out + "\\end{prooftree}\n";
}

template <class D>
json node(const D& d) {
  json j;
  j["rule"] = std::string(label(d));
  j["sequent"] = print_sequent(d.conclusion());
  const std::string ph = phase_tag(d);
  if (!ph.empty()) j["phase"] = ph;
  attrs(d, j);
  j["premises"] = json::array();
  for (const auto& p : d.premises()) j["premises"].push_back(node(p));
  return j;
}

std::string document(const char* calculus, json root) {
  json j;
  j["calculus"] = calculus;
  j["root"] = std::move(root);
  return j.dump(2);
}

json term_node(const CatTerm& t) {
  json j;
  switch (t.kind()) {
    case TermKind::Id: j["kind"] = "id"; break;
    case TermKind::Lam: j["kind"] = "lam"; break;
    case TermKind::Rho: j["kind"] = "rho"; break;
    case TermKind::Al: j["kind"] = "al"; break;
    case TermKind::Comp:
      j["kind"] = "comp";
      j["g"] = term_node(t.lhs());
      j["f"] = term_node(t.rhs());
      return j;
    case TermKind::Tensor:
      j["kind"] = "tensor";
      j["left"] = term_node(t.lhs());
      j["right"] = term_node(t.rhs());
      return j;
  }
  j["objects"] = json::array();
  for (const auto& o : t.objects()) j["objects"].push_back(print_formula(o));
  return j;
}

// ---------------------------------------------------------------------------
// Reading

[[noreturn]] void malformed(const std::string& msg) { throw SyntaxError(msg, 0); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t index_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) malformed(std::string("field '") + key + "' must be a natural");
  return v.get<std::size_t>();
}

const json& premises(const json& j, std::size_t arity, const std::string& rule) {
  const json& ps = field(j, "premises");
  if (!ps.is_array()) malformed("field 'premises' must be an array");
  if (ps.size() != arity)
    throw RuleError(rule + " expects " + std::to_string(arity) + " premise(s)");
  return ps;
}

json parse_document(std::string_view text, const char* calculus) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  const std::string c = text_field(doc, "calculus");
  if (c != calculus) malformed("expected calculus '" + std::string(calculus) + "', got '" + c + "'");
  return doc;
}

template <class D>
D checked(D d, const Sequent& recorded, const std::string& rule) {
  if (!(d.conclusion() == recorded))
    throw RuleError(rule + ": recorded sequent " + print_sequent(recorded) +
                    " does not match the rebuilt " + print_sequent(d.conclusion()));
  return d;
}

template <class D>
D read_plain(const json& j) {
  const std::string rule = text_field(j, "rule");
  const Sequent seq = parse_sequent(text_field(j, "sequent"));
  auto sub = [&](std::size_t arity, std::size_t i) { return read_plain<D>(premises(j, arity, rule)[i]); };
  if (rule == "ax") {
    premises(j, 0, rule);
    return checked(D::ax(seq.succedent), seq, rule);
  }
  if (rule == "IR") {
    premises(j, 0, rule);
    return checked(D::ir(), seq, rule);
  }
  if (rule == "uf") return checked(D::uf(sub(1, 0)), seq, rule);
  if (rule == "IL") return checked(D::il(sub(1, 0)), seq, rule);
  if (rule == "otL") return checked(D::otl(sub(1, 0)), seq, rule);
  if (rule == "otR") {
    D l = sub(2, 0);
    D r = sub(2, 1);
    const std::size_t split = index_field(j, "split");
    if constexpr (std::is_same_v<D, SeqDeriv>) {
      return checked(D::otr(std::move(l), std::move(r), split), seq, rule);
    } else {
      if (l.conclusion().context.size() != split)
        throw RuleError("otR: split does not match the left premise context");
      return checked(D::otr(std::move(l), std::move(r)), seq, rule);
    }
  }
  if constexpr (std::is_same_v<D, GeneralSeqDeriv>) {
    if (rule == "scut") return checked(D::scut(sub(2, 0), sub(2, 1)), seq, rule);
    if (rule == "ccut")
      return checked(D::ccut(sub(2, 0), sub(2, 1), index_field(j, "position")), seq, rule);
  }
  malformed("unknown rule '" + rule + "'");
}

FocDeriv read_foc(const json& j) {
  const std::string rule = text_field(j, "rule");
  const Sequent seq = parse_sequent(text_field(j, "sequent"));
  const std::string ph = text_field(j, "phase");
  if (ph != "L" && ph != "R") malformed("field 'phase' must be L or R");
  auto sub = [&](std::size_t arity, std::size_t i) { return read_foc(premises(j, arity, rule)[i]); };
  auto done = [&](FocDeriv d) {
    if ((d.phase() == Phase::L) != (ph == "L"))
      throw RuleError(rule + ": recorded phase " + ph + " is wrong");
    return checked(std::move(d), seq, rule);
  };
  if (rule == "ax") {
    premises(j, 0, rule);
    return done(FocDeriv::ax_atm(seq.succedent));
  }
  if (rule == "IR") {
    premises(j, 0, rule);
    return done(FocDeriv::ir());
  }
  if (rule == "uf") return done(FocDeriv::uf(sub(1, 0)));
  if (rule == "switch") return done(FocDeriv::sw(sub(1, 0)));
  if (rule == "IL") return done(FocDeriv::il(sub(1, 0)));
  if (rule == "otL") return done(FocDeriv::otl(sub(1, 0)));
  if (rule == "otR") {
    FocDeriv l = sub(2, 0);
    FocDeriv r = sub(2, 1);
    return done(FocDeriv::otr(std::move(l), std::move(r), index_field(j, "split")));
  }
  malformed("unknown rule '" + rule + "'");
}

Formula formula_field(const json& j, std::size_t i) {
  const json& objs = field(j, "objects");
  if (!objs.is_array() || i >= objs.size() || !objs[i].is_string())
    malformed("field 'objects' must list the formula arguments");
  return parse_formula(objs[i].get<std::string>());
}

CatTerm read_term(const json& j) {
  const std::string k = text_field(j, "kind");
  if (k == "id") return CatTerm::id(formula_field(j, 0));
  if (k == "lam") return CatTerm::lam(formula_field(j, 0));
  if (k == "rho") return CatTerm::rho(formula_field(j, 0));
  if (k == "al") return CatTerm::al(formula_field(j, 0), formula_field(j, 1), formula_field(j, 2));
  if (k == "comp") return CatTerm::comp(read_term(field(j, "g")), read_term(field(j, "f")));
  if (k == "tensor")
    return CatTerm::tensor(read_term(field(j, "left")), read_term(field(j, "right")));
  malformed("unknown term kind '" + k + "'");
}

}  // namespace

std::string latex_formula(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom: return f.name();
    case FormulaKind::Unit: return "\\mathsf{I}";
    case FormulaKind::Tensor: {
      std::string r = latex_formula(f.right());
      if (f.right().is_tensor()) r = "(" + r + ")";
      return latex_formula(f.left()) + " \\otimes " + r;
    }
  }
  return {};
}

std::string latex_sequent(const Sequent& s) { return latex_sequent_with(s, "\\vdash"); }

std::string render_text(const SeqDeriv& d) {
  std::string out;
  text_into(d, 0, out);
  return out;
}
std::string render_text(const GeneralSeqDeriv& d) {
  std::string out;
  text_into(d, 0, out);
  return out;
}
std::string render_text(const FocDeriv& d) {
  std::string out;
  text_into(d, 0, out);
  return out;
}

std::string render_latex(const SeqDeriv& d) { return latex(d); }
std::string render_latex(const GeneralSeqDeriv& d) { return latex(d); }
std::string render_latex(const FocDeriv& d) { return latex(d); }

std::string to_structured(const SeqDeriv& d) { return document("cut-free", node(d)); }
std::string to_structured(const GeneralSeqDeriv& d) { return document("general", node(d)); }
std::string to_structured(const FocDeriv& d) { return document("focused", node(d)); }

std::string to_structured(const CatTerm& t) {
  json j;
  j["calculus"] = "categorical";
  if (const auto& ty = t.type())
    j["type"] = print_formula(ty->dom) + " => " + print_formula(ty->cod);
  j["root"] = term_node(t);
  return j.dump(2);
}

SeqDeriv seq_deriv_from_structured(std::string_view text) {
  const json doc = parse_document(text, "cut-free");
  return read_plain<SeqDeriv>(field(doc, "root"));
}

GeneralSeqDeriv general_deriv_from_structured(std::string_view text) {
  const json doc = parse_document(text, "general");
  return read_plain<GeneralSeqDeriv>(field(doc, "root"));
}

FocDeriv foc_deriv_from_structured(std::string_view text) {
  const json doc = parse_document(text, "focused");
  return read_foc(field(doc, "root"));
}

CatTerm cat_term_from_structured(std::string_view text) {
  const json doc = parse_document(text, "categorical");
  CatTerm t = read_term(field(doc, "root"));
  infer_type(t);
  return t;
}

}  // namespace skewcoh
