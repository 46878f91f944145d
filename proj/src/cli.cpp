#include "skewcoh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "skewcoh/catcalc.hpp"
#include "skewcoh/errors.hpp"
#include "skewcoh/focused.hpp"
#include "skewcoh/models.hpp"
#include "skewcoh/render.hpp"
#include "skewcoh/seqcalc.hpp"

namespace skewcoh {

namespace {

using nlohmann::json;

enum class Format { Text, Latex, Structured };

constexpr std::size_t kDefaultMaxRank = 24;
constexpr std::size_t kTamariMax = 8;

// Raised for input the user can fix; reported with exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_rank() {
  const char* env = std::getenv("SKEWCOH_MAX_RANK");
  if (!env || !*env) return kDefaultMaxRank;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw InputError("SKEWCOH_MAX_RANK must be a natural number");
  return v;
}

void guard(std::size_t conns) {
  const std::size_t cap = max_rank();
  if (conns > cap)
    throw InputError("search exceeds SKEWCOH_MAX_RANK: " + std::to_string(conns) +
                     " connectives, cap " + std::to_string(cap));
}

std::string render(const FocDeriv& d, Format f) {
  switch (f) {
    case Format::Text: return render_text(d);
    case Format::Latex: return render_latex(d);
    case Format::Structured: return to_structured(d);
  }
  return {};
}

std::string type_text(const MapType& t) {
  return print_formula(t.dom) + " => " + print_formula(t.cod);
}

int cmd_check(const std::string& text, Format fmt, std::ostream& out) {
  const Sequent seq = parse_sequent(text);
  guard(connectives(seq));
  // A single witness is enough; the decision short-circuits.
  if (!derivable(seq)) {
    if (fmt == Format::Structured)
      out << json{{"sequent", print_sequent(seq)}, {"derivable", false}}.dump(2) << "\n";
    else
      out << "not derivable\n";
    return 1;
  }
  const FocDeriv witness = focderivs(seq).front();
  if (fmt == Format::Structured) {
    out << json{{"sequent", print_sequent(seq)},
                {"derivable", true},
                {"witness", json::parse(to_structured(witness))}}
               .dump(2)
        << "\n";
  } else {
    out << "derivable\n" << render(witness, fmt);
  }
  return 0;
}

int cmd_enum(const std::string& a_text, const std::string& c_text, Format fmt,
             std::optional<std::size_t> limit, std::ostream& out) {
  const Formula a = parse_formula(a_text);
  const Formula c = parse_formula(c_text);
  guard(a.connectives() + c.connectives());
  const auto ds = focderivs(a, {}, c);
  const std::size_t shown = std::min(ds.size(), limit.value_or(ds.size()));
  if (fmt == Format::Structured) {
    json maps = json::array();
    for (std::size_t i = 0; i < shown; ++i)
      maps.push_back({{"term", print_term(sound(emb_l(ds[i])))},
                      {"derivation", json::parse(to_structured(ds[i]))}});
    out << json{{"dom", print_formula(a)}, {"cod", print_formula(c)},
                {"count", ds.size()}, {"maps", maps}}
               .dump(2)
        << "\n";
    return 0;
  }
  const char* comment = fmt == Format::Latex ? "% " : "";
  out << comment << "count: " << ds.size() << "\n";
  for (std::size_t i = 0; i < shown; ++i) {
    out << comment << "[" << i + 1 << "] " << print_term(sound(emb_l(ds[i]))) << "\n";
    out << render(ds[i], fmt);
  }
  return 0;
}

int cmd_equal(const std::string& t1, const std::string& t2, const std::string& model_file,
              bool check_model, std::ostream& out) {
  const CatTerm f = parse_term(t1);
  const CatTerm g = parse_term(t2);
  const MapType tf = infer_type(f);
  const MapType tg = infer_type(g);
  if (!(tf == tg))
    throw InputError("terms have different types: " + type_text(tf) + " and " + type_text(tg));
  const FocDeriv nf = focus(cmplt(f));
  const FocDeriv ng = focus(cmplt(g));
  const bool equal = nf == ng;
  out << (equal ? "equal" : "not equal") << "\n";
  out << "type: " << type_text(tf) << "\n";
  out << "first:\n" << render_text(nf) << "second:\n" << render_text(ng);

  if (check_model) {
    if (model_file.empty()) throw InputError("--check-model needs --model FILE");
    std::ifstream in(model_file);
    if (!in) throw InputError("cannot read model file " + model_file);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto model = parse_model(buf.str());
    if (const auto* ptd = std::get_if<PtdModel>(&model)) {
      const bool same = check_ptd_equal(f, g, *ptd);
      out << "ptd model: " << (same ? "same function" : "different functions") << "\n";
      if (equal && !same) throw std::logic_error("equal maps evaluate differently in a model");
    } else {
      const auto& nat = std::get<NatModel>(model);
      const bool ok = eval_formula_nat(tf.dom, nat) <= eval_formula_nat(tf.cod, nat);
      out << "nat model: " << (ok ? "sound" : "unsound") << "\n";
    }
  }
  return equal ? 0 : 1;
}

int cmd_nf(const std::string& text, Format fmt, std::ostream& out) {
  const CatTerm t = parse_term(text);
  const MapType ty = infer_type(t);
  const FocDeriv d = focus(cmplt(t));
  const CatTerm n = sound(emb_l(d));
  if (fmt == Format::Structured) {
    out << json{{"type", type_text(ty)},
                {"normal_form", print_term(n)},
                {"term", json::parse(to_structured(n))},
                {"derivation", json::parse(to_structured(d))}}
               .dump(2)
        << "\n";
    return 0;
  }
  const char* comment = fmt == Format::Latex ? "% " : "";
  out << comment << print_term(n) << "\n" << render(d, fmt);
  return 0;
}

int cmd_tamari(std::size_t n, std::ostream& out) {
  if (n > kTamariMax)
    throw InputError("tamari: n must be at most " + std::to_string(kTamariMax));
  guard(2 * n);
  const auto shapes = unit_free_shapes(n, Formula::atom("X"));
  std::size_t count = 0;
  for (const auto& a : shapes)
    for (const auto& c : shapes)
      if (hom_count(a, c) == 1) ++count;
  out << count << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide, enumerate and normalize maps of the free skew monoidal category",
               "skewcoh"};
  app.require_subcommand(1);

  Format fmt = Format::Text;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"latex", Format::Latex}, {"structured", Format::Structured}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "text, latex or structured")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string first, second, model_file;
  std::optional<std::size_t> limit;
  bool check_model = false;
  std::size_t n = 0;

  auto* check = app.add_subcommand("check", "Decide derivability of a sequent `S | G |- C`");
  check->add_option("sequent", first, "sequent")->required();
  add_format(check);

  auto* enumerate = app.add_subcommand("enum", "List every map A => C exactly once");
  enumerate->add_option("dom", first, "domain formula")->required();
  enumerate->add_option("cod", second, "codomain formula")->required();
  enumerate->add_option("--limit", limit, "print at most N maps; the count is unaffected");
  add_format(enumerate);

  auto* equal = app.add_subcommand("equal", "Decide equality of two maps");
  equal->add_option("first", first, "term")->required();
  equal->add_option("second", second, "term")->required();
  equal->add_option("--model", model_file, "model description file");
  equal->add_flag("--check-model", check_model, "also compare the maps in --model");

  auto* nf = app.add_subcommand("nf", "Print the normal form of a map");
  nf->add_option("term", first, "term")->required();
  add_format(nf);

  auto* tamari = app.add_subcommand("tamari", "Count pairs of n-tensor unit-free formulas with a map");
  tamari->add_option("n", n, "number of tensors")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(first, fmt, out);
    if (enumerate->parsed()) return cmd_enum(first, second, fmt, limit, out);
    if (equal->parsed()) return cmd_equal(first, second, model_file, check_model, out);
    if (nf->parsed()) return cmd_nf(first, fmt, out);
    if (tamari->parsed()) return cmd_tamari(n, out);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace skewcoh
