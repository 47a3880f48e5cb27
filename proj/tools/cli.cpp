// Command-line front end: computes 2-adic symbols of Gram matrices, walks
// signs, canonicalizes, and decides isometry, with a brute-force oracle
// for cross-checking.  Exit codes: 0 ok, 1 input error, 2 degenerate form,
// 3 "distinct", 4 oracle gave up.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoadic/canonical.hpp"
#include "twoadic/decompose.hpp"
#include "twoadic/gram_file.hpp"
#include "twoadic/notation.hpp"
#include "twoadic/oracle.hpp"

namespace {

using namespace twoadic;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitDistinct = 3;
constexpr int kExitUnknown = 4;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GramMatrix load_gram(const std::string& path) { return read_gram_json(slurp(path)); }

// "16" or "1/16" -> scale exponent
int parse_scale_arg(const std::string& text) {
  const TwoAdicSymbol probe = parse_symbol(text + "^2_II");
  if (probe.terms().size() != 1)
    throw std::invalid_argument("bad scale \"" + text + "\"");
  return probe.terms().front().scale_exp;
}

int signed_oddity(int v) { return v <= 4 ? v : v - 8; }

void emit_symbol(const TwoAdicSymbol& s, const std::string& format) {
  std::cout << (format == "structured" ? to_records(s) : print_symbol(s)) << "\n";
}

std::string scale_set(const std::vector<int>& exps) {
  std::string out = "{";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ' ';
    out += scale_string(exps[i]);
  }
  return out + "}";
}

void report_invariants(const TwoAdicSymbol& s, const std::string& format) {
  const InvariantVector iv = invariant_vector(s);
  const auto ways = signways(s);
  TotalInvariants totals;
  if (!s.empty()) totals = total_invariants(fine_refinement(s));

  if (format == "structured") {
    nlohmann::json doc;
    doc["dim"] = totals.total_dim;
    doc["det_val"] = totals.det_val;
    doc["det_unit"] = totals.det_unit.value();
    doc["total_oddity"] = totals.total_oddity;
    doc["terms"] = nlohmann::json::parse(to_records(s));
    doc["compartments"] = nlohmann::json::array();
    for (std::size_t c = 0; c < s.compartments().size(); ++c) {
      nlohmann::json entry;
      entry["scale_exps"] = iv.compartments[c].scale_exps;
      entry["oddity"] = s.compartments()[c].oddity;
      entry["adjusted_oddity"] = iv.compartments[c].adjusted_oddity;
      doc["compartments"].push_back(std::move(entry));
    }
    doc["signways"] = nlohmann::json::array();
    for (const auto& way : iv.signway_signs) {
      nlohmann::json entry;
      entry["scale_exps"] = way.scale_exps;
      entry["sign"] = std::string(1, to_char(way.sign));
      doc["signways"].push_back(std::move(entry));
    }
    std::cout << doc.dump() << "\n";
    return;
  }

  if (s.empty()) return;  // nothing to report
  std::cout << "dim: " << totals.total_dim << "\n";
  std::cout << "determinant: 2^" << totals.det_val << " * u, u = "
            << totals.det_unit.value() << " (mod 8)\n";
  std::cout << "total oddity: " << totals.total_oddity << "\n";
  for (const auto& t : s.terms())
    std::cout << "scale " << scale_string(t.scale_exp) << ": dim " << t.dim << ", type "
              << (t.type == Type::I ? "I" : "II") << ", sign " << to_char(t.sign) << "\n";
  for (std::size_t c = 0; c < s.compartments().size(); ++c)
    std::cout << "compartment " << scale_set(iv.compartments[c].scale_exps)
              << ": oddity " << signed_oddity(s.compartments()[c].oddity)
              << ", adjusted oddity " << signed_oddity(iv.compartments[c].adjusted_oddity)
              << "\n";
  for (const auto& way : iv.signway_signs)
    std::cout << "signway " << scale_set(way.scale_exps) << ": sign " << to_char(way.sign)
              << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"2-adic lattice symbols: computation, rewriting, isometry"};
  app.require_subcommand(1);
  std::string format = "text";

  std::string gram_path, symbol_text, other_path, scale_a, scale_b;
  bool as_grams = false;
  int dim = 0, max_scale = 0, precision = 0;
  std::uint64_t seed = 0, budget = 0;

  auto* symbol = app.add_subcommand("symbol", "2-adic symbol of a Gram matrix file");
  symbol->add_option("gram", gram_path, "gram file (JSON), or - for stdin")->required();
  symbol->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* canonical = app.add_subcommand("canonical", "canonical form of a symbol");
  canonical->add_option("symbol", symbol_text)->required();
  canonical->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* equiv = app.add_subcommand("equiv", "decide isometry of two symbols or gram files");
  equiv->add_option("a", symbol_text)->required();
  equiv->add_option("b", other_path)->required();
  equiv->add_flag("--gram", as_grams, "arguments are gram files, not symbols");

  auto* walk = app.add_subcommand("walk", "apply the sign walk between two scales");
  walk->add_option("symbol", symbol_text)->required();
  walk->add_option("scale_i", scale_a)->required();
  walk->add_option("scale_j", scale_b)->required();
  walk->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* invariants = app.add_subcommand("invariants", "numeric invariants of a symbol");
  invariants->add_option("symbol", symbol_text)->required();
  invariants->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* random = app.add_subcommand("random", "seeded random integral lattice");
  random->add_option("dim", dim)->required()->check(CLI::PositiveNumber);
  random->add_option("max_scale", max_scale)->required()->check(CLI::NonNegativeNumber);
  random->add_option("seed", seed)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force congruence isometry test");
  oracle->add_option("a", gram_path)->required();
  oracle->add_option("b", other_path)->required();
  oracle->add_option("--precision", precision, "work mod 2^k (default val2(det) + 3)");
  oracle->add_option("--budget", budget, "search node budget");
  oracle->add_option("--seed", seed, "randomize the search order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (symbol->parsed()) {
    emit_symbol(symbol_of(load_gram(gram_path)), format);
    return kExitOk;
  }
  if (canonical->parsed()) {
    emit_symbol(canonical_form(parse_symbol(symbol_text)), format);
    return kExitOk;
  }
  if (equiv->parsed()) {
    const bool same = as_grams
                          ? isometric_grams(load_gram(symbol_text), load_gram(other_path))
                          : isometric_symbols(parse_symbol(symbol_text),
                                              parse_symbol(other_path));
    std::cout << (same ? "isometric" : "distinct") << "\n";
    return same ? kExitOk : kExitDistinct;
  }
  if (walk->parsed()) {
    const TwoAdicSymbol s = parse_symbol(symbol_text);
    emit_symbol(delta(s, {parse_scale_arg(scale_a), parse_scale_arg(scale_b)}), format);
    return kExitOk;
  }
  if (invariants->parsed()) {
    report_invariants(parse_symbol(symbol_text), format);
    return kExitOk;
  }
  if (random->parsed()) {
    std::cout << write_gram_json(random_lattice(dim, 0, max_scale, seed)) << "\n";
    return kExitOk;
  }
  if (oracle->parsed()) {
    const GramMatrix a = load_gram(gram_path);
    const GramMatrix b = load_gram(other_path);
    OracleOptions opts;
    if (budget) opts.node_budget = budget;
    opts.seed = seed;
    const int k = precision > 0 ? precision : default_precision(a, b);
    switch (isometric_mod(a, b, k, opts)) {
      case Verdict::isometric:
        std::cout << "isometric\n";
        return kExitOk;
      case Verdict::distinct:
        std::cout << "distinct\n";
        return kExitDistinct;
      case Verdict::unknown:
        std::cout << "unknown\n";
        return kExitUnknown;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DegenerateFormError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
