// gpoly: g-polynomials, Tutte polynomials and Delannoy listings from the shell.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gpoly/catalog.hpp"
#include "gpoly/decomposition.hpp"
#include "gpoly/error.hpp"
#include "gpoly/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace gpoly;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;

struct InputOptions {
  std::string file;
  std::string name;
  std::string params;
  int schubert_n = 0;
  std::string upper;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* file = cmd->add_option("--file", in.file, "Matroid JSON file ('-' for stdin)");
  auto* name = cmd->add_option("--name", in.name, "Catalog name (see `gpoly catalog`)");
  cmd->add_option("--params", in.params, "Catalog parameters, e.g. r=2,n=5")->needs(name);
  auto* n = cmd->add_option("--schubert", in.schubert_n, "Schubert matroid size n");
  auto* upper = cmd->add_option("--upper", in.upper, "Schubert upper set, e.g. 1,3,5");
  n->needs(upper);
  upper->needs(n);
  file->excludes(name)->excludes(n);
  name->excludes(n);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(what + ": \"" + item + "\" is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw Error(what + ": empty list");
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  RealizedMatroid matroid;
  std::optional<std::string> label;
};

Input load_input(const InputOptions& in) {
  MatroidSpec spec;
  if (!in.file.empty()) {
    spec = parse_matroid(read_file(in.file));
  } else if (!in.name.empty()) {
    spec = catalog_lookup(in.name, in.params.empty() ? Params{} : parse_params(in.params));
  } else if (in.schubert_n != 0 || !in.upper.empty()) {
    spec.form = SchubertSpec{in.schubert_n, parse_int_list(in.upper, "--upper")};
  } else {
    throw Error("no input: give one of --file, --name, --schubert/--upper");
  }
  return {realize(spec), spec.label};
}

const SchubertMatroid* as_schubert(const Input& in) { return std::get_if<SchubertMatroid>(&in.matroid); }

ordered_json coeffs_json(const IntPolynomial& p) {
  // Arbitrary precision: emit as JSON numbers via their decimal text.
  ordered_json arr = ordered_json::array();
  for (const auto& c : coeff_strings(p)) arr.push_back(ordered_json::parse(c));
  return arr;
}

ordered_json elements_json(ElementSet s) {
  ordered_json arr = ordered_json::array();
  for (int e : s) arr.push_back(e);
  return arr;
}

// g ------------------------------------------------------------------------

int run_g(const InputOptions& io, const std::string& method, bool shifted, bool as_json) {
  const Input in = load_input(io);
  const SchubertMatroid* s = as_schubert(in);
  if ((method == "delannoy" || method == "activities") && s == nullptr) {
    throw Error("--method " + method + " needs Schubert input (--schubert/--upper or a schubert file)");
  }
  if ((method == "delannoy" || method == "activities") && !is_loopless_coloopless(*s)) {
    throw Error("--method " + method + " needs a loopless, coloopless Schubert matroid; " + to_string(*s) +
                " has loops or coloops (its g-polynomial is 0)");
  }

  IntPolynomial g;
  std::string used = method;
  if (method == "delannoy") {
    g = g_delannoy(*s);
  } else if (method == "activities") {
    g = g_activities(*s);
  } else if (method == "auto" && s != nullptr) {
    used = "activities";
    g = is_loopless_coloopless(*s) ? g_activities(*s) : IntPolynomial{};
  } else {
    used = "decomposition";
    g = g_polynomial(as_matroid(in.matroid));
  }

  if (as_json) {
    ordered_json out;
    if (in.label) out["label"] = *in.label;
    out["method"] = used;
    out["g"] = {{"coeffs", coeffs_json(g)}};
    if (shifted) out["shifted"] = {{"coeffs", coeffs_json(compose_shift(divide_by_t(g), -1))}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_text(g) << "\n";
    if (shifted) std::cout << "shifted: " << to_text(compose_shift(divide_by_t(g), -1)) << "\n";
  }
  return kExitOk;
}

// tutte --------------------------------------------------------------------

int run_tutte(const InputOptions& io, const std::string& order_text, bool as_json) {
  const Matroid m = as_matroid(load_input(io).matroid);
  const ElementOrder order = order_text.empty() ? ElementOrder::natural(m.size())
                                                : ElementOrder::from_sequence(parse_int_list(order_text, "--order"));
  if (order.size() != m.size()) {
    throw Error("--order has " + std::to_string(order.size()) + " elements, matroid has " +
                std::to_string(m.size()));
  }
  const BivariatePolynomial t = tutte(m, order);
  if (as_json) {
    std::cout << to_json(t) << "\n";
  } else {
    std::cout << to_text(t) << "\n";
  }
  return kExitOk;
}

// info ---------------------------------------------------------------------

int run_info(const InputOptions& io, bool as_json) {
  const Input in = load_input(io);
  const Matroid m = as_matroid(in.matroid);
  const LoopsColoops lc = loops_coloops(m);
  const auto blocks = connected_components(m);
  const auto flats = cyclic_flats(m);
  const long b = beta(m);
  const IntPolynomial g = g_polynomial(m);
  const BivariatePolynomial t = tutte(m);

  if (as_json) {
    ordered_json out;
    if (in.label) out["label"] = *in.label;
    if (const auto* s = as_schubert(in)) out["schubert"] = to_string(*s);
    out["size"] = m.size();
    out["rank"] = m.rank();
    out["bases"] = m.bases().size();
    out["loops"] = elements_json(lc.loops);
    out["coloops"] = elements_json(lc.coloops);
    out["connected"] = blocks.size() == 1;
    ordered_json comps = ordered_json::array();
    for (ElementSet c : blocks) comps.push_back(elements_json(c));
    out["components"] = comps;
    out["beta"] = b;
    ordered_json cf = ordered_json::array();
    for (ElementSet f : flats) cf.push_back(elements_json(f));
    out["cyclic_flats"] = cf;
    out["tutte"] = ordered_json::parse(to_json(t));
    out["g"] = {{"coeffs", coeffs_json(g)}};
    std::cout << out.dump() << "\n";
    return kExitOk;
  }

  if (in.label) std::cout << "label:        " << *in.label << "\n";
  if (const auto* s = as_schubert(in)) std::cout << "schubert:     " << to_string(*s) << "\n";
  std::cout << "size:         " << m.size() << "\n";
  std::cout << "rank:         " << m.rank() << "\n";
  std::cout << "bases:        " << m.bases().size() << "\n";
  std::cout << "loops:        " << to_string(lc.loops) << "\n";
  std::cout << "coloops:      " << to_string(lc.coloops) << "\n";
  std::cout << "connected:    " << (blocks.size() == 1 ? "yes" : "no") << " (" << blocks.size()
            << (blocks.size() == 1 ? " component)" : " components)") << "\n";
  std::cout << "beta:         " << b << "\n";
  std::cout << "cyclic flats: " << flats.size() << "\n";
  std::cout << "tutte:        " << to_text(t) << "\n";
  std::cout << "g:            " << to_text(g);
  if (!lc.loops.empty() || !lc.coloops.empty()) std::cout << " (loops or coloops present)";
  std::cout << "\n";
  return kExitOk;
}

// delannoy -----------------------------------------------------------------

int run_delannoy(const InputOptions& io, bool list, bool as_json) {
  const Input in = load_input(io);
  const SchubertMatroid* s = as_schubert(in);
  if (s == nullptr) throw Error("delannoy needs Schubert input (--schubert/--upper or a schubert file)");
  const LoopsColoops lc = sch_loops_coloops(*s);
  if (!lc.loops.empty()) {
    throw Error(to_string(*s) + " has loops " + to_string(lc.loops) + "; Delannoy paths need a loopless matroid");
  }
  if (!lc.coloops.empty()) {
    throw Error(to_string(*s) + " has coloops " + to_string(lc.coloops) +
                "; Delannoy paths need a coloopless matroid");
  }
  const auto paths = enumerate_delannoy(*s);
  std::map<int, long> by_d;
  for (const auto& p : paths) ++by_d[p.diagonals()];

  if (as_json) {
    ordered_json out;
    out["schubert"] = to_string(*s);
    ordered_json counts = ordered_json::array();
    for (const auto& [d, c] : by_d) counts.push_back({{"diagonals", d}, {"paths", c}});
    out["counts"] = counts;
    if (list) {
      ordered_json words = ordered_json::array();
      for (const auto& p : paths) words.push_back(p.word());
      out["paths"] = words;
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  if (list) {
    // The empty path (n-r = r = 1) has no letters.
    for (const auto& p : paths) std::cout << (p.steps.empty() ? "(empty)" : p.word()) << "\n";
    return kExitOk;
  }
  std::string line;
  for (const auto& [d, c] : by_d) {
    if (!line.empty()) line += ", ";
    line += "d=" + std::to_string(d) + ": " + std::to_string(c);
  }
  std::cout << line << "\n";
  return kExitOk;
}

// verify -------------------------------------------------------------------

int run_verify(const VerifyOptions& opt, bool as_json) {
  const auto results = run_verification(opt);
  bool ok = true;
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (as_json) {
      ordered_json item{{"property", r.name}, {"instances", r.instances}, {"passed", r.passed}};
      if (!r.passed) item["counterexample"] = r.counterexample;
      arr.push_back(item);
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances)";
    if (!r.passed) std::cout << ": " << r.counterexample;
    std::cout << "\n";
  }
  if (as_json) std::cout << ordered_json{{"passed", ok}, {"properties", arr}}.dump() << "\n";
  if (!ok) {
    for (const auto& r : results) {
      if (!r.passed) std::cerr << "gpoly verify: " << r.name << " failed on " << r.counterexample << "\n";
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// catalog ------------------------------------------------------------------

int run_catalog(bool as_json) {
  const auto names = catalog_names();
  if (as_json) {
    std::cout << ordered_json(names).dump() << "\n";
  } else {
    for (const auto& n : names) std::cout << n << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact g-polynomials of matroids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gpoly 0.1.0");

  InputOptions io;
  bool as_json = false;

  auto* g_cmd = app.add_subcommand("g", "g-polynomial");
  add_input_options(g_cmd, io);
  std::string method = "auto";
  bool shifted = false;
  g_cmd->add_option("--method", method, "auto, delannoy, activities or decomposition")
      ->check(CLI::IsMember({"auto", "delannoy", "activities", "decomposition"}));
  g_cmd->add_flag("--shifted", shifted, "Also print g~(t-1) where g = t g~");
  g_cmd->add_flag("--json", as_json, "JSON output");

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial from basis activities");
  add_input_options(tutte_cmd, io);
  std::string order;
  tutte_cmd->add_option("--order", order, "Element order, e.g. 3,1,2,4 (default natural)");
  tutte_cmd->add_flag("--json", as_json, "JSON output");

  auto* info_cmd = app.add_subcommand("info", "Structural summary");
  add_input_options(info_cmd, io);
  info_cmd->add_flag("--json", as_json, "JSON output");

  auto* del_cmd = app.add_subcommand("delannoy", "Admissible Delannoy paths of a Schubert matroid");
  add_input_options(del_cmd, io);
  bool list = false;
  del_cmd->add_flag("--list", list, "One path word per line");
  del_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-method property suite");
  VerifyOptions vopt;
  std::string fault;
  verify_cmd->add_option("--max-n", vopt.max_n, "Largest Schubert matroid size")->capture_default_str();
  verify_cmd->add_option("--samples", vopt.samples, "Check a seeded sample of this many Schubert matroids");
  verify_cmd->add_option("--seed", vopt.seed, "Seed for sampling and random element orders")
      ->capture_default_str();
  bool no_catalog = false;
  verify_cmd->add_flag("--no-catalog", no_catalog, "Skip the catalog regressions");
  verify_cmd->add_option("--inject-fault", fault)->check(CLI::IsMember({"vertical-overlap", "diagonal-rule"}))
      ->group("");
  verify_cmd->add_flag("--json", as_json, "JSON output");

  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog names");
  catalog_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (g_cmd->parsed()) return run_g(io, method, shifted, as_json);
    if (tutte_cmd->parsed()) return run_tutte(io, order, as_json);
    if (info_cmd->parsed()) return run_info(io, as_json);
    if (del_cmd->parsed()) return run_delannoy(io, list, as_json);
    if (verify_cmd->parsed()) {
      if (fault == "vertical-overlap") vopt.rules.forbid_vertical_overlap = false;
      if (fault == "diagonal-rule") vopt.rules.diagonal_needs_north = false;
      vopt.include_catalog = !no_catalog;
      return run_verify(vopt, as_json);
    }
    if (catalog_cmd->parsed()) return run_catalog(as_json);
  } catch (const Error& e) {
    std::cerr << "gpoly: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "gpoly: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
