#pragma once

// Matroid input files and the named-matroid catalog.
//
// A matroid file is a JSON object with exactly one of
//   "bases":    [[int...]...]  with "n"
//   "nonbases": [[int...]...]  with "n", "rank"
//   "schubert": {"n": int, "upper": [int...]}
//   "graph":    {"vertices": int, "edges": [[int,int]...]}
//   "name":     string         with optional "params": {"key": int, ...}
// and an optional "label" string. Elements and vertices are 1-based.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gpoly/matroid.hpp"
#include "gpoly/poly.hpp"
#include "gpoly/schubert.hpp"

namespace gpoly {

struct BasesSpec {
  int n = 0;
  std::vector<std::vector<int>> bases;
  friend bool operator==(const BasesSpec&, const BasesSpec&) = default;
};

struct NonbasesSpec {
  int n = 0;
  int rank = 0;
  std::vector<std::vector<int>> nonbases;
  friend bool operator==(const NonbasesSpec&, const NonbasesSpec&) = default;
};

struct SchubertSpec {
  int n = 0;
  std::vector<int> upper;
  friend bool operator==(const SchubertSpec&, const SchubertSpec&) = default;
};

struct GraphSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

using Params = std::map<std::string, long long>;

struct NamedSpec {
  std::string name;
  Params params;
  friend bool operator==(const NamedSpec&, const NamedSpec&) = default;
};

struct MatroidSpec {
  std::variant<BasesSpec, NonbasesSpec, SchubertSpec, GraphSpec, NamedSpec> form;
  std::optional<std::string> label;
  friend bool operator==(const MatroidSpec&, const MatroidSpec&) = default;
};

// Throws Error on malformed JSON, unknown keys, missing or conflicting
// variants, or out-of-range labels; the message names the offending field.
MatroidSpec parse_matroid(std::string_view text);
std::string serialize_matroid(const MatroidSpec& spec);

using RealizedMatroid = std::variant<Matroid, SchubertMatroid>;

// Builds the explicit matroid (Schubert input stays a SchubertMatroid).
RealizedMatroid realize(const MatroidSpec& spec);
Matroid as_matroid(const RealizedMatroid& m);

// "uniform" (params r, n) and "catalan" (param r) are constructed; every
// other name is read from the bundled data files.
MatroidSpec catalog_lookup(const std::string& name, const Params& params = {});
std::vector<std::string> catalog_names();

// Reference g-polynomials shipped with the catalog, keyed as "fano" or
// "catalan:r=4".
struct KnownG {
  std::string key;
  IntPolynomial g;
  IntPolynomial shifted;
};
std::vector<KnownG> known_g_values();

// "r=1,n=4" -> {{"n",4},{"r",1}}
Params parse_params(std::string_view text);

}  // namespace gpoly
