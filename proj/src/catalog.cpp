#include "gpoly/catalog.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>

#include <json.hpp>

#include "catalog_data.hpp"
#include "gpoly/error.hpp"

namespace gpoly {

using nlohmann::json;

namespace {

int get_int(const json& j, const std::string& field, long long lo = INT_MIN, long long hi = INT_MAX) {
  if (!j.is_number_integer()) throw Error(field + ": expected an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi) {
    throw Error(field + ": value " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                std::to_string(hi));
  }
  return static_cast<int>(v);
}

const json& get_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw Error(field + ": expected an array");
  return j;
}

// [[int...]...] with every entry in 1..n and no repeats within a set.
std::vector<std::vector<int>> get_set_list(const json& j, const std::string& field, int n) {
  std::vector<std::vector<int>> out;
  const auto& outer = get_array(j, field);
  for (std::size_t a = 0; a < outer.size(); ++a) {
    const std::string where = field + "[" + std::to_string(a) + "]";
    const auto& inner = get_array(outer[a], where);
    std::vector<int> set;
    for (std::size_t b = 0; b < inner.size(); ++b) {
      const std::string at = where + "[" + std::to_string(b) + "]";
      const int e = get_int(inner[b], at, 1, n);
      if (std::find(set.begin(), set.end(), e) != set.end()) {
        throw Error(at + ": element " + std::to_string(e) + " repeated");
      }
      set.push_back(e);
    }
    out.push_back(std::move(set));
  }
  return out;
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* k) { return item.key() == k; })) {
      throw Error(where + "unknown key \"" + item.key() + "\"");
    }
  }
}

void require(const json& obj, const char* key, const std::string& why) {
  if (!obj.contains(key)) throw Error(std::string("missing \"") + key + "\" (" + why + ")");
}

void forbid(const json& obj, const char* key, const std::string& why) {
  if (obj.contains(key)) throw Error(std::string("\"") + key + "\" not allowed " + why);
}

}  // namespace

MatroidSpec parse_matroid(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error("matroid file must be a JSON object");
  check_keys(root, "", {"label", "n", "bases", "rank", "nonbases", "schubert", "graph", "name", "params"});

  MatroidSpec spec;
  if (root.contains("label")) {
    if (!root["label"].is_string()) throw Error("label: expected a string");
    spec.label = root["label"].get<std::string>();
  }

  int variants = 0;
  for (const char* k : {"bases", "nonbases", "schubert", "graph", "name"}) variants += root.contains(k) ? 1 : 0;
  if (variants == 0) {
    throw Error("no matroid given: expected one of \"bases\", \"nonbases\", \"schubert\", \"graph\", \"name\"");
  }
  if (variants > 1) throw Error("more than one of \"bases\", \"nonbases\", \"schubert\", \"graph\", \"name\"");

  if (root.contains("bases")) {
    require(root, "n", "bases form");
    forbid(root, "rank", "with \"bases\"");
    forbid(root, "params", "with \"bases\"");
    BasesSpec b;
    b.n = get_int(root["n"], "n", 1, kMaxGroundSize);
    b.bases = get_set_list(root["bases"], "bases", b.n);
    spec.form = std::move(b);
  } else if (root.contains("nonbases")) {
    require(root, "n", "nonbases form");
    require(root, "rank", "nonbases form");
    forbid(root, "params", "with \"nonbases\"");
    NonbasesSpec nb;
    nb.n = get_int(root["n"], "n", 1, kMaxGroundSize);
    nb.rank = get_int(root["rank"], "rank", 0, nb.n);
    nb.nonbases = get_set_list(root["nonbases"], "nonbases", nb.n);
    for (std::size_t a = 0; a < nb.nonbases.size(); ++a) {
      if (static_cast<int>(nb.nonbases[a].size()) != nb.rank) {
        throw Error("nonbases[" + std::to_string(a) + "]: size differs from rank " + std::to_string(nb.rank));
      }
    }
    spec.form = std::move(nb);
  } else if (root.contains("schubert")) {
    for (const char* k : {"n", "rank", "params"}) forbid(root, k, "with \"schubert\"");
    const auto& s = root["schubert"];
    if (!s.is_object()) throw Error("schubert: expected an object");
    check_keys(s, "schubert: ", {"n", "upper"});
    require(s, "n", "schubert");
    require(s, "upper", "schubert");
    SchubertSpec ss;
    ss.n = get_int(s["n"], "schubert.n", 1, kMaxGroundSize);
    const auto& up = get_array(s["upper"], "schubert.upper");
    if (up.empty()) throw Error("schubert.upper: must be nonempty");
    for (std::size_t a = 0; a < up.size(); ++a) {
      const std::string at = "schubert.upper[" + std::to_string(a) + "]";
      const int e = get_int(up[a], at, 1, ss.n);
      if (std::find(ss.upper.begin(), ss.upper.end(), e) != ss.upper.end()) {
        throw Error(at + ": element " + std::to_string(e) + " repeated");
      }
      ss.upper.push_back(e);
    }
    spec.form = std::move(ss);
  } else if (root.contains("graph")) {
    for (const char* k : {"n", "rank", "params"}) forbid(root, k, "with \"graph\"");
    const auto& g = root["graph"];
    if (!g.is_object()) throw Error("graph: expected an object");
    check_keys(g, "graph: ", {"vertices", "edges"});
    require(g, "vertices", "graph");
    require(g, "edges", "graph");
    GraphSpec gs;
    gs.vertices = get_int(g["vertices"], "graph.vertices", 1, INT_MAX);
    const auto& edges = get_array(g["edges"], "graph.edges");
    if (edges.empty()) throw Error("graph.edges: must be nonempty");
    if (static_cast<int>(edges.size()) > kMaxGroundSize) {
      throw Error("graph.edges: more than " + std::to_string(kMaxGroundSize) + " edges");
    }
    for (std::size_t a = 0; a < edges.size(); ++a) {
      const std::string at = "graph.edges[" + std::to_string(a) + "]";
      if (!edges[a].is_array() || edges[a].size() != 2) throw Error(at + ": expected [u, v]");
      gs.edges.emplace_back(get_int(edges[a][0], at + "[0]", 1, gs.vertices),
                            get_int(edges[a][1], at + "[1]", 1, gs.vertices));
    }
    spec.form = std::move(gs);
  } else {
    for (const char* k : {"n", "rank"}) forbid(root, k, "with \"name\"");
    if (!root["name"].is_string()) throw Error("name: expected a string");
    NamedSpec ns;
    ns.name = root["name"].get<std::string>();
    if (root.contains("params")) {
      const auto& p = root["params"];
      if (!p.is_object()) throw Error("params: expected an object");
      for (const auto& item : p.items()) {
        ns.params[item.key()] = get_int(item.value(), "params." + item.key());
      }
    }
    spec.form = std::move(ns);
  }
  return spec;
}

std::string serialize_matroid(const MatroidSpec& spec) {
  json root = json::object();
  if (spec.label) root["label"] = *spec.label;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BasesSpec>) {
          root["n"] = f.n;
          root["bases"] = f.bases;
        } else if constexpr (std::is_same_v<T, NonbasesSpec>) {
          root["n"] = f.n;
          root["rank"] = f.rank;
          root["nonbases"] = f.nonbases;
        } else if constexpr (std::is_same_v<T, SchubertSpec>) {
          root["schubert"] = {{"n", f.n}, {"upper", f.upper}};
        } else if constexpr (std::is_same_v<T, GraphSpec>) {
          json edges = json::array();
          for (const auto& [u, v] : f.edges) edges.push_back({u, v});
          root["graph"] = {{"vertices", f.vertices}, {"edges", edges}};
        } else {
          root["name"] = f.name;
          if (!f.params.empty()) root["params"] = f.params;
        }
      },
      spec.form);
  return root.dump();
}

namespace {

std::vector<ElementSet> all_subsets_of_size(int n, int k) {
  std::vector<ElementSet> out;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < count; ++s) {
    if (std::popcount(s) == k) out.emplace_back(s);
  }
  return out;
}

Matroid realize_graph(const GraphSpec& g) {
  const int m = static_cast<int>(g.edges.size());
  // connectivity of the vertex set
  std::vector<int> parent(g.vertices + 1);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::iota(parent.begin(), parent.end(), 0);
  int pieces = g.vertices;
  for (const auto& [u, v] : g.edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --pieces;
    }
  }
  if (pieces != 1) throw Error("graph is not connected; spanning trees do not exist");

  std::vector<ElementSet> trees;
  for (ElementSet s : all_subsets_of_size(m, g.vertices - 1)) {
    std::iota(parent.begin(), parent.end(), 0);
    bool forest = true;
    for (int e : s) {
      const auto& [u, v] = g.edges[e - 1];
      const int a = find(u), b = find(v);
      if (a == b) {
        forest = false;
        break;
      }
      parent[a] = b;
    }
    if (forest) trees.push_back(s);
  }
  return Matroid::from_bases(m, std::move(trees), Validation::kSkip);
}

}  // namespace

RealizedMatroid realize(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& f) -> RealizedMatroid {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BasesSpec>) {
          return Matroid::from_bases(f.n, f.bases);
        } else if constexpr (std::is_same_v<T, NonbasesSpec>) {
          std::set<std::uint32_t> excluded;
          for (const auto& nb : f.nonbases) excluded.insert(ElementSet::from_elements(nb).bits());
          std::vector<ElementSet> bases;
          for (ElementSet s : all_subsets_of_size(f.n, f.rank)) {
            if (!excluded.count(s.bits())) bases.push_back(s);
          }
          if (bases.empty()) throw Error("nonbases exclude every " + std::to_string(f.rank) + "-subset");
          return Matroid::from_bases(f.n, std::move(bases));
        } else if constexpr (std::is_same_v<T, SchubertSpec>) {
          return SchubertMatroid::create(f.n, f.upper);
        } else if constexpr (std::is_same_v<T, GraphSpec>) {
          return realize_graph(f);
        } else {
          return realize(catalog_lookup(f.name, f.params));
        }
      },
      spec.form);
}

Matroid as_matroid(const RealizedMatroid& m) {
  if (const auto* s = std::get_if<SchubertMatroid>(&m)) return sch_to_matroid(*s);
  return std::get<Matroid>(m);
}

namespace {

long long param(const std::string& name, const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw Error("catalog entry \"" + name + "\" needs parameter " + key);
  return it->second;
}

void allow_params(const std::string& name, const Params& params, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : params) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      throw Error("catalog entry \"" + name + "\" takes no parameter " + k);
    }
  }
}

}  // namespace

MatroidSpec catalog_lookup(const std::string& name, const Params& params) {
  if (name == "uniform") {
    allow_params(name, params, {"r", "n"});
    const long long r = param(name, params, "r");
    const long long n = param(name, params, "n");
    if (n < 1 || n > kMaxGroundSize || r < 0 || r > n) {
      throw Error("uniform: need 0 <= r <= n and 1 <= n <= " + std::to_string(kMaxGroundSize));
    }
    MatroidSpec spec;
    spec.label = "U" + std::to_string(r) + "," + std::to_string(n);
    if (r == 0) {
      spec.form = BasesSpec{static_cast<int>(n), {{}}};
    } else {
      SchubertSpec s{static_cast<int>(n), {}};
      for (int k = 1; k <= r; ++k) s.upper.push_back(k);
      spec.form = std::move(s);
    }
    return spec;
  }
  if (name == "catalan") {
    allow_params(name, params, {"r"});
    const long long r = param(name, params, "r");
    if (r < 1 || 2 * r > kMaxGroundSize) throw Error("catalan: need 1 <= r <= " + std::to_string(kMaxGroundSize / 2));
    SchubertSpec s{static_cast<int>(2 * r), {}};
    for (int k = 0; k < r; ++k) s.upper.push_back(2 * k + 1);
    return MatroidSpec{std::move(s), "Cat" + std::to_string(r)};
  }
  for (const auto& file : detail::catalog_files()) {
    if (file.name != name) continue;
    allow_params(name, params, {});
    MatroidSpec spec = parse_matroid(file.text);
    if (std::holds_alternative<NamedSpec>(spec.form)) throw Error("catalog entry \"" + name + "\" is circular");
    return spec;
  }
  std::string names;
  for (const auto& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
  throw Error("unknown matroid name \"" + name + "\"; available: " + names);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out{"uniform", "catalan"};
  for (const auto& file : detail::catalog_files()) out.emplace_back(file.name);
  std::sort(out.begin() + 2, out.end());
  return out;
}

std::vector<KnownG> known_g_values() {
  const json root = json::parse(detail::known_g_text());
  auto poly = [](const json& arr) {
    std::vector<Integer> c;
    for (const auto& v : arr) c.emplace_back(v.get<long>());
    return IntPolynomial(std::move(c));
  };
  std::vector<KnownG> out;
  for (const auto& item : root.items()) {
    out.push_back({item.key(), poly(item.value().at("g")), poly(item.value().at("shifted"))});
  }
  return out;
}

Params parse_params(std::string_view text) {
  Params out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error("bad parameter \"" + std::string(item) + "\"; expected key=value");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    try {
      std::size_t used = 0;
      out[key] = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error("parameter " + key + ": \"" + value + "\" is not an integer");
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace gpoly
