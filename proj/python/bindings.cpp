#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "gpoly/catalog.hpp"
#include "gpoly/decomposition.hpp"
#include "gpoly/error.hpp"
#include "gpoly/schubert.hpp"

namespace py = pybind11;
using namespace gpoly;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::list coeffs(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

std::vector<int> elements(ElementSet s) {
  std::vector<int> out;
  for (int e : s) out.push_back(e);
  return out;
}

Matroid from_bases(int n, const std::vector<std::vector<int>>& bases) { return Matroid::from_bases(n, bases); }

SchubertMatroid schubert(int n, const std::vector<int>& upper) { return SchubertMatroid::create(n, upper); }

Matroid from_spec(const std::string& text) { return as_matroid(realize(parse_matroid(text))); }

Matroid named(const std::string& name, const Params& params) {
  return as_matroid(realize(catalog_lookup(name, params)));
}

}  // namespace

PYBIND11_MODULE(_gpoly, m) {
  m.doc() = "Exact g-polynomials of matroids";
  py::register_exception<Error>(m, "GpolyError", PyExc_ValueError);

  m.def("g_polynomial", [](int n, const std::vector<std::vector<int>>& bases) {
    return coeffs(g_polynomial(from_bases(n, bases)));
  }, py::arg("n"), py::arg("bases"), "g of the matroid with the given bases, ascending coefficients");

  m.def("g_from_json", [](const std::string& text) { return coeffs(g_polynomial(from_spec(text))); },
        py::arg("text"), "g of a matroid given in the JSON input format");

  m.def("g_named", [](const std::string& name, const Params& params) {
    return coeffs(g_polynomial(named(name, params)));
  }, py::arg("name"), py::arg("params") = Params{}, "g of a catalog matroid");

  m.def("g_schubert", [](int n, const std::vector<int>& upper, const std::string& method) {
    const SchubertMatroid s = schubert(n, upper);
    if (method == "activities") return coeffs(is_loopless_coloopless(s) ? g_activities(s) : IntPolynomial{});
    if (method == "delannoy") {
      if (!is_loopless_coloopless(s)) throw Error(to_string(s) + " has loops or coloops");
      return coeffs(g_delannoy(s));
    }
    if (method == "decomposition") return coeffs(g_polynomial(sch_to_matroid(s)));
    throw Error("unknown method \"" + method + "\"");
  }, py::arg("n"), py::arg("upper"), py::arg("method") = "activities");

  m.def("g_uniform", [](int r, int n) { return coeffs(g_uniform(r, n)); }, py::arg("r"), py::arg("n"));

  m.def("shifted", [](const std::vector<std::string>& g) {
    std::vector<Integer> c;
    for (const auto& s : g) c.emplace_back(s);
    return coeffs(compose_shift(divide_by_t(IntPolynomial(std::move(c))), -1));
  }, py::arg("g"), "g~(t-1) from the coefficients of g = t g~ (coefficients as decimal strings)");

  m.def("delannoy_paths", [](int n, const std::vector<int>& upper) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_delannoy(schubert(n, upper))) out.push_back(p.word());
    return out;
  }, py::arg("n"), py::arg("upper"), "Admissible Delannoy path words in depth-first order");

  m.def("tutte", [](int n, const std::vector<std::vector<int>>& bases, std::optional<std::vector<int>> order) {
    const Matroid mat = from_bases(n, bases);
    const BivariatePolynomial t =
        order ? tutte(mat, ElementOrder::from_sequence(*order)) : tutte(mat);
    py::list rows;
    for (const auto& row : t.rows()) {
      py::list r;
      for (const auto& c : row) r.append(to_py(c));
      rows.append(r);
    }
    return rows;
  }, py::arg("n"), py::arg("bases"), py::arg("order") = std::nullopt,
     "Tutte coefficients; result[i][j] multiplies x^i y^j");

  m.def("beta", [](int n, const std::vector<std::vector<int>>& bases) { return beta(from_bases(n, bases)); },
        py::arg("n"), py::arg("bases"));

  m.def("cyclic_flats", [](int n, const std::vector<std::vector<int>>& bases) {
    std::vector<std::vector<int>> out;
    for (ElementSet f : cyclic_flats(from_bases(n, bases))) out.push_back(elements(f));
    return out;
  }, py::arg("n"), py::arg("bases"));

  m.def("decompose", [](int n, const std::vector<std::vector<int>>& bases) {
    py::list out;
    for (const auto& term : decompose(from_bases(n, bases))) {
      std::vector<std::vector<int>> flats;
      for (ElementSet f : term.chain.flats) flats.push_back(elements(f));
      py::dict d;
      d["flats"] = flats;
      d["ranks"] = term.chain.ranks;
      d["lambda"] = to_py(term.lambda);
      d["schubert"] = py::make_tuple(term.schubert.size(), term.schubert.upper_elements());
      d["g"] = coeffs(term.g);
      out.append(d);
    }
    return out;
  }, py::arg("n"), py::arg("bases"), "Chains of cyclic flats with their weights and Schubert g-polynomials");

  m.def("catalog_names", &catalog_names);

  m.def("catalog_bases", [](const std::string& name, const Params& params) {
    const Matroid mat = named(name, params);
    std::vector<std::vector<int>> out;
    for (ElementSet b : mat.bases()) out.push_back(elements(b));
    return py::make_tuple(mat.size(), out);
  }, py::arg("name"), py::arg("params") = Params{}, "(n, bases) of a catalog matroid");
}
