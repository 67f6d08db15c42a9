// Python surface of the latcross core: polynomials, path statistics, the
// valley encodings, the crossing-reducing maps, and the brute-force
// enumerations. Arrays and pairs travel as plain dicts mirroring the CLI's
// JSON schema.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latcross/errors.hpp"
#include "latcross/formulas.hpp"
#include "latcross/oracle.hpp"
#include "latcross/pair_arrays.hpp"
#include "latcross/paths.hpp"
#include "latcross/qtpoly.hpp"

namespace py = pybind11;
using namespace latcross;

namespace {

py::object big(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

using PyPoint = std::pair<int, int>;

Point to_point(const PyPoint& p) { return Point{p.first, p.second}; }
PyPoint from_point(const Point& p) { return {p.x, p.y}; }

const char* kind_name(CrossKind k) { return k == CrossKind::upward ? "upward" : "downward"; }

py::dict crossing_dict(const Crossing& c) {
  py::dict d;
  d["kind"] = kind_name(c.kind);
  d["vertex"] = from_point(c.vertex);
  d["index"] = c.index;
  return d;
}

py::dict array_dict(const TwoRowedArray& a) {
  py::dict d;
  d["bracket"] = a.bracket() == Bracket::XU_YV ? "XU_YV" : "XV_YU";
  d["x"] = a.x();
  d["y"] = a.y();
  d["u"] = a.u();
  d["v"] = a.v();
  d["c"] = a.c();
  d["d"] = a.d();
  return d;
}

TwoRowedArray dict_array(const py::dict& d) {
  const std::string br = py::cast<std::string>(d["bracket"]);
  if (br != "XU_YV" && br != "XV_YU")
    throw py::value_error("bracket must be XU_YV or XV_YU");
  return TwoRowedArray(py::cast<int>(d["x"]), py::cast<int>(d["y"]), py::cast<int>(d["u"]),
                       py::cast<int>(d["v"]), br == "XU_YV" ? Bracket::XU_YV : Bracket::XV_YU,
                       py::cast<std::vector<int>>(d["c"]), py::cast<std::vector<int>>(d["d"]));
}

py::dict pair_dict(const ArrayPair& ap) {
  py::dict d;
  d["first"] = array_dict(ap.first());
  d["second"] = array_dict(ap.second());
  return d;
}

ArrayPair dict_pair(const py::dict& d) {
  return ArrayPair(dict_array(py::cast<py::dict>(d["first"])),
                   dict_array(py::cast<py::dict>(d["second"])));
}

py::dict refined_map(const std::map<int, QTPoly>& m) {
  py::dict d;
  for (const auto& [r, p] : m) d[py::int_(r)] = p;
  return d;
}

}  // namespace

PYBIND11_MODULE(_latcross, m) {
  m.doc() = "exact enumeration of lattice paths by descents, major index and crossings";

  py::register_exception<Error>(m, "LatcrossError");

  py::class_<QTPoly>(m, "QTPoly")
      .def(py::init<>())
      .def_static("constant", [](long long c) { return QTPoly::constant(Int(c)); })
      .def_static("monomial",
                  [](long long c, int t, int q) { return QTPoly::monomial(Int(c), t, q); },
                  py::arg("c"), py::arg("t"), py::arg("q"))
      .def("add_term",
           [](QTPoly& p, long long c, int t, int q) { p.add_term(Int(c), t, q); },
           py::arg("c"), py::arg("t"), py::arg("q"))
      .def("is_zero", &QTPoly::is_zero)
      .def("coeff", [](const QTPoly& p, int t, int q) { return big(p.coeff(t, q)); },
           py::arg("t"), py::arg("q"))
      .def("terms",
           [](const QTPoly& p) {
             py::list out;
             for (const auto& [key, c] : p.terms())
               out.append(py::make_tuple(key.first, key.second, big(c)));
             return out;
           })
      .def("value_at_one", [](const QTPoly& p) { return big(p.value_at_one()); })
      .def("latex", &QTPoly::to_latex)
      .def("__str__", &QTPoly::to_text)
      .def("__repr__", [](const QTPoly& p) { return "QTPoly(" + p.to_text() + ")"; })
      .def("__eq__", [](const QTPoly& a, const QTPoly& b) { return a == b; }, py::is_operator())
      .def("__add__", [](const QTPoly& a, const QTPoly& b) { return a + b; })
      .def("__sub__", [](const QTPoly& a, const QTPoly& b) { return a - b; })
      .def("__mul__", [](const QTPoly& a, const QTPoly& b) { return a * b; });

  m.def("qbinom", &qbinom, py::arg("m"), py::arg("n"),
        "Gaussian binomial coefficient in q.");
  m.def("rectangle_poly", &lemma_qbin2, py::arg("a"), py::arg("b"),
        "Descents/major-index polynomial of all paths across an a x b rectangle.");

  m.def(
      "gpoly",
      [](int a, int b, int ell, int r) { return g_poly(LineQuery{a, b, ell, r}); },
      py::arg("a"), py::arg("b"), py::arg("ell"), py::arg("r"),
      "Polynomial of paths with a up and b down steps and at least r crossings of y = ell.");

  m.def(
      "hpoly",
      [](const PyPoint& a1, const PyPoint& a2, const PyPoint& bp, const PyPoint& bq, int r) {
        return h_poly(make_pair_query(to_point(a1), to_point(a2), to_point(bp), to_point(bq), r));
      },
      py::arg("a1"), py::arg("a2"), py::arg("bp"), py::arg("bq"), py::arg("r"),
      "Polynomial of path pairs a1 -> bp, a2 -> bq with at least r crossings.");

  m.def(
      "stats",
      [](const std::string& word, const PyPoint& start, bool ud, std::optional<int> line) {
        LatticePath p = parse_path(word, to_point(start));
        if (ud && !p.ud_view()) p = LatticePath(p.start(), p.steps(), true);
        if (line && !p.ud_view())
          throw py::value_error("line crossings need the up/down view (ud=True)");
        const PathStats s = path_stats(p);
        py::dict d;
        d["des"] = s.des;
        d["maj"] = s.maj;
        d["peaks"] = s.peaks;
        if (line) {
          py::list crs;
          for (const Crossing& c : line_crossings(p, *line)) crs.append(crossing_dict(c));
          d["crossings"] = crs;
        }
        return d;
      },
      py::arg("word"), py::arg("start") = PyPoint{0, 0}, py::arg("ud") = false,
      py::arg("line") = std::nullopt,
      "Descents, major index, peaks, and optionally the crossings of y = line.");

  m.def(
      "encode",
      [](const std::string& word, const PyPoint& start) {
        return array_dict(encode_path(parse_path(word, to_point(start))));
      },
      py::arg("word"), py::arg("start") = PyPoint{0, 0},
      "Valley encoding of an N/E path as a two-rowed array dict.");

  m.def(
      "decode",
      [](const py::dict& array) {
        const LatticePath p = decode_array(dict_array(array));
        py::dict d;
        d["start"] = from_point(p.start());
        d["word"] = p.word();
        return d;
      },
      py::arg("array"), "Path carried by a balanced XU_YV array dict.");

  m.def(
      "crossings",
      [](const py::dict& obj) {
        py::list out;
        if (obj.contains("first")) {
          for (const PairCrossing& c : pair_array_crossings(dict_pair(obj))) {
            py::dict d;
            d["kind"] = kind_name(c.kind);
            d["vertex"] = from_point(c.vertex);
            d["i"] = c.i;
            d["j"] = c.j;
            d["index"] = c.index;
            out.append(d);
          }
        } else {
          for (const ArrayCrossing& c : array_crossings(dict_array(obj))) {
            py::dict d;
            d["kind"] = kind_name(c.kind);
            d["on_top"] = c.on_top;
            d["i"] = c.i;
            d["value"] = c.value;
            d["index"] = c.index;
            out.append(d);
          }
        }
        return out;
      },
      py::arg("obj"), "Row-condition crossings of an array dict or a pair dict.");

  m.def(
      "apply_map",
      [](const std::string& name, const py::dict& obj, int r) -> py::dict {
        if (name == "alpha" || name == "beta" || name == "nu") {
          const TwoRowedArray a = dict_array(obj);
          if (name == "alpha") return array_dict(alpha(r, a));
          if (name == "beta") return array_dict(beta(r, a));
          return array_dict(nu(a));
        }
        if (name == "gamma" || name == "delta" || name == "sigma" || name == "gamma0") {
          const ArrayPair ap = dict_pair(obj);
          if (name == "gamma") return pair_dict(gamma(r, ap));
          if (name == "delta") return pair_dict(delta(r, ap));
          if (name == "sigma") return pair_dict(sigma(ap));
          return pair_dict(gamma0(ap));
        }
        throw py::value_error("unknown map: " + name);
      },
      py::arg("name"), py::arg("obj"), py::arg("r") = 0,
      "Apply alpha/beta/nu to an array dict or gamma/delta/sigma/gamma0 to a pair dict.");

  m.def(
      "oracle_g",
      [](int a, int b, int ell, int threads) { return refined_map(oracle_g(a, b, ell, threads)); },
      py::arg("a"), py::arg("b"), py::arg("ell"), py::arg("threads") = 1,
      "Brute-force refinement: r -> polynomial over paths with at least r crossings.");

  m.def(
      "oracle_h",
      [](const PyPoint& a1, const PyPoint& a2, const PyPoint& bp, const PyPoint& bq, int threads) {
        return refined_map(oracle_h(to_point(a1), to_point(a2), to_point(bp), to_point(bq), threads));
      },
      py::arg("a1"), py::arg("a2"), py::arg("bp"), py::arg("bq"), py::arg("threads") = 1,
      "Brute-force refinement over path pairs.");
}
