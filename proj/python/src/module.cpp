#include "legcirc/error.hpp"
#include "legcirc/io.hpp"
#include "legcirc/render.hpp"
#include "legcirc/veronese.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace legcirc;

namespace {

// Anything whose str() parses as a rational: int, Fraction, "p/q".
Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

Vec4 to_vec(const py::handle& h) {
  const py::sequence s = py::reinterpret_borrow<py::sequence>(h);
  if (s.size() != 4) throw Error(ErrorCode::InvalidInput, "vectors need 4 entries");
  return Vec4{to_rational(s[0]), to_rational(s[1]), to_rational(s[2]), to_rational(s[3])};
}

py::tuple from_vec(const Vec4& v) {
  return py::make_tuple(to_fraction(v[0]), to_fraction(v[1]), to_fraction(v[2]), to_fraction(v[3]));
}

FlagTuple to_flags(const py::sequence& s) {
  FlagTuple out;
  for (const auto& f : s) {
    const py::sequence pair = py::reinterpret_borrow<py::sequence>(f);
    if (pair.size() != 2) throw Error(ErrorCode::InvalidInput, "flags are pairs (f1, f2)");
    out.emplace_back(to_vec(pair[0]), to_vec(pair[1]));
  }
  return out;
}

py::list from_flags(const FlagTuple& t) {
  py::list out;
  for (const auto& f : t) out.append(py::make_tuple(from_vec(f.f1()), from_vec(f.f2())));
  return out;
}

LegendrianPolygon make_polygon(const py::sequence& vertices, int sign) {
  std::vector<Vec4> vs;
  for (const auto& v : vertices) vs.push_back(to_vec(v));
  return LegendrianPolygon(std::move(vs), sign);
}

}  // namespace

PYBIND11_MODULE(_legcirc, m) {
  m.doc() = "Exact Legendrian polygons and co-oriented piecewise circular curves";

  py::register_exception<Error>(m, "LegcircError", PyExc_ValueError);

  py::class_<LegendrianPolygon>(m, "Polygon")
      .def(py::init(&make_polygon), py::arg("vertices"), py::arg("sign") = -1)
      .def_property_readonly("sign", &LegendrianPolygon::closing_sign)
      .def_property_readonly("vertices",
                             [](const LegendrianPolygon& p) {
                               py::list out;
                               for (const auto& v : p.vertices()) out.append(from_vec(v));
                               return out;
                             })
      .def("__len__", &LegendrianPolygon::size)
      .def("is_generic", &is_generic)
      .def("transversality", [](const LegendrianPolygon& p) { return std::string(to_string(transversality_class(p))); })
      .def("transversality_exhaustive",
           [](const LegendrianPolygon& p) { return std::string(to_string(transversality_class_exhaustive(p))); })
      .def("has_decreasing_curvature", &has_decreasing_curvature)
      .def("homotopy_class", [](const LegendrianPolygon& p) { return std::string(to_string(homotopy_class(p))); })
      .def("flags", [](const LegendrianPolygon& p) { return from_flags(polygon_to_flags(p)); })
      .def("translated",
           [](const LegendrianPolygon& p, const py::object& r) {
             return apply_symplectic(p, radial_translation_matrix(to_rational(r)));
           })
      .def("to_json", [](const LegendrianPolygon& p) { return dump(polygon_to_json(p)); })
      .def_static("from_json", [](const std::string& s) { return polygon_from_json(parse_json(s)); })
      .def("svg", &render_polygon);

  m.def("symplectic_product", [](const py::object& u, const py::object& v) {
    return to_fraction(symplectic_product(to_vec(u), to_vec(v)));
  });
  m.def("segment_pair_nonincident", [](const py::object& u1, const py::object& u2, const py::object& v1,
                                       const py::object& v2) {
    return segment_pair_nonincident(to_vec(u1), to_vec(u2), to_vec(v1), to_vec(v2));
  });
  m.def("sample_positive_tuple", [](std::size_t k, std::uint64_t seed) { return from_flags(sample_positive_tuple(k, seed)); },
        py::arg("k"), py::arg("seed"));
  m.def("tuple_positive", [](const py::sequence& t) { return tuple_positive(to_flags(t)); });
  m.def("flags_to_polygon", [](const py::sequence& t) { return flags_to_polygon(to_flags(t)); });
  m.def("parametrize_positive_triple", [](const py::object& x, const py::object& y) {
    return from_flags(parametrize_positive_triple(to_rational(x), to_rational(y)));
  });
  m.def("maslov_index", [](const py::sequence& circles) {
    if (circles.size() != 3) throw Error(ErrorCode::InvalidInput, "need 3 circles (a, b, c)");
    std::vector<Lagrangian> ls;
    for (const auto& c : circles) {
      const py::sequence abc = py::reinterpret_borrow<py::sequence>(c);
      ls.push_back(circle_to_lagrangian(to_rational(abc[0]), to_rational(abc[1]), to_rational(abc[2])));
    }
    return maslov_index(ls[0], ls[1], ls[2]);
  });
  m.def("osculating_circle", [](const py::object& t) {
    const CoorientedCircle c = osculating_circle(to_rational(t));
    if (!c.is_circle()) return py::object(py::none());
    return py::object(py::make_tuple(to_fraction(c.a), to_fraction(c.b), to_fraction(c.c)));
  });
}
