#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mcgc/bounds.hpp"
#include "mcgc/cli.hpp"
#include "mcgc/constructions.hpp"
#include "mcgc/cross_product.hpp"
#include "mcgc/grid2d.hpp"
#include "mcgc/tracking.hpp"

namespace py = pybind11;
using namespace mcgc;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::int_(py::module_::import("builtins").attr("int")(v.str()));
}

py::dict report_dict(const DistinguishabilityReport& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["windows"] = r.windows;
  d["collision"] = r.collision ? py::cast(*r.collision) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiset combinatorial Gray codes";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::enum_<Mode>(m, "Mode").value("linear", Mode::linear).value("cyclic", Mode::cyclic);
  py::enum_<GridMode>(m, "GridMode")
      .value("plain", GridMode::plain)
      .value("cyclic", GridMode::cyclic);

  py::class_<ColorSequence>(m, "ColorSequence")
      .def(py::init<std::vector<Color>, std::size_t, Mode>(), py::arg("colors"),
           py::arg("k"), py::arg("mode") = Mode::cyclic)
      .def_property_readonly("k", &ColorSequence::palette_size)
      .def_property_readonly("mode", &ColorSequence::mode)
      .def("colors", [](const ColorSequence& s) {
        return std::vector<Color>(s.colors().begin(), s.colors().end());
      })
      .def("with_mode", &ColorSequence::with_mode)
      .def("__len__", &ColorSequence::size)
      .def("__getitem__", [](const ColorSequence& s, std::size_t i) {
        if (i >= s.size()) throw py::index_error();
        return s[i];
      })
      .def("__str__", &ColorSequence::str)
      .def("__eq__", [](const ColorSequence& a, const ColorSequence& b) { return a == b; });

  m.def("check_distinguishable",
        [](const ColorSequence& s, std::size_t w) { return report_dict(check_distinguishable(s, w)); },
        py::arg("seq"), py::arg("m"));
  m.def("t_cut", &t_cut, py::arg("seq"), py::arg("t"), py::arg("m"));
  m.def("build_m1", &build_m1, py::arg("k"));
  m.def("build_m2", &build_m2, py::arg("k"));
  m.def("build_m3", &build_m3, py::arg("k"));
  m.def("pad_with_new_colors", &pad_with_new_colors, py::arg("seq"), py::arg("m"),
        py::arg("new_colors"), py::arg("cut") = 0);
  m.def("brute_force_max_cyclic",
        [](std::size_t w, std::size_t k, std::size_t cap) {
          const auto r = brute_force_max_cyclic(w, k, cap);
          py::dict d;
          d["max_length"] = r.max_length;
          d["proven"] = r.proven;
          d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
          return d;
        },
        py::arg("m"), py::arg("k"), py::arg("cap"));

  m.def("multichoose", [](std::size_t k, std::size_t w) { return to_py(multichoose(k, w)); });
  m.def("upper_bound",
        [](std::size_t w, std::size_t k, bool cyclic) { return to_py(upper_bound(w, k, cyclic)); },
        py::arg("m"), py::arg("k"), py::arg("cyclic"));
  m.def("lower_bound", [](std::size_t w, std::size_t k) {
    const auto r = lower_bound(w, k);
    py::dict d;
    d["lower"] = to_py(r.lower);
    d["upper"] = to_py(r.upper);
    d["tight"] = r.tight;
    d["lower_source"] = r.lower_source;
    return d;
  });
  m.def("min_colors_1d", &min_colors_1d, py::arg("M"), py::arg("m"));
  m.def("coding_gain", &coding_gain, py::arg("M"), py::arg("N"), py::arg("m"), py::arg("n"));
  m.def("format_gain", &format_gain);

  m.def("cross",
        [](const ColorSequence& s, std::size_t m1, const ColorSequence& t, std::size_t m2) {
          return cross(s, m1, t, m2);
        });
  m.def("shift_palette", &shift_palette);
  m.def("compose_for_m", [](std::size_t w, std::size_t max_colors) {
    ComposeOptions o;
    o.max_colors = max_colors;
    return compose_for_m(w, o).sequence;
  }, py::arg("m"), py::arg("max_colors") = 24);

  py::class_<ColorGrid2D>(m, "ColorGrid2D")
      .def_property_readonly("rows", &ColorGrid2D::rows)
      .def_property_readonly("cols", &ColorGrid2D::cols)
      .def_property_readonly("k", &ColorGrid2D::palette_size)
      .def("at", &ColorGrid2D::at);
  m.def("product_grid",
        [](const ColorSequence& a, const ColorSequence& b) { return product_grid(a, b); });
  m.def("check_grid_distinguishable", [](const ColorGrid2D& g, std::size_t a, std::size_t b) {
    return check_grid_distinguishable(g, a, b).ok;
  });

  py::class_<Codebook>(m, "Codebook")
      .def("__len__", &Codebook::size)
      .def("decode", [](const Codebook& cb, std::vector<Color> reported) {
        const auto p = decode(cb, std::span<const Color>(reported));
        return std::make_pair(p.x, p.y);
      });
  m.def("build_codebook", &build_codebook);

  m.def("simulate_json",
        [](std::size_t cells, std::size_t w, std::size_t slots, std::size_t bits,
           std::uint64_t seed, const std::string& traj) {
          SimConfig c;
          c.cells = cells;
          c.m = w;
          c.slots = slots;
          c.bits = bits;
          c.seed = seed;
          parse_trajectory(traj, c);
          return report_json(run(c));
        },
        py::arg("cells"), py::arg("m"), py::arg("slots"), py::arg("bits"),
        py::arg("seed"), py::arg("traj") = "uniform");

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
