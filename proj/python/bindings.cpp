#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "geoburn/approx.hpp"
#include "geoburn/burning.hpp"
#include "geoburn/exact.hpp"
#include "geoburn/geometry.hpp"
#include "geoburn/instances.hpp"
#include "geoburn/render.hpp"
#include "geoburn/schedule_io.hpp"

namespace py = pybind11;
using namespace geoburn;

namespace {

Point point_from_tuple(const py::sequence& t) {
  if (py::len(t) != 2) throw py::value_error("a point needs exactly two coordinates");
  return {t[0].cast<double>(), t[1].cast<double>()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Burning number of planar point sets";

  py::register_exception<InvalidSchedule>(m, "InvalidSchedule", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Point>(m, "Point")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def(py::init(&point_from_tuple))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
      .def("__iter__", [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__repr__", [](const Point& p) { return "Point(" + py::repr(py::float_(p.x)).cast<std::string>() + ", " +
                                                   py::repr(py::float_(p.y)).cast<std::string>() + ")"; });
  py::implicitly_convertible<py::tuple, Point>();
  py::implicitly_convertible<py::list, Point>();

  py::class_<Circle>(m, "Circle")
      .def_readonly("center", &Circle::center)
      .def_readonly("radius", &Circle::radius)
      .def("contains", &Circle::contains, py::arg("p"), py::arg("tol") = kDistanceTolerance);

  py::class_<PointSet>(m, "PointSet")
      .def(py::init([](std::vector<Point> pts) { return PointSet(std::move(pts)); }), py::arg("points"))
      .def("__len__", &PointSet::size)
      .def("__getitem__", [](const PointSet& P, std::size_t i) {
        if (i >= P.size()) throw py::index_error();
        return P[i];
      })
      .def("__iter__", [](const PointSet& P) { return py::make_iterator(P.begin(), P.end()); }, py::keep_alive<0, 1>())
      .def("points", [](const PointSet& P) { return std::vector<Point>(P.begin(), P.end()); });
  py::implicitly_convertible<py::list, PointSet>();

  py::enum_<Model>(m, "Model").value("POINT", Model::Point).value("ANYWHERE", Model::Anywhere);
  py::enum_<Subsolver>(m, "Subsolver")
      .value("EXACT", Subsolver::Exact)
      .value("GREEDY", Subsolver::Greedy)
      .value("LOCAL_SEARCH", Subsolver::LocalSearch);

  py::class_<Schedule>(m, "Schedule")
      .def(py::init([](Model model, std::vector<Point> sources) { return Schedule{model, std::move(sources)}; }),
           py::arg("model"), py::arg("sources"))
      .def_readwrite("model", &Schedule::model)
      .def_readwrite("sources", &Schedule::sources);

  py::class_<BurnReport>(m, "BurnReport")
      .def_readonly("steps", &BurnReport::steps)
      .def_readonly("burned_at", &BurnReport::burned_at)
      .def_readonly("sources_started", &BurnReport::sources_started)
      .def_readonly("max_radius", &BurnReport::max_radius)
      .def("all_burned", &BurnReport::all_burned);

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("burning_number", &ExactResult::burning_number)
      .def_readonly("schedule", &ExactResult::schedule)
      .def_readonly("nodes_explored", &ExactResult::nodes_explored);

  py::class_<GuessRecord>(m, "GuessRecord")
      .def_readonly("delta", &GuessRecord::delta)
      .def_readonly("subsolution_size", &GuessRecord::subsolution_size)
      .def_readonly("accepted", &GuessRecord::accepted);

  py::class_<ApproxResult>(m, "ApproxResult")
      .def_readonly("schedule", &ApproxResult::schedule)
      .def_readonly("steps_used", &ApproxResult::steps_used)
      .def_readonly("guess_delta", &ApproxResult::guess_delta)
      .def_readonly("certified_ratio", &ApproxResult::certified_ratio)
      .def_readonly("trace", &ApproxResult::trace);

  m.def("smallest_enclosing_circle", [](const std::vector<Point>& pts) { return smallest_enclosing_circle(pts); },
        py::arg("points"));
  m.def("candidate_centers", &candidate_centers, py::arg("points"));

  m.def(
      "simulate",
      [](const PointSet& P, const Schedule& s, int max_steps, bool strict) {
        return simulate(P, s, max_steps, {.strict_sources = strict});
      },
      py::arg("points"), py::arg("schedule"), py::arg("max_steps"), py::arg("strict_sources") = false);
  m.def("covers", [](const PointSet& P, const std::vector<Point>& s, int b) { return covers(P, s, b); },
        py::arg("points"), py::arg("sources"), py::arg("b"));
  m.def("verify_schedule", &verify_schedule, py::arg("points"), py::arg("schedule"), py::arg("b"));

  m.def(
      "exact_burning",
      [](const PointSet& P, Model model, std::optional<int> b_max) -> std::optional<ExactResult> {
        py::gil_scoped_release release;
        const int cap = b_max.value_or(static_cast<int>(P.size()));
        return model == Model::Point ? exact_point_burning(P, cap) : exact_anywhere_burning(P, cap);
      },
      py::arg("points"), py::arg("model") = Model::Point, py::arg("b_max") = py::none());
  m.def(
      "approx_burning",
      [](const PointSet& P, Model model, double epsilon, Subsolver subsolver, bool early_stop, int swap_size) {
        const ApproxConfig cfg{epsilon, subsolver, early_stop, swap_size};
        py::gil_scoped_release release;
        return model == Model::Point ? approx_point_burning(P, cfg) : approx_anywhere_burning(P, cfg);
      },
      py::arg("points"), py::arg("model") = Model::Point, py::arg("epsilon") = 0.0,
      py::arg("subsolver") = Subsolver::Exact, py::arg("early_stop") = true, py::arg("swap_size") = 2);

  m.def("gen_uniform", &gen_uniform, py::arg("n"), py::arg("seed"), py::arg("box") = 4.0);
  m.def("gen_clustered", &gen_clustered, py::arg("n"), py::arg("clusters"), py::arg("seed"), py::arg("box") = 4.0,
        py::arg("spread") = 0.5);
  m.def("gen_grid", &gen_grid, py::arg("rows"), py::arg("cols"), py::arg("pitch") = 1.0);
  m.def("gen_path_forest", [](const std::vector<int>& lengths) { return gen_path_forest(lengths); },
        py::arg("path_lengths"));

  m.def("load", [](const std::filesystem::path& p) { return load(p).points; }, py::arg("path"));
  m.def("save", &save, py::arg("points"), py::arg("path"));
  m.def("load_schedule", &load_schedule, py::arg("path"), py::arg("fallback") = Model::Point);
  m.def("save_schedule", &save_schedule, py::arg("schedule"), py::arg("path"), py::arg("steps") = py::none());
  m.def("render_svg", &render_svg, py::arg("points"), py::arg("schedule"), py::arg("b"));
}
