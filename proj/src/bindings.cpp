#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uavpso/cost.hpp"
#include "uavpso/geometry.hpp"
#include "uavpso/oracle.hpp"
#include "uavpso/path.hpp"
#include "uavpso/pso.hpp"
#include "uavpso/report.hpp"
#include "uavpso/scenario.hpp"

namespace py = pybind11;
using namespace uavpso;

namespace {

ComplexityClass class_from_arg(const std::string& name) {
    const auto cls = complexity_from_name(name);
    if (!cls) {
        throw py::value_error("unknown complexity class '" + name + "'");
    }
    return *cls;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Threat-aware UAV route planning: PSO planner, grid oracle, scenario tools";

    py::register_exception<Error>(m, "PlanningError");

    py::class_<Point>(m, "Point")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
        .def("__repr__", [](const Point& p) {
            return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::enum_<ThreatKind>(m, "ThreatKind")
        .value("Radar", ThreatKind::Radar)
        .value("Artillery", ThreatKind::Artillery);

    py::class_<Threat>(m, "Threat")
        .def(py::init<Point, double, ThreatKind>(), py::arg("center"), py::arg("radius"),
             py::arg("kind") = ThreatKind::Radar)
        .def_readwrite("center", &Threat::center)
        .def_readwrite("radius", &Threat::radius)
        .def_readwrite("kind", &Threat::kind);

    py::class_<Bounds>(m, "Bounds")
        .def(py::init<double, double, double, double>(), py::arg("x_min"), py::arg("x_max"),
             py::arg("y_min"), py::arg("y_max"))
        .def_readwrite("x_min", &Bounds::x_min)
        .def_readwrite("x_max", &Bounds::x_max)
        .def_readwrite("y_min", &Bounds::y_min)
        .def_readwrite("y_max", &Bounds::y_max)
        .def("contains", &Bounds::contains);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("name", &Scenario::name)
        .def_readwrite("bounds", &Scenario::bounds)
        .def_readwrite("start", &Scenario::start)
        .def_readwrite("goal", &Scenario::goal)
        .def_readwrite("threats", &Scenario::threats);

    py::class_<Path>(m, "Path")
        .def(py::init<>())
        .def_readwrite("start", &Path::start)
        .def_readwrite("goal", &Path::goal)
        .def_readwrite("interior", &Path::interior)
        .def("vertex", &Path::vertex)
        .def_property_readonly("vertex_count", &Path::vertex_count);

    py::class_<EncodingSpec>(m, "EncodingSpec")
        .def(py::init<int, Bounds>(), py::arg("n_waypoints"), py::arg("bounds"))
        .def_readonly("n_waypoints", &EncodingSpec::n_waypoints)
        .def_readonly("bounds", &EncodingSpec::bounds)
        .def_property_readonly("dimension", &EncodingSpec::dimension);

    py::class_<CostWeights>(m, "CostWeights")
        .def(py::init<>())
        .def_readwrite("w_threat", &CostWeights::w_threat)
        .def_readwrite("w_bounds", &CostWeights::w_bounds)
        .def_readwrite("radar_multiplier", &CostWeights::radar_multiplier)
        .def_readwrite("artillery_multiplier", &CostWeights::artillery_multiplier);

    py::class_<CostBreakdown>(m, "CostBreakdown")
        .def_readonly("length", &CostBreakdown::length)
        .def_readonly("threat_violation", &CostBreakdown::threat_violation)
        .def_readonly("bounds_violation", &CostBreakdown::bounds_violation)
        .def_readonly("total", &CostBreakdown::total)
        .def_property_readonly("feasible", &CostBreakdown::feasible);

    py::class_<PsoConfig>(m, "PsoConfig")
        .def(py::init<>())
        .def_readwrite("swarm_size", &PsoConfig::swarm_size)
        .def_readwrite("iterations", &PsoConfig::iterations)
        .def_readwrite("inertia_w", &PsoConfig::inertia_w)
        .def_readwrite("cognitive_c1", &PsoConfig::cognitive_c1)
        .def_readwrite("social_c2", &PsoConfig::social_c2)
        .def_readwrite("v_max_fraction", &PsoConfig::v_max_fraction)
        .def_readwrite("seed", &PsoConfig::seed);

    py::class_<HistoryEntry>(m, "HistoryEntry")
        .def_readonly("iteration", &HistoryEntry::iteration)
        .def_readonly("best_total", &HistoryEntry::best_total)
        .def_readonly("best_length", &HistoryEntry::best_length);

    py::class_<RunReport>(m, "RunReport")
        .def_readonly("best_path", &RunReport::best_path)
        .def_readonly("best_breakdown", &RunReport::best_breakdown)
        .def_readonly("history", &RunReport::history)
        .def_readonly("feasible", &RunReport::feasible)
        .def_readonly("wall_time_seconds", &RunReport::wall_time_seconds);

    m.def("distance", &distance, py::arg("p"), py::arg("q"));
    m.def("segment_clearance", &segment_clearance, py::arg("a"), py::arg("b"), py::arg("threat"));
    m.def("segment_violation", &segment_violation, py::arg("a"), py::arg("b"), py::arg("threat"),
          py::arg("samples") = kDefaultSamples);
    m.def("path_length", &path_length, py::arg("path"));
    m.def(
        "decode",
        [](const std::vector<double>& position, const EncodingSpec& spec, Point start,
           Point goal) { return decode(position, spec, start, goal); },
        py::arg("position"), py::arg("spec"), py::arg("start"), py::arg("goal"));
    m.def("encode", &encode, py::arg("path"));

    m.def("evaluate", &evaluate, py::arg("path"), py::arg("scenario"),
          py::arg("weights") = CostWeights{}, py::arg("samples") = kDefaultSamples);

    m.def("parse_scenario",
          [](const std::string& text) { return parse_scenario(text); }, py::arg("text"));
    m.def("serialize_scenario", &serialize_scenario, py::arg("scenario"));
    m.def(
        "generate_scenario",
        [](const std::string& cls, std::uint64_t seed) {
            return generate_scenario(class_from_arg(cls), seed);
        },
        py::arg("complexity"), py::arg("seed"));

    m.def(
        "optimize",
        [](const Scenario& scenario, int waypoints, const PsoConfig& config,
           const CostWeights& weights, bool parallel) {
            const EncodingSpec spec(waypoints, scenario.bounds);
            return optimize(scenario, spec, config, weights,
                            parallel ? EvalMode::Parallel : EvalMode::Serial);
        },
        py::arg("scenario"), py::arg("waypoints") = kDefaultWaypoints,
        py::arg("config") = PsoConfig{}, py::arg("weights") = CostWeights{},
        py::arg("parallel") = false);

    m.def(
        "grid_shortest_path",
        [](const Scenario& scenario, double resolution) {
            const OracleResult result = grid_shortest_path(scenario, GridSpec{resolution});
            return py::make_tuple(result.path, result.length);
        },
        py::arg("scenario"), py::arg("resolution") = 0.5);
    m.def("octile_lower_bound", &octile_lower_bound, py::arg("start"), py::arg("goal"));

    m.def("render_svg", &render_svg, py::arg("scenario"), py::arg("path"));
    m.def("write_convergence_csv", &write_convergence_csv, py::arg("history"));
}
