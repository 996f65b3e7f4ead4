#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "roamgame/equilibrium.hpp"
#include "roamgame/fairness.hpp"
#include "roamgame/model.hpp"
#include "roamgame/sweep.hpp"

namespace py = pybind11;
using namespace roamgame;

namespace {

std::string table_to_string(const SweepTable& table, TableFormat format) {
  std::ostringstream out;
  export_table(table, out, format);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Two-provider cellular-pricing game with regulated roaming charges";

  py::enum_<Congestion>(m, "Congestion")
      .value("NONE", Congestion::None)
      .value("LINEAR", Congestion::Linear)
      .value("MM1", Congestion::MM1);

  py::enum_<Mode>(m, "Mode")
      .value("SIMPLIFIED", Mode::Simplified)
      .value("FULL", Mode::Full);

  py::class_<GameParams>(m, "GameParams")
      .def(py::init([](double delta, double d_max, double r, double b1,
                       double b2, double gamma, double cd1, double cd2,
                       double cb1, double cb2, Congestion congestion) {
             GameParams g{delta, d_max, r,   b1,  b2,       gamma,
                          cd1,   cd2,   cb1, cb2, congestion};
             g.validate();
             return g;
           }),
           py::arg("delta") = 1.0, py::arg("d_max") = 1.0, py::arg("r") = 0.0,
           py::arg("b1") = 10.0, py::arg("b2") = 1.0, py::arg("gamma") = 0.1,
           py::arg("cd1") = 0.0, py::arg("cd2") = 0.0, py::arg("cb1") = 0.0,
           py::arg("cb2") = 0.0, py::arg("congestion") = Congestion::None)
      .def_readwrite("delta", &GameParams::delta)
      .def_readwrite("d_max", &GameParams::d_max)
      .def_readwrite("r", &GameParams::r)
      .def_readwrite("b1", &GameParams::b1)
      .def_readwrite("b2", &GameParams::b2)
      .def_readwrite("gamma", &GameParams::gamma)
      .def_readwrite("cd1", &GameParams::cd1)
      .def_readwrite("cd2", &GameParams::cd2)
      .def_readwrite("cb1", &GameParams::cb1)
      .def_readwrite("cb2", &GameParams::cb2)
      .def_readwrite("congestion", &GameParams::congestion)
      .def("phi", &GameParams::phi)
      .def("validate", &GameParams::validate);

  py::class_<PricePair>(m, "PricePair")
      .def(py::init<double, double>(), py::arg("p1") = 0.0,
           py::arg("p2") = 0.0)
      .def_readwrite("p1", &PricePair::p1)
      .def_readwrite("p2", &PricePair::p2);

  py::class_<DemandPair>(m, "DemandPair")
      .def_readonly("d1", &DemandPair::d1)
      .def_readonly("d2", &DemandPair::d2);

  py::class_<UtilityPair>(m, "UtilityPair")
      .def_readonly("u1", &UtilityPair::u1)
      .def_readonly("u2", &UtilityPair::u2);

  py::class_<BestResponseResult>(m, "BestResponseResult")
      .def_readonly("price", &BestResponseResult::price)
      .def_readonly("utility", &BestResponseResult::utility)
      .def_readonly("bracket_lo", &BestResponseResult::bracket_lo)
      .def_readonly("bracket_hi", &BestResponseResult::bracket_hi)
      .def_readonly("iterations", &BestResponseResult::iterations);

  py::class_<EquilibriumResult>(m, "EquilibriumResult")
      .def_readonly("prices", &EquilibriumResult::prices)
      .def_readonly("utilities", &EquilibriumResult::utilities)
      .def_readonly("converged", &EquilibriumResult::converged)
      .def_readonly("iterations", &EquilibriumResult::iterations)
      .def_readonly("last_change", &EquilibriumResult::last_change)
      .def_readonly("interior", &EquilibriumResult::interior)
      .def_readonly("soc_ok", &EquilibriumResult::soc_ok);

  py::class_<FairnessResult>(m, "FairnessResult")
      .def_readonly("r_star", &FairnessResult::r_star)
      .def_readonly("gap_at_root", &FairnessResult::gap_at_root)
      .def_readonly("method", &FairnessResult::method)
      .def_readonly("bracket_lo", &FairnessResult::bracket_lo)
      .def_readonly("bracket_hi", &FairnessResult::bracket_hi);

  py::class_<SweepTable>(m, "SweepTable")
      .def_readonly("columns", &SweepTable::columns)
      .def_readonly("rows", &SweepTable::rows)
      .def_readonly("metadata", &SweepTable::metadata)
      .def("to_csv",
           [](const SweepTable& t) {
             return table_to_string(t, TableFormat::Csv);
           })
      .def("to_jsonl", [](const SweepTable& t) {
        return table_to_string(t, TableFormat::JsonLines);
      });

  m.def("congestion_factor", &congestion_factor, py::arg("d"), py::arg("b"),
        py::arg("gamma"), py::arg("model"));
  m.def("average_price", &average_price, py::arg("prices"), py::arg("params"));
  m.def("solve_demand", &solve_demand, py::arg("prices"), py::arg("params"));
  m.def("utilities_full", &utilities_full, py::arg("prices"),
        py::arg("params"));
  m.def("utilities_simplified", &utilities_simplified, py::arg("prices"),
        py::arg("params"));
  m.def("price_cap", &price_cap, py::arg("params"));
  m.def("best_response", &best_response, py::arg("provider"),
        py::arg("other_price"), py::arg("params"),
        py::arg("mode") = Mode::Simplified);
  m.def("closed_form_ne", &closed_form_ne, py::arg("params"));
  m.def(
      "solve_ne",
      [](const GameParams& params, Mode mode,
         std::optional<PricePair> init) {
        return init ? solve_ne(params, mode, *init) : solve_ne(params, mode);
      },
      py::arg("params"), py::arg("mode") = Mode::Simplified,
      py::arg("init") = py::none());
  m.def("fonc_residual", &fonc_residual, py::arg("prices"), py::arg("params"),
        py::arg("mode") = Mode::Simplified);
  m.def("fairness_gap", &fairness_gap, py::arg("r"), py::arg("params"),
        py::arg("mode") = Mode::Simplified);
  m.def("closed_form_rstar", &closed_form_rstar, py::arg("params"));
  m.def("find_rstar", &find_rstar, py::arg("params"),
        py::arg("mode") = Mode::Simplified);
  m.def("default_r_grid", &default_r_grid, py::arg("params"), py::arg("n"));
  m.def("sweep_utilities_vs_r", &sweep_utilities_vs_r, py::arg("params"),
        py::arg("r_grid"), py::arg("mode") = Mode::Simplified);
  m.def("sweep_best_response", &sweep_best_response, py::arg("params"),
        py::arg("price_grid"), py::arg("mode") = Mode::Simplified);
  m.def("estimate_crossing", &estimate_crossing, py::arg("table"));
}
