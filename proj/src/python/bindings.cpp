#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "copsim/cop.hpp"
#include "copsim/csv_io.hpp"
#include "copsim/errors.hpp"
#include "copsim/inconsistency.hpp"
#include "copsim/pcm.hpp"
#include "copsim/priority.hpp"
#include "copsim/simulator.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<double>> matrix_rows(const copsim::PCMatrix& m) {
  std::vector<std::vector<double>> rows(m.order());
  for (int i = 0; i < m.order(); ++i) {
    rows[i].resize(m.order());
    for (int j = 0; j < m.order(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_copsim, m) {
  m.doc() = "Pairwise comparison numerics and order-preservation simulation";

  py::register_exception<copsim::Error>(m, "CopsimError", PyExc_ValueError);

  py::enum_<copsim::DeltaScheme>(m, "DeltaScheme")
      .value("UNIFORM", copsim::DeltaScheme::uniform)
      .value("LOG_UNIFORM", copsim::DeltaScheme::log_uniform);

  py::enum_<copsim::Method>(m, "Method")
      .value("EV", copsim::Method::ev)
      .value("GM", copsim::Method::gm);

  py::class_<copsim::PCMatrix>(m, "PCMatrix")
      .def(py::init(&copsim::PCMatrix::from_rows), py::arg("rows"))
      .def_property_readonly("order", &copsim::PCMatrix::order)
      .def("rows", &matrix_rows)
      .def("__getitem__",
           [](const copsim::PCMatrix& self, std::pair<int, int> ij) {
             if (ij.first < 0 || ij.first >= self.order() || ij.second < 0 ||
                 ij.second >= self.order()) {
               throw py::index_error();
             }
             return self(ij.first, ij.second);
           })
      .def("__repr__", [](const copsim::PCMatrix& self) {
        return "PCMatrix(order=" + std::to_string(self.order()) + ")";
      });

  py::class_<copsim::DisturbanceSpec>(m, "DisturbanceSpec")
      .def(py::init<double, copsim::DeltaScheme>(), py::arg("gamma"),
           py::arg("scheme") = copsim::DeltaScheme::uniform)
      .def_readonly("gamma", &copsim::DisturbanceSpec::gamma)
      .def_readonly("scheme", &copsim::DisturbanceSpec::scheme);

  py::class_<copsim::PriorityVector>(m, "PriorityVector")
      .def_readonly("weights", &copsim::PriorityVector::weights)
      .def_readonly("method", &copsim::PriorityVector::method);

  py::class_<copsim::EigenResult>(m, "EigenResult")
      .def_readonly("lambda_max", &copsim::EigenResult::lambda_max)
      .def_readonly("vector", &copsim::EigenResult::vector)
      .def_readonly("iterations", &copsim::EigenResult::iterations)
      .def_readonly("residual", &copsim::EigenResult::residual);

  m.def("make_pcm", &copsim::PCMatrix::from_rows, py::arg("rows"),
        "Validate row-major entries and build a PCMatrix");
  m.def("consistency_defect", &copsim::consistency_defect, py::arg("matrix"));
  m.def(
      "generate_consistent",
      [](int order, std::uint64_t seed) {
        copsim::Rng rng(seed);
        auto [weights, matrix] = copsim::generate_consistent(order, rng);
        return py::make_tuple(weights.values, matrix);
      },
      py::arg("order"), py::arg("seed"),
      "Draw ground-truth weights on [1,9] and the consistent ratio matrix");
  m.def(
      "perturb",
      [](const copsim::PCMatrix& matrix, const copsim::DisturbanceSpec& spec,
         std::uint64_t seed) {
        copsim::Rng rng(seed);
        return copsim::perturb(matrix, spec, rng);
      },
      py::arg("matrix"), py::arg("spec"), py::arg("seed"));

  m.def("ev_weights", &copsim::ev_weights, py::arg("matrix"),
        py::arg("tol") = 1e-12, py::arg("max_iter") = 10000);
  m.def("gm_weights", &copsim::gm_weights, py::arg("matrix"));
  m.def("saaty_ci", &copsim::saaty_ci, py::arg("lambda_max"), py::arg("order"));
  m.def("koczkodaj_ki", &copsim::koczkodaj_ki, py::arg("matrix"));

  m.def(
      "pop_evaluate",
      [](const copsim::PCMatrix& matrix, const copsim::PriorityVector& w) {
        const auto counts = copsim::pop_evaluate(matrix, w);
        return py::make_tuple(counts.applicable, counts.satisfied);
      },
      py::arg("matrix"), py::arg("weights"));
  m.def(
      "poip_evaluate",
      [](const copsim::PCMatrix& matrix, const copsim::PriorityVector& w) {
        const auto counts = copsim::poip_evaluate(matrix, w);
        return py::make_tuple(counts.applicable, counts.satisfied);
      },
      py::arg("matrix"), py::arg("weights"));
  m.def("theorem1_count", &copsim::theorem1_count, py::arg("matrix"),
        py::arg("ki"));
  m.def("theorem2_count", &copsim::theorem2_count, py::arg("matrix"),
        py::arg("ki"), py::arg("restrict_to_poip_universe") = true);
  m.def("pop_condition_count", &copsim::pop_condition_count, py::arg("order"));
  m.def("poip_condition_count", &copsim::poip_condition_count,
        py::arg("order"));

  py::class_<copsim::ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("n_min", &copsim::ExperimentConfig::n_min)
      .def_readwrite("n_max", &copsim::ExperimentConfig::n_max)
      .def_readwrite("gamma_levels", &copsim::ExperimentConfig::gamma_levels)
      .def_readwrite("matrices_per_cell",
                     &copsim::ExperimentConfig::matrices_per_cell)
      .def_readwrite("delta_scheme", &copsim::ExperimentConfig::delta_scheme)
      .def_readwrite("master_seed", &copsim::ExperimentConfig::master_seed)
      .def_readwrite("ev_tol", &copsim::ExperimentConfig::ev_tol)
      .def_readwrite("ev_max_iter", &copsim::ExperimentConfig::ev_max_iter)
      .def_readwrite("ki_bin_width", &copsim::ExperimentConfig::ki_bin_width)
      .def_readwrite("force_theorem2",
                     &copsim::ExperimentConfig::force_theorem2)
      .def("total_matrices", &copsim::ExperimentConfig::total_matrices);

  py::class_<copsim::MatrixRecord>(m, "MatrixRecord")
      .def_readonly("n", &copsim::MatrixRecord::n)
      .def_readonly("gamma_index", &copsim::MatrixRecord::gamma_index)
      .def_readonly("gamma", &copsim::MatrixRecord::gamma)
      .def_readonly("replicate", &copsim::MatrixRecord::replicate)
      .def_readonly("seed", &copsim::MatrixRecord::seed)
      .def_readonly("lambda_max", &copsim::MatrixRecord::lambda_max)
      .def_readonly("ci", &copsim::MatrixRecord::ci)
      .def_readonly("ki", &copsim::MatrixRecord::ki)
      .def_readonly("pop_applicable", &copsim::MatrixRecord::pop_applicable)
      .def_readonly("pop_satisfied_ev",
                    &copsim::MatrixRecord::pop_satisfied_ev)
      .def_readonly("pop_satisfied_gm",
                    &copsim::MatrixRecord::pop_satisfied_gm)
      .def_readonly("poip_applicable", &copsim::MatrixRecord::poip_applicable)
      .def_readonly("poip_satisfied_ev",
                    &copsim::MatrixRecord::poip_satisfied_ev)
      .def_readonly("poip_satisfied_gm",
                    &copsim::MatrixRecord::poip_satisfied_gm)
      .def_readonly("th1_guaranteed", &copsim::MatrixRecord::th1_guaranteed)
      .def_readonly("th2_guaranteed", &copsim::MatrixRecord::th2_guaranteed);

  py::class_<copsim::AggregateRow>(m, "AggregateRow")
      .def_readonly("n", &copsim::AggregateRow::n)
      .def_readonly("high_ci", &copsim::AggregateRow::high_ci)
      .def_readonly("matrix_count", &copsim::AggregateRow::matrix_count)
      .def_readonly("pop_ev", &copsim::AggregateRow::pop_ev)
      .def_readonly("pop_gm", &copsim::AggregateRow::pop_gm)
      .def_readonly("poip_ev", &copsim::AggregateRow::poip_ev)
      .def_readonly("poip_gm", &copsim::AggregateRow::poip_gm)
      .def_readonly("poip_applicable_ev",
                    &copsim::AggregateRow::poip_applicable_ev)
      .def_readonly("poip_applicable_gm",
                    &copsim::AggregateRow::poip_applicable_gm)
      .def_readonly("th1_pct", &copsim::AggregateRow::th1_pct)
      .def_readonly("th2_pct", &copsim::AggregateRow::th2_pct);

  py::class_<copsim::KiBinPoint>(m, "KiBinPoint")
      .def_readonly("center", &copsim::KiBinPoint::center)
      .def_readonly("matrix_count", &copsim::KiBinPoint::matrix_count)
      .def_readonly("mean_pop_violations",
                    &copsim::KiBinPoint::mean_pop_violations)
      .def_readonly("mean_poip_violations",
                    &copsim::KiBinPoint::mean_poip_violations)
      .def_readonly("mean_th1_guaranteed",
                    &copsim::KiBinPoint::mean_th1_guaranteed)
      .def_readonly("mean_th2_guaranteed",
                    &copsim::KiBinPoint::mean_th2_guaranteed);

  py::class_<copsim::KiSeries>(m, "KiSeries")
      .def_readonly("n", &copsim::KiSeries::n)
      .def_readonly("method", &copsim::KiSeries::method)
      .def_readonly("points", &copsim::KiSeries::points);

  m.def(
      "run_experiment",
      [](const copsim::ExperimentConfig& config, int threads) {
        const auto result = copsim::run_experiment(config, threads);
        return py::make_tuple(result.records, result.failed_seeds);
      },
      py::arg("config"), py::arg("threads") = 0,
      "Run the Monte Carlo grid; returns (records, failed_seeds)");
  m.def(
      "simulate_cell",
      [](int n, int gamma_index, int replicate,
         const copsim::ExperimentConfig& config) {
        return copsim::simulate_cell(n, gamma_index, replicate, config);
      },
      py::arg("n"), py::arg("gamma_index"), py::arg("replicate"),
      py::arg("config"));
  m.def(
      "aggregate_tables",
      [](const std::vector<copsim::MatrixRecord>& records) {
        return copsim::aggregate_tables(records);
      },
      py::arg("records"));
  m.def(
      "bin_by_ki",
      [](const std::vector<copsim::MatrixRecord>& records, double width) {
        return copsim::bin_by_ki(records, width);
      },
      py::arg("records"), py::arg("bin_width"));
  m.def("gamma_level", &copsim::gamma_level, py::arg("index"),
        py::arg("levels"));
  m.def("child_seed", &copsim::child_seed, py::arg("master_seed"),
        py::arg("n"), py::arg("gamma_index"), py::arg("replicate"));
}
