#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oscar/experiments.hpp"
#include "oscar/prox.hpp"
#include "oscar/solvers.hpp"

namespace py = pybind11;
using namespace oscar;

PYBIND11_MODULE(_core, m) {
    m.doc() = "OSCAR regularization: exact (GPO) and approximate (APO) proximity operators, "
              "proximal splitting solvers, and group-sparse recovery benchmarks.";

    py::class_<OscarParams>(m, "OscarParams")
        .def(py::init<double, double>(), py::arg("lambda1") = 0.0, py::arg("lambda2") = 0.0)
        .def_readwrite("lambda1", &OscarParams::lambda1)
        .def_readwrite("lambda2", &OscarParams::lambda2)
        .def("__repr__", [](const OscarParams& p) {
            return "OscarParams(lambda1=" + std::to_string(p.lambda1) +
                   ", lambda2=" + std::to_string(p.lambda2) + ")";
        });

    py::class_<Group>(m, "Group")
        .def_readonly("begin", &Group::begin)
        .def_readonly("end", &Group::end)
        .def_readonly("mean_magnitude", &Group::mean_magnitude)
        .def_readonly("mean_weight", &Group::mean_weight)
        .def("size", &Group::size);

    m.def("weight_vector",
          [](Eigen::Index n, const OscarParams& p) { return weight_vector(n, p).values; },
          py::arg("n"), py::arg("params"));
    m.def("soft_threshold", py::overload_cast<const Vec&, double>(&soft_threshold),
          py::arg("v"), py::arg("tau"));
    m.def("soft_threshold", py::overload_cast<const Vec&, const Vec&>(&soft_threshold),
          py::arg("v"), py::arg("tau"));
    m.def("group_and_average",
          [](const Vec& sorted_magnitudes, Eigen::Index n_hint, const OscarParams& p) {
              return group_and_average(sorted_magnitudes,
                                       weight_vector(n_hint, p)).groups;
          },
          py::arg("sorted_magnitudes"), py::arg("n"), py::arg("params"));
    m.def("oscar_gpo", &oscar_gpo, py::arg("v"), py::arg("params"));
    m.def("oscar_apo", &oscar_apo, py::arg("v"), py::arg("params"));
    m.def("apo_condition_holds", &apo_condition_holds, py::arg("v"), py::arg("params"));
    m.def("oscar_value", &oscar_value, py::arg("x"), py::arg("params"));
    m.def("oscar_value_pairwise", &oscar_value_pairwise, py::arg("x"), py::arg("params"));
    m.def("brute_force_prox_oracle", &brute_force_prox_oracle, py::arg("v"), py::arg("params"));
    m.def("spectral_norm_sq", &spectral_norm_sq, py::arg("A"), py::arg("tol") = 1e-6,
          py::arg("max_iter") = 2000, py::arg("seed") = kPowerIterationSeed);

    py::enum_<ProxStepKind>(m, "ProxStepKind")
        .value("GPO", ProxStepKind::GPO)
        .value("APO", ProxStepKind::APO);
    py::enum_<SolverKind>(m, "SolverKind")
        .value("FISTA", SolverKind::Fista)
        .value("TWIST", SolverKind::Twist)
        .value("SPARSA", SolverKind::Sparsa)
        .value("ADMM", SolverKind::Admm)
        .value("SBM", SolverKind::Sbm)
        .value("PADMM", SolverKind::Padmm);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("params", &SolverConfig::params)
        .def_readwrite("prox", &SolverConfig::prox)
        .def_readwrite("tol", &SolverConfig::tol)
        .def_readwrite("max_iter", &SolverConfig::max_iter)
        .def_readwrite("ground_truth", &SolverConfig::ground_truth)
        .def_property("lipschitz",
                      [](const SolverConfig& c) { return c.fista.lipschitz; },
                      [](SolverConfig& c, std::optional<double> L) {
                          c.fista.lipschitz = L;
                          c.twist.lipschitz = L;
                      })
        .def_property("mu",
                      [](const SolverConfig& c) { return c.admm.mu; },
                      [](SolverConfig& c, double mu) {
                          c.admm.mu = mu;
                          c.padmm.mu = mu;
                      });

    py::class_<SolverRun>(m, "SolverRun")
        .def_readonly("x_final", &SolverRun::x_final)
        .def_readonly("iterations", &SolverRun::iterations)
        .def_readonly("wall_time_s", &SolverRun::wall_time_s)
        .def_readonly("converged", &SolverRun::converged)
        .def_readonly("objective_trace", &SolverRun::objective_trace)
        .def_readonly("trace_time_s", &SolverRun::trace_time_s)
        .def_readonly("mae_trace", &SolverRun::mae_trace)
        .def_readonly("mse_trace", &SolverRun::mse_trace);

    m.def("objective", &objective, py::arg("x"), py::arg("A"), py::arg("y"), py::arg("params"));
    m.def("solve", &solve, py::arg("solver"), py::arg("A"), py::arg("y"), py::arg("config"));

    py::class_<ExperimentSpec>(m, "ExperimentSpec")
        .def(py::init<>())
        .def_readwrite("n", &ExperimentSpec::n)
        .def_readwrite("m", &ExperimentSpec::m)
        .def_readwrite("noise_sigma", &ExperimentSpec::noise_sigma)
        .def_readwrite("params", &ExperimentSpec::params)
        .def_readwrite("seed", &ExperimentSpec::seed);

    py::class_<TrialMetrics>(m, "TrialMetrics")
        .def_readonly("time_s", &TrialMetrics::time_s)
        .def_readonly("iterations", &TrialMetrics::iterations)
        .def_readonly("mae", &TrialMetrics::mae)
        .def_readonly("mse", &TrialMetrics::mse);

    py::class_<Instance>(m, "Instance")
        .def_readonly("x_true", &Instance::x_true)
        .def_readonly("A", &Instance::A)
        .def_readonly("y", &Instance::y);

    py::class_<ProxBenchRow>(m, "ProxBenchRow")
        .def_readonly("k", &ProxBenchRow::k)
        .def_readonly("n", &ProxBenchRow::n)
        .def_readonly("apo_time_s", &ProxBenchRow::apo_time_s)
        .def_readonly("gpo_time_s", &ProxBenchRow::gpo_time_s)
        .def_readonly("max_abs_diff", &ProxBenchRow::max_abs_diff);

    m.def("generate_signal", &generate_signal, py::arg("spec"));
    m.def("generate_sensing", &generate_sensing, py::arg("spec"));
    m.def("observe", &observe, py::arg("A"), py::arg("x"), py::arg("sigma"), py::arg("seed"));
    m.def("compute_metrics", &compute_metrics, py::arg("x_true"), py::arg("x_est"),
          py::arg("run"));
    m.def("make_instance", &make_instance, py::arg("spec"));
    m.def("default_prox_bench_params", &default_prox_bench_params, py::arg("k"));
    m.def("prox_speed_bench", &prox_speed_bench, py::arg("ks"),
          py::arg("params_rule") = std::function<OscarParams(int)>(default_prox_bench_params),
          py::arg("repetitions") = 5, py::arg("seed") = 1);
}
