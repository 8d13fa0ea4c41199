#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oscar/experiments.hpp"
#include "oscar/io.hpp"
#include "oscar/prox.hpp"
#include "oscar/solvers.hpp"

namespace {

namespace fs = std::filesystem;
using namespace oscar;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

const std::vector<SolverKind> kAllSolvers = {SolverKind::Fista, SolverKind::Twist,
                                             SolverKind::Sparsa, SolverKind::Admm,
                                             SolverKind::Sbm,   SolverKind::Padmm};

// OSCAR_OUT_DIR redirects relative output paths; that is the only
// environment-variable knob.
fs::path resolve_out(const std::string& raw) {
    fs::path path(raw);
    if (const char* dir = std::getenv("OSCAR_OUT_DIR"); dir != nullptr && path.is_relative()) {
        return fs::path(dir) / path;
    }
    return path;
}

fs::path with_json_extension(const fs::path& csv_path) {
    fs::path p = csv_path;
    p.replace_extension(".json");
    return p;
}

struct ProxArgs {
    std::string input;
    std::string output;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::string prox = "gpo";
};

int run_prox(const ProxArgs& args) {
    const Vec v = io::read_vector(args.input);
    const OscarParams params{args.lambda1, args.lambda2};
    const auto kind = prox_kind_from_string(args.prox);
    if (!kind) {
        std::cerr << "unknown prox mode '" << args.prox << "'\n";
        return kExitUsage;
    }
    const Vec out = *kind == ProxStepKind::GPO ? oscar_gpo(v, params) : oscar_apo(v, params);
    io::write_vector(resolve_out(args.output), out);
    std::cout << "prox=" << args.prox << " n=" << v.size() << " nonzeros="
              << (out.array() != 0.0).count() << "\n";
    return kExitOk;
}

struct SolveArgs {
    std::string y_file;
    std::string a_file;
    std::string solver = "fista";
    std::string prox = "gpo";
    double lambda1 = 0.1;
    double lambda2 = 0.001;
    double tol = 0.01;
    int max_iter = 500;
    std::optional<double> mu;
    std::string out_file;
    std::string trace_file;
    std::string truth_file;
};

SolverConfig make_config(const std::string& prox, double lambda1, double lambda2, double tol,
                         int max_iter, std::optional<double> mu) {
    SolverConfig config;
    config.params = OscarParams{lambda1, lambda2};
    const auto kind = prox_kind_from_string(prox);
    if (!kind) {
        throw ParameterError("unknown prox mode '" + prox + "'");
    }
    config.prox = *kind;
    config.tol = tol;
    config.max_iter = max_iter;
    if (mu) {
        config.admm.mu = *mu;
        config.padmm.mu = *mu;
    }
    return config;
}

int run_solve(const SolveArgs& args) {
    const Vec y = io::read_vector(args.y_file);
    const Mat A = io::read_matrix(args.a_file);
    const auto solver = solver_kind_from_string(args.solver);
    if (!solver) {
        std::cerr << "unknown solver '" << args.solver << "'\n";
        return kExitUsage;
    }
    SolverConfig config =
        make_config(args.prox, args.lambda1, args.lambda2, args.tol, args.max_iter, args.mu);
    if (!args.truth_file.empty()) {
        config.ground_truth = io::read_vector(args.truth_file);
    }

    SolverRun run;
    try {
        run = solve(*solver, A, y, config);
    } catch (const StagnationError& e) {
        std::cerr << e.what() << "\n";
        io::write_vector(resolve_out(args.out_file), e.last_iterate());
        return kExitNoConvergence;
    } catch (const DivergenceError& e) {
        std::cerr << e.what() << "\n";
        io::write_vector(resolve_out(args.out_file), e.last_iterate());
        return kExitNoConvergence;
    }

    io::write_vector(resolve_out(args.out_file), run.x_final);
    if (!args.trace_file.empty()) {
        io::write_trace_csv(resolve_out(args.trace_file), run);
    }
    std::cout << "solver=" << args.solver << " prox=" << args.prox
              << " iterations=" << run.iterations << " converged=" << (run.converged ? 1 : 0)
              << " objective=" << io::format_double(run.objective_trace.back()) << "\n";
    return run.converged ? kExitOk : kExitNoConvergence;
}

struct BenchArgs {
    std::string out_file;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::string> solvers;
    std::string prox = "both";
    Eigen::Index n = 1000;
    Eigen::Index m = 500;
    double sigma = 0.4;
    double lambda1 = 0.1;
    double lambda2 = 0.001;
    double tol = 0.01;
    int max_iter = 500;
    std::optional<double> mu;
    std::string trace_dir;
    bool json = false;
};

std::vector<SolverKind> parse_solver_list(const std::vector<std::string>& names) {
    if (names.empty()) {
        return kAllSolvers;
    }
    std::vector<SolverKind> kinds;
    for (const std::string& name : names) {
        const auto kind = solver_kind_from_string(name);
        if (!kind) {
            throw ParameterError("unknown solver '" + name + "'");
        }
        kinds.push_back(*kind);
    }
    return kinds;
}

std::vector<ProxStepKind> parse_prox_list(const std::string& mode) {
    if (mode == "both") {
        return {ProxStepKind::GPO, ProxStepKind::APO};
    }
    const auto kind = prox_kind_from_string(mode);
    if (!kind) {
        throw ParameterError("unknown prox mode '" + mode + "'");
    }
    return {*kind};
}

// A failed cell still yields a row: metrics come from the error's last
// iterate and the failure goes to stderr.
io::BenchRow run_cell(const Instance& inst, SolverKind solver, ProxStepKind prox,
                      std::uint64_t seed, SolverConfig config) {
    config.prox = prox;
    config.ground_truth = inst.x_true;
    io::BenchRow row;
    row.solver = to_string(solver);
    row.prox = to_string(prox);
    row.seed = seed;
    SolverRun run;
    try {
        run = solve(solver, inst.A, inst.y, config);
    } catch (const StagnationError& e) {
        std::cerr << row.solver << "/" << row.prox << " seed " << seed << ": " << e.what() << "\n";
        const TrialMetrics m = compute_metrics(inst.x_true, e.last_iterate(), SolverRun{});
        row.iterations = e.iteration();
        row.mae = m.mae;
        row.mse = m.mse;
        return row;
    } catch (const DivergenceError& e) {
        std::cerr << row.solver << "/" << row.prox << " seed " << seed << ": " << e.what() << "\n";
        const TrialMetrics m = compute_metrics(inst.x_true, e.last_iterate(), SolverRun{});
        row.iterations = e.iteration();
        row.mae = m.mae;
        row.mse = m.mse;
        return row;
    }
    const TrialMetrics metrics = compute_metrics(inst.x_true, run.x_final, run);
    row.time_s = metrics.time_s;
    row.iterations = metrics.iterations;
    row.mae = metrics.mae;
    row.mse = metrics.mse;
    return row;
}

int run_bench(const BenchArgs& args) {
    if (args.seeds.empty()) {
        std::cerr << "bench requires at least one seed\n";
        return kExitUsage;
    }
    const std::vector<SolverKind> solvers = parse_solver_list(args.solvers);
    const std::vector<ProxStepKind> prox_kinds = parse_prox_list(args.prox);
    const SolverConfig base = make_config("gpo", args.lambda1, args.lambda2, args.tol,
                                          args.max_iter, args.mu);

    std::vector<io::BenchRow> rows;
    for (const std::uint64_t seed : args.seeds) {
        ExperimentSpec spec;
        spec.n = args.n;
        spec.m = args.m;
        spec.noise_sigma = args.sigma;
        spec.params = base.params;
        spec.seed = seed;
        const Instance inst = make_instance(spec);
        for (const SolverKind solver : solvers) {
            for (const ProxStepKind prox : prox_kinds) {
                SolverConfig config = base;
                config.prox = prox;
                config.ground_truth = inst.x_true;
                io::BenchRow row;
                if (args.trace_dir.empty()) {
                    row = run_cell(inst, solver, prox, seed, base);
                } else {
                    // rerun-free tracing: solve once, keep the run for the trace file
                    SolverRun run = solve(solver, inst.A, inst.y, config);
                    const TrialMetrics metrics = compute_metrics(inst.x_true, run.x_final, run);
                    row.solver = to_string(solver);
                    row.prox = to_string(prox);
                    row.seed = seed;
                    row.time_s = metrics.time_s;
                    row.iterations = metrics.iterations;
                    row.mae = metrics.mae;
                    row.mse = metrics.mse;
                    const fs::path dir = resolve_out(args.trace_dir);
                    fs::create_directories(dir);
                    io::write_trace_csv(dir / ("trace_" + row.solver + "_" + row.prox + "_seed" +
                                               std::to_string(seed) + ".csv"),
                                        run);
                }
                rows.push_back(row);
                std::cout << row.solver << "/" << row.prox << " seed " << seed
                          << " iterations=" << row.iterations
                          << " mae=" << io::format_double(row.mae) << "\n";
            }
        }
    }
    const fs::path out = resolve_out(args.out_file);
    io::write_bench_csv(out, rows);
    if (args.json) {
        io::write_bench_json(with_json_extension(out), rows);
    }
    return kExitOk;
}

struct ProxBenchArgs {
    std::string out_file;
    int k_max = 10;
    int reps = 5;
    std::uint64_t seed = 1;
    bool json = false;
};

int run_prox_bench(const ProxBenchArgs& args) {
    if (args.k_max < 1 || args.k_max > 12) {
        std::cerr << "--k-max must lie in 1..12\n";
        return kExitUsage;
    }
    std::vector<int> ks;
    for (int k = 1; k <= args.k_max; ++k) {
        ks.push_back(k);
    }
    const auto rows = prox_speed_bench(ks, default_prox_bench_params, args.reps, args.seed);
    std::vector<io::ProxBenchFileRow> file_rows;
    for (const ProxBenchRow& r : rows) {
        file_rows.push_back({r.n, r.apo_time_s, r.gpo_time_s, r.max_abs_diff});
        std::cout << "n=" << r.n << " apo=" << io::format_double(r.apo_time_s)
                  << "s gpo=" << io::format_double(r.gpo_time_s)
                  << "s max_abs_diff=" << io::format_double(r.max_abs_diff) << "\n";
    }
    const fs::path out = resolve_out(args.out_file);
    io::write_prox_bench_csv(out, file_rows);
    if (args.json) {
        io::write_prox_bench_json(with_json_extension(out), file_rows);
    }
    return kExitOk;
}

struct SweepArgs {
    std::string out_file;
    std::vector<Eigen::Index> n_list = {1000, 2000, 4000};
    double sigma = 0.4;
    double lambda1 = 0.1;
    double lambda2 = 0.001;
    double tol = 0.01;
    int max_iter = 500;
    std::optional<double> mu;
    std::uint64_t seed = 1;
    std::uint64_t max_bytes = 2ull << 30;  // dense-matrix budget
    bool json = false;
};

int run_sweep(const SweepArgs& args) {
    for (const Eigen::Index n : args.n_list) {
        if (n < 100) {
            std::cerr << "sweep requires every n >= 100\n";
            return kExitUsage;
        }
        const std::uint64_t bytes = static_cast<std::uint64_t>(n) * (n / 2) * sizeof(double);
        if (bytes > args.max_bytes) {
            std::cerr << "n=" << n << " needs " << bytes << " matrix bytes, over the budget of "
                      << args.max_bytes << "\n";
            return kExitUsage;
        }
    }
    const SolverConfig base = make_config("gpo", args.lambda1, args.lambda2, args.tol,
                                          args.max_iter, args.mu);
    std::vector<io::SweepRow> rows;
    for (const Eigen::Index n : args.n_list) {
        ExperimentSpec spec;
        spec.n = n;
        spec.m = n / 2;
        spec.noise_sigma = args.sigma;
        spec.params = base.params;
        spec.seed = args.seed;
        const Instance inst = make_instance(spec);
        for (const SolverKind solver : kAllSolvers) {
            for (const ProxStepKind prox : {ProxStepKind::GPO, ProxStepKind::APO}) {
                const io::BenchRow cell = run_cell(inst, solver, prox, args.seed, base);
                rows.push_back({n, cell.solver, cell.prox, cell.time_s, cell.iterations, cell.mae,
                                cell.mse});
                std::cout << "n=" << n << " " << cell.solver << "/" << cell.prox
                          << " time=" << io::format_double(cell.time_s) << "s\n";
            }
        }
    }
    const fs::path out = resolve_out(args.out_file);
    io::write_sweep_csv(out, rows);
    if (args.json) {
        io::write_sweep_json(with_json_extension(out), rows);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OSCAR regularization: proximity operators, solvers and recovery benchmarks"};
    app.require_subcommand(1);

    ProxArgs prox_args;
    CLI::App* prox_cmd = app.add_subcommand("prox", "Apply the GPO or APO to a vector file");
    prox_cmd->add_option("input", prox_args.input, "Input vector file")->required();
    prox_cmd->add_option("--out", prox_args.output, "Output vector file")->required();
    prox_cmd->add_option("--lambda1", prox_args.lambda1, "l1 weight")
        ->check(CLI::NonNegativeNumber);
    prox_cmd->add_option("--lambda2", prox_args.lambda2, "pairwise l-infinity weight")
        ->check(CLI::NonNegativeNumber);
    prox_cmd->add_option("--prox", prox_args.prox, "gpo or apo")
        ->check(CLI::IsMember({"gpo", "apo"}));

    SolveArgs solve_args;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve min 0.5||y - Ax||^2 + r_oscar(x)");
    solve_cmd->add_option("--y", solve_args.y_file, "Observation vector file")->required();
    solve_cmd->add_option("--A", solve_args.a_file, "Sensing matrix CSV file")->required();
    solve_cmd->add_option("--out", solve_args.out_file, "Estimate output file")->required();
    solve_cmd->add_option("--solver", solve_args.solver, "fista|twist|sparsa|admm|sbm|padmm");
    solve_cmd->add_option("--prox", solve_args.prox, "gpo or apo")
        ->check(CLI::IsMember({"gpo", "apo"}));
    solve_cmd->add_option("--lambda1", solve_args.lambda1, "l1 weight")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--lambda2", solve_args.lambda2, "pairwise l-infinity weight")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--tol", solve_args.tol, "relative-change stopping tolerance")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--max-iter", solve_args.max_iter, "iteration cap")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--mu", solve_args.mu, "ADMM/SBM/PADMM penalty");
    solve_cmd->add_option("--trace", solve_args.trace_file, "per-iteration trace CSV");
    solve_cmd->add_option("--truth", solve_args.truth_file,
                          "ground-truth vector file (adds mae/mse to the trace)");

    BenchArgs bench_args;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Run the solver x prox grid on generated instances");
    bench_cmd->add_option("--out", bench_args.out_file, "Results CSV file")->required();
    bench_cmd->add_option("--seeds", bench_args.seeds, "comma-separated seeds")->delimiter(',');
    bench_cmd->add_option("--solvers", bench_args.solvers, "subset of solvers")->delimiter(',');
    bench_cmd->add_option("--prox", bench_args.prox, "gpo, apo or both")
        ->check(CLI::IsMember({"gpo", "apo", "both"}));
    bench_cmd->add_option("--n", bench_args.n, "signal length")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--m", bench_args.m, "measurement count")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--sigma", bench_args.sigma, "noise standard deviation")
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--lambda1", bench_args.lambda1)->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--lambda2", bench_args.lambda2)->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--tol", bench_args.tol)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--max-iter", bench_args.max_iter)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--mu", bench_args.mu, "ADMM/SBM/PADMM penalty");
    bench_cmd->add_option("--trace-dir", bench_args.trace_dir, "directory for per-run traces");
    bench_cmd->add_flag("--json", bench_args.json, "also write a JSON mirror");

    ProxBenchArgs prox_bench_args;
    CLI::App* prox_bench_cmd =
        app.add_subcommand("prox-bench", "Time APO vs GPO at n = 100 * 2^k");
    prox_bench_cmd->add_option("--out", prox_bench_args.out_file, "Output CSV file")->required();
    prox_bench_cmd->add_option("--k-max", prox_bench_args.k_max, "largest k (1..12)");
    prox_bench_cmd->add_option("--reps", prox_bench_args.reps, "repetitions per timing")
        ->check(CLI::PositiveNumber);
    prox_bench_cmd->add_option("--seed", prox_bench_args.seed, "input seed");
    prox_bench_cmd->add_flag("--json", prox_bench_args.json, "also write a JSON mirror");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Time all twelve variants across signal lengths (m = n/2)");
    sweep_cmd->add_option("--out", sweep_args.out_file, "Output CSV file")->required();
    sweep_cmd->add_option("--n", sweep_args.n_list, "comma-separated signal lengths")
        ->delimiter(',');
    sweep_cmd->add_option("--sigma", sweep_args.sigma)->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--lambda1", sweep_args.lambda1)->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--lambda2", sweep_args.lambda2)->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--tol", sweep_args.tol)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--max-iter", sweep_args.max_iter)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--mu", sweep_args.mu, "ADMM/SBM/PADMM penalty");
    sweep_cmd->add_option("--seed", sweep_args.seed, "instance seed");
    sweep_cmd->add_option("--max-bytes", sweep_args.max_bytes, "dense-matrix byte budget");
    sweep_cmd->add_flag("--json", sweep_args.json, "also write a JSON mirror");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*prox_cmd) {
            return run_prox(prox_args);
        }
        if (*solve_cmd) {
            return run_solve(solve_args);
        }
        if (*bench_cmd) {
            return run_bench(bench_args);
        }
        if (*prox_bench_cmd) {
            return run_prox_bench(prox_bench_args);
        }
        if (*sweep_cmd) {
            return run_sweep(sweep_args);
        }
    } catch (const FileFormatError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
