#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "oscar/linalg.hpp"
#include "oscar/solvers.hpp"

namespace oscar::io {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

// Vector files: one finite decimal per line, '#' comment lines allowed,
// LF or CRLF. Matrix files: CSV rows of finite decimals, optional '#' header
// lines. Both round-trip exactly in double precision.
Vec read_vector(const std::filesystem::path& path);
void write_vector(const std::filesystem::path& path, const Vec& v);
Mat read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Mat& A);

/// One benchmark grid cell.
struct BenchRow {
    std::string solver;
    std::string prox;
    std::uint64_t seed = 0;
    double time_s = 0.0;
    int iterations = 0;
    double mae = 0.0;
    double mse = 0.0;
};

inline constexpr const char* kBenchHeader = "solver,prox,seed,time_s,iterations,mae,mse";

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows);
void write_bench_json(const std::filesystem::path& path, const std::vector<BenchRow>& rows);

/// One length-sweep cell.
struct SweepRow {
    Eigen::Index n = 0;
    std::string solver;
    std::string prox;
    double time_s = 0.0;
    int iterations = 0;
    double mae = 0.0;
    double mse = 0.0;
};

inline constexpr const char* kSweepHeader = "n,solver,prox,time_s,iterations,mae,mse";

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);
void write_sweep_json(const std::filesystem::path& path, const std::vector<SweepRow>& rows);

/// Per-iteration trace: `iter,time_s,objective` plus `mae,mse` columns when
/// the run recorded them. Row count is iterations + 1.
void write_trace_csv(const std::filesystem::path& path, const SolverRun& run);

/// Prox micro-benchmark table: `n,apo_time_s,gpo_time_s,max_abs_diff`.
struct ProxBenchFileRow {
    Eigen::Index n = 0;
    double apo_time_s = 0.0;
    double gpo_time_s = 0.0;
    double max_abs_diff = 0.0;
};

inline constexpr const char* kProxBenchHeader = "n,apo_time_s,gpo_time_s,max_abs_diff";

void write_prox_bench_csv(const std::filesystem::path& path,
                          const std::vector<ProxBenchFileRow>& rows);
void write_prox_bench_json(const std::filesystem::path& path,
                           const std::vector<ProxBenchFileRow>& rows);

}  // namespace oscar::io
