#include "oscar/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace oscar::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool skippable(const std::string& line) {
    const std::string t = trim(line);
    return t.empty() || t.front() == '#';
}

double parse_value(const std::string& token, const std::filesystem::path& path, long line) {
    const std::string t = trim(token);
    double value = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || t.empty()) {
        throw FileFormatError(path.string() + ":" + std::to_string(line) +
                                  ": cannot parse '" + t + "' as a number",
                              line);
    }
    if (!std::isfinite(value)) {
        throw FileFormatError(path.string() + ":" + std::to_string(line) +
                                  ": value is not finite",
                              line);
    }
    return value;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileFormatError("cannot open '" + path.string() + "' for reading", 0);
    }
    return in;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

Vec read_vector(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::vector<double> values;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (skippable(line)) {
            continue;
        }
        values.push_back(parse_value(line, path, line_no));
    }
    Vec v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = values[i];
    }
    return v;
}

void write_vector(const std::filesystem::path& path, const Vec& v) {
    std::ofstream out = open_out(path);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out << format_double(v[i]) << '\n';
    }
}

Mat read_matrix(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (skippable(line)) {
            continue;
        }
        std::vector<double> row;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(parse_value(cell, path, line_no));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw FileFormatError(path.string() + ":" + std::to_string(line_no) +
                                      ": expected " + std::to_string(rows.front().size()) +
                                      " columns, got " + std::to_string(row.size()),
                                  line_no);
        }
        rows.push_back(std::move(row));
    }
    const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index n = m > 0 ? static_cast<Eigen::Index>(rows.front().size()) : 0;
    Mat A(m, n);
    for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            A(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    return A;
}

void write_matrix(const std::filesystem::path& path, const Mat& A) {
    std::ofstream out = open_out(path);
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
        for (Eigen::Index c = 0; c < A.cols(); ++c) {
            if (c > 0) {
                out << ',';
            }
            out << format_double(A(r, c));
        }
        out << '\n';
    }
}

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
    std::ofstream out = open_out(path);
    out << kBenchHeader << '\n';
    for (const BenchRow& r : rows) {
        out << r.solver << ',' << r.prox << ',' << r.seed << ',' << format_double(r.time_s) << ','
            << r.iterations << ',' << format_double(r.mae) << ',' << format_double(r.mse) << '\n';
    }
}

void write_bench_json(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const BenchRow& r : rows) {
        doc.push_back({{"solver", r.solver},
                       {"prox", r.prox},
                       {"seed", r.seed},
                       {"time_s", r.time_s},
                       {"iterations", r.iterations},
                       {"mae", r.mae},
                       {"mse", r.mse}});
    }
    open_out(path) << doc.dump(2) << '\n';
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
    std::ofstream out = open_out(path);
    out << kSweepHeader << '\n';
    for (const SweepRow& r : rows) {
        out << r.n << ',' << r.solver << ',' << r.prox << ',' << format_double(r.time_s) << ','
            << r.iterations << ',' << format_double(r.mae) << ',' << format_double(r.mse) << '\n';
    }
}

void write_sweep_json(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        doc.push_back({{"n", r.n},
                       {"solver", r.solver},
                       {"prox", r.prox},
                       {"time_s", r.time_s},
                       {"iterations", r.iterations},
                       {"mae", r.mae},
                       {"mse", r.mse}});
    }
    open_out(path) << doc.dump(2) << '\n';
}

void write_trace_csv(const std::filesystem::path& path, const SolverRun& run) {
    std::ofstream out = open_out(path);
    const bool with_metrics = !run.mae_trace.empty();
    out << (with_metrics ? "iter,time_s,objective,mae,mse" : "iter,time_s,objective") << '\n';
    for (std::size_t i = 0; i < run.objective_trace.size(); ++i) {
        out << i << ',' << format_double(run.trace_time_s[i]) << ','
            << format_double(run.objective_trace[i]);
        if (with_metrics) {
            out << ',' << format_double(run.mae_trace[i]) << ','
                << format_double(run.mse_trace[i]);
        }
        out << '\n';
    }
}

void write_prox_bench_csv(const std::filesystem::path& path,
                          const std::vector<ProxBenchFileRow>& rows) {
    std::ofstream out = open_out(path);
    out << kProxBenchHeader << '\n';
    for (const ProxBenchFileRow& r : rows) {
        out << r.n << ',' << format_double(r.apo_time_s) << ',' << format_double(r.gpo_time_s)
            << ',' << format_double(r.max_abs_diff) << '\n';
    }
}

void write_prox_bench_json(const std::filesystem::path& path,
                           const std::vector<ProxBenchFileRow>& rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const ProxBenchFileRow& r : rows) {
        doc.push_back({{"n", r.n},
                       {"apo_time_s", r.apo_time_s},
                       {"gpo_time_s", r.gpo_time_s},
                       {"max_abs_diff", r.max_abs_diff}});
    }
    open_out(path) << doc.dump(2) << '\n';
}

}  // namespace oscar::io
