#include "oscar/io.hpp"

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace oscar;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    TempDir() {
        path = fs::temp_directory_path() /
               ("oscarprox_io_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path path;
};

}  // namespace

TEST_CASE("vector files round-trip exactly") {
    TempDir dir;
    TestRng rng(1);
    const Vec v = rng.uniform_vector(200, -1e6, 1e6);
    const fs::path file = dir.path / "v.txt";
    io::write_vector(file, v);
    CHECK(io::read_vector(file) == v);

    // values that stress the shortest-round-trip formatting
    Vec tricky(5);
    tricky << 0.1, 1.0 / 3.0, -2.2250738585072014e-308, 1.7976931348623157e308, 0.0;
    io::write_vector(file, tricky);
    CHECK(io::read_vector(file) == tricky);
}

TEST_CASE("vector files accept comments, blanks and CRLF") {
    TempDir dir;
    const fs::path file = dir.path / "v.txt";
    std::ofstream(file) << "# header\r\n1.5\r\n\r\n# note\n-2\n3e-1\r\n";
    const Vec v = io::read_vector(file);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1.5);
    CHECK(v[1] == -2.0);
    CHECK(v[2] == 0.3);
}

TEST_CASE("vector parse errors carry line numbers") {
    TempDir dir;
    const fs::path file = dir.path / "bad.txt";
    std::ofstream(file) << "1.0\n2.0\nnot-a-number\n";
    try {
        io::read_vector(file);
        FAIL("expected FileFormatError");
    } catch (const FileFormatError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }

    std::ofstream(file) << "1.0\ninf\n";
    CHECK_THROWS_AS(io::read_vector(file), FileFormatError);
    CHECK_THROWS_AS(io::read_vector(dir.path / "missing.txt"), FileFormatError);
}

TEST_CASE("matrix files round-trip exactly and reject ragged rows") {
    TempDir dir;
    TestRng rng(2);
    Mat A(7, 5);
    for (Eigen::Index r = 0; r < 7; ++r) {
        for (Eigen::Index c = 0; c < 5; ++c) {
            A(r, c) = rng.uniform(-10.0, 10.0);
        }
    }
    const fs::path file = dir.path / "A.csv";
    io::write_matrix(file, A);
    CHECK(io::read_matrix(file) == A);

    std::ofstream(file) << "# m n\n1,2,3\n4,5\n";
    try {
        io::read_matrix(file);
        FAIL("expected FileFormatError");
    } catch (const FileFormatError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("bench CSV schema and JSON mirror") {
    TempDir dir;
    std::vector<io::BenchRow> rows = {
        {"fista", "gpo", 1, 0.25, 4, 0.337, 0.423},
        {"fista", "apo", 1, 0.125, 4, 0.337, 0.423},
    };
    const fs::path csv = dir.path / "bench.csv";
    io::write_bench_csv(csv, rows);

    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == io::kBenchHeader);
    int data_lines = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++data_lines;
        }
    }
    CHECK(data_lines == 2);

    const fs::path json_file = dir.path / "bench.json";
    io::write_bench_json(json_file, rows);
    std::ifstream jin(json_file);
    const nlohmann::json doc = nlohmann::json::parse(jin);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["solver"] == "fista");
    CHECK(doc[0]["mae"] == doctest::Approx(0.337));
    CHECK(doc[1]["prox"] == "apo");
}

TEST_CASE("trace CSV has one row per recorded iterate") {
    TempDir dir;
    SolverRun run;
    run.iterations = 2;
    run.objective_trace = {10.0, 4.0, 3.5};
    run.trace_time_s = {0.0, 0.1, 0.2};
    run.mae_trace = {1.0, 0.5, 0.4};
    run.mse_trace = {2.0, 0.7, 0.5};
    const fs::path file = dir.path / "trace.csv";
    io::write_trace_csv(file, run);

    std::ifstream in(file);
    std::string header;
    std::getline(in, header);
    CHECK(header == "iter,time_s,objective,mae,mse");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == run.iterations + 1);
}

TEST_CASE("prox bench and sweep writers") {
    TempDir dir;
    io::write_prox_bench_csv(dir.path / "pb.csv", {{200, 1e-5, 2e-5, 0.01}});
    std::ifstream in(dir.path / "pb.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == io::kProxBenchHeader);

    io::write_sweep_csv(dir.path / "sweep.csv", {{1000, "fista", "gpo", 0.5, 4, 0.3, 0.4}});
    std::ifstream sin(dir.path / "sweep.csv");
    std::getline(sin, header);
    CHECK(header == io::kSweepHeader);

    io::write_sweep_json(dir.path / "sweep.json", {{1000, "fista", "gpo", 0.5, 4, 0.3, 0.4}});
    std::ifstream jin(dir.path / "sweep.json");
    const nlohmann::json doc = nlohmann::json::parse(jin);
    CHECK(doc[0]["n"] == 1000);
}
