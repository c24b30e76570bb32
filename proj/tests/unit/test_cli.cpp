#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "graphsig/cli.hpp"
#include "graphsig/io.hpp"
#include "graphsig/serialize.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = graphsig::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate and export the spectrum") {
    const fs::path dir = fresh_dir("graphsig_cli_spectrum");
    const std::string g = (dir / "ring.mtx").string();
    REQUIRE(run({"generate", "ring", "--n", "8", "--out", g}).code == 0);
    CHECK(fs::exists(g));
    CHECK(fs::exists(dir / "ring.coords.csv"));
    CHECK(fs::exists(g + ".manifest.json"));

    REQUIRE(run({"laplacian", g, "--out", (dir / "L.mtx").string()}).code == 0);
    const Eigen::MatrixXd L(graphsig::io::read_matrix_market(dir / "L.mtx"));
    CHECK(L(0, 0) == 2.0);
    CHECK(L.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-15);

    REQUIRE(run({"fourier", g}).code == 0);
    const Eigen::MatrixXd e = graphsig::io::read_csv(dir / "ring.eigenvalues.csv");
    REQUIRE(e.size() == 8);
    std::vector<double> closed;
    for (int k = 0; k < 8; ++k) closed.push_back(2.0 - 2.0 * std::cos(2.0 * M_PI * k / 8));
    std::sort(closed.begin(), closed.end());
    for (int k = 0; k < 8; ++k) CHECK(std::abs(e(k) - closed[k]) <= 1e-10);
    const Eigen::MatrixXd U = graphsig::io::read_csv(dir / "ring.basis.csv");
    CHECK((U.transpose() * U - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-10);
    const auto manifest = graphsig::read_json(dir / "ring.eigenvalues.csv.manifest.json");
    CHECK(manifest.at("command") == "fourier");
    CHECK(manifest.at("lmax").get<double>() == doctest::Approx(4.0));
  }

  TEST_CASE("filtering, denoising and plotting") {
    const fs::path dir = fresh_dir("graphsig_cli_filter");
    const std::string g = (dir / "s.mtx").string();
    REQUIRE(run({"generate", "sensor", "--n", "40", "--seed", "3", "--out", g}).code == 0);
    Eigen::MatrixXd f(40, 1);
    for (int i = 0; i < 40; ++i) f(i) = std::sin(0.3 * i);
    graphsig::io::write_csv(dir / "f.csv", f);
    const std::string sig = (dir / "f.csv").string();

    REQUIRE(run({"filter", g, "--signal", sig, "--design", "identity", "--method", "exact", "--out",
                 (dir / "id.csv").string()})
                .code == 0);
    CHECK((graphsig::io::read_csv(dir / "id.csv") - f).cwiseAbs().maxCoeff() <= 1e-12);

    REQUIRE(run({"filter", g, "--signal", sig, "--design", "itersine", "--filters", "4", "--save-bank",
                 (dir / "bank.json").string(), "--out", (dir / "c.csv").string()})
                .code == 0);
    CHECK(graphsig::io::read_csv(dir / "c.csv").cols() == 4);
    REQUIRE(run({"filter", g, "--signal", sig, "--bank", (dir / "bank.json").string(), "--out",
                 (dir / "c2.csv").string()})
                .code == 0);
    CHECK(graphsig::io::read_csv(dir / "c2.csv") == graphsig::io::read_csv(dir / "c.csv"));

    for (const std::string solver : {"tv", "tik", "wavelet", "bpdn"}) {
      const fs::path out = dir / ("den_" + solver + ".csv");
      const Outcome o = run({"denoise", g, "--signal", sig, "--solver", solver, "--out", out.string()});
      CHECK_MESSAGE(o.code == 0, solver << ": " << o.err);
      CHECK(graphsig::io::read_csv(out).rows() == 40);
      const auto m = graphsig::read_json(out.string() + ".manifest.json");
      CHECK(m.contains("report"));
    }

    REQUIRE(run({"plot", "graph", g, "--signal", sig, "--out", (dir / "g.svg").string()}).code == 0);
    REQUIRE(run({"plot", "graph", g, "--out", (dir / "g.dot").string()}).code == 0);
    REQUIRE(run({"plot", "filters", "--design", "mexican_hat", "--lmax", "2", "--out", (dir / "fb.svg").string()})
                .code == 0);
    CHECK(fs::file_size(dir / "g.svg") > 0);
    CHECK(fs::file_size(dir / "fb.svg") > 0);
  }

  TEST_CASE("pyramid round trip and replay") {
    const fs::path dir = fresh_dir("graphsig_cli_pyramid");
    const std::string g = (dir / "s.mtx").string();
    REQUIRE(run({"generate", "sensor", "--n", "64", "--seed", "1", "--out", g}).code == 0);
    Eigen::MatrixXd f(64, 1);
    for (int i = 0; i < 64; ++i) f(i) = std::cos(0.2 * i) + 0.01 * i;
    graphsig::io::write_csv(dir / "f.csv", f);
    const std::string pyr = (dir / "pyr").string();
    REQUIRE(run({"pyramid", "analyze", g, "--signal", (dir / "f.csv").string(), "--levels", "3", "--out", pyr})
                .code == 0);
    const std::string rec = (dir / "rec.csv").string();
    REQUIRE(run({"pyramid", "synthesize", g, "--in", pyr, "--out", rec, "--reference", (dir / "f.csv").string()})
                .code == 0);
    CHECK((graphsig::io::read_csv(rec) - f).cwiseAbs().maxCoeff() <= 1e-10);
    const auto m = graphsig::read_json(rec + ".manifest.json");
    CHECK(m.at("max_abs_diff").get<double>() <= 1e-10);

    const Outcome ok = run({"replay", pyr + ".manifest.json"});
    CHECK_MESSAGE(ok.code == 0, ok.err);
    CHECK(run({"replay", rec + ".manifest.json"}).code == 0);

    // Tamper with a recorded output: replay rewrites it and still matches.
    graphsig::io::write_csv(rec, f * 2.0);
    CHECK(run({"replay", rec + ".manifest.json"}).code == 0);

    // Tamper with the recorded hash instead.
    auto manifest = graphsig::read_json(rec + ".manifest.json");
    for (auto& [file, hash] : manifest.at("outputs").items()) hash = "0000000000000000";
    graphsig::write_json(dir / "tampered.json", manifest);
    CHECK(run({"replay", (dir / "tampered.json").string()}).code == 2);
  }

  TEST_CASE("explicit manifest path") {
    const fs::path dir = fresh_dir("graphsig_cli_manifest");
    const std::string m = (dir / "run.json").string();
    REQUIRE(run({"--manifest", m, "generate", "path", "--n", "5", "--out", (dir / "p.mtx").string()}).code == 0);
    const auto j = graphsig::read_json(m);
    CHECK(j.at("options").at("--n") == "5");
    CHECK(j.at("options").at("--seed") == "0");
    CHECK(j.at("outputs").size() == 2);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"generate", "ring"}).code == 1);
    const Outcome missing = run({"laplacian", "/nonexistent/graph.mtx"});
    CHECK(missing.code == 1);
    CHECK(missing.err.rfind("error: IoError", 0) == 0);

    const fs::path dir = fresh_dir("graphsig_cli_errors");
    const Outcome small = run({"generate", "ring", "--n", "2", "--out", (dir / "r.mtx").string()});
    CHECK(small.code == 2);
    CHECK(small.err.find("SizeTooSmall") != std::string::npos);

    REQUIRE(run({"generate", "ring", "--n", "6", "--out", (dir / "r.mtx").string()}).code == 0);
    graphsig::io::write_csv(dir / "short.csv", Eigen::MatrixXd::Ones(3, 1));
    const Outcome shape = run({"filter", (dir / "r.mtx").string(), "--signal", (dir / "short.csv").string(),
                               "--out", (dir / "o.csv").string()});
    CHECK(shape.code == 2);
    CHECK(shape.err.find("ShapeMismatch") != std::string::npos);
  }

  TEST_CASE("dense cap from the environment") {
    const fs::path dir = fresh_dir("graphsig_cli_cap");
    const std::string g = (dir / "r.mtx").string();
    REQUIRE(run({"generate", "ring", "--n", "20", "--out", g}).code == 0);
    setenv("GRAPHSIG_DENSE_CAP", "10", 1);
    const Outcome o = run({"fourier", g});
    unsetenv("GRAPHSIG_DENSE_CAP");
    CHECK(o.code == 2);
    CHECK(o.err.find("GraphTooLargeForDense") != std::string::npos);
  }
}
