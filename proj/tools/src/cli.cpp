#include "graphsig/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "graphsig/diff.hpp"
#include "graphsig/error.hpp"
#include "graphsig/filters.hpp"
#include "graphsig/generators.hpp"
#include "graphsig/graph.hpp"
#include "graphsig/io.hpp"
#include "graphsig/nn_graph.hpp"
#include "graphsig/optimize.hpp"
#include "graphsig/plot.hpp"
#include "graphsig/pyramid.hpp"
#include "graphsig/serialize.hpp"
#include "graphsig/spectral.hpp"

namespace graphsig::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string fnv1a(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + file.string() + "'");
  std::uint64_t h = 1469598103934665603ULL;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    h ^= static_cast<unsigned char>(*it);
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<fs::path> expand_outputs(const std::vector<fs::path>& outputs) {
  std::vector<fs::path> files;
  for (const auto& p : outputs) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> inner;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file()) inner.push_back(entry.path());
      std::sort(inner.begin(), inner.end());
      files.insert(files.end(), inner.begin(), inner.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

json output_hashes(const std::vector<fs::path>& outputs) {
  json j = json::object();
  for (const auto& f : expand_outputs(outputs)) j[f.string()] = fnv1a(f);
  return j;
}

// State shared by every command: resolved options, outputs and extra
// manifest fields.
struct Run {
  std::vector<std::string> argv;
  std::string command;
  CLI::App* sub = nullptr;
  std::string manifest_path;
  std::vector<fs::path> outputs;
  json extra = json::object();
  std::ostream* out = nullptr;

  void wrote(const fs::path& p) {
    outputs.push_back(p);
    *out << "wrote " << p.string() << '\n';
  }
};

json resolved_options(CLI::App* sub) {
  json j = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_name();
    if (name == "--help" || name == "-h") continue;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      if (res.size() == 1)
        j[name] = res.front();
      else
        j[name] = res;
    } else {
      j[name] = opt->get_default_str();
    }
  }
  return j;
}

void write_manifest(Run& run) {
  if (run.outputs.empty()) return;
  fs::path target = run.manifest_path;
  if (target.empty()) {
    fs::path primary = run.outputs.front();
    if (primary.has_filename() == false) primary = primary.parent_path();
    target = primary.string() + ".manifest.json";
  }
  json m;
  m["tool"] = "graphsig";
  m["version"] = kVersion;
  m["command"] = run.command;
  m["argv"] = run.argv;
  m["options"] = resolved_options(run.sub);
  m["dense_cap"] = default_dense_cap();
  m["outputs"] = output_hashes(run.outputs);
  for (const auto& [key, value] : run.extra.items()) m[key] = value;
  write_json(target, m);
  *run.out << "wrote " << target.string() << '\n';
}

// ----- shared option groups -----

struct GraphArgs {
  std::string path;
  std::string kind;
  std::string directed = "auto";

  void add(CLI::App* app, bool with_kind = true) {
    app->add_option("graph", path, "Graph weights (.mtx); a sibling .coords.csv is loaded when present")
        ->required();
    if (with_kind)
      app->add_option("--kind", kind,
                      "Laplacian: combinatorial, normalized, combinatorial-directed, degree-normalized, "
                      "distribution-normalized");
    app->add_option("--directed", directed, "auto, yes or no")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "yes", "no"}));
  }

  Graph load() const {
    GraphOptions opts;
    opts.directed = directed == "yes" ? Directedness::Directed
                    : directed == "no" ? Directedness::Undirected
                                       : Directedness::Auto;
    Graph g = io::read_graph(path, opts);
    if (!kind.empty()) g = g.with_laplacian(parse_laplacian_kind(kind));
    return g;
  }
};

struct DesignArgs {
  std::string design = "heat";
  double tau = 10.0;
  int scales = 4;
  int filters = 4;
  int degree = 3;
  double band = 0.5;
  std::string bank_file;
  std::string save_bank;

  void add(CLI::App* app) {
    app->add_option("--design", design,
                    "identity, heat, mexican_hat, itersine, regular_hp_lp, gabor, expwin or warped")
        ->capture_default_str()
        ->check(CLI::IsMember(
            {"identity", "heat", "mexican_hat", "itersine", "regular_hp_lp", "gabor", "expwin", "warped"}));
    app->add_option("--tau", tau, "Heat diffusion time")->capture_default_str();
    app->add_option("--scales", scales, "Mexican-hat band-pass scales")->capture_default_str();
    app->add_option("--filters", filters, "Kernel count for translate designs")->capture_default_str();
    app->add_option("--degree", degree, "Smoothing iterations of regular_hp_lp")->capture_default_str();
    app->add_option("--band", band, "expwin cutoff as a fraction of lmax")->capture_default_str();
    app->add_option("--bank", bank_file, "Load a saved filter bank (JSON) instead of --design");
    app->add_option("--save-bank", save_bank, "Write the bank descriptor as JSON");
  }

  FilterBank build(double lmax, const Graph* g) const {
    if (!bank_file.empty()) return bank_from_json(read_json(bank_file));
    if (design == "identity") return design_identity(lmax);
    if (design == "heat") return design_heat(lmax, tau);
    if (design == "mexican_hat") return design_mexican_hat(lmax, scales);
    if (design == "itersine") return design_itersine(lmax, filters);
    if (design == "regular_hp_lp") return design_regular_hp_lp(lmax, degree);
    if (design == "gabor") return design_gabor(lmax, filters);
    if (design == "expwin") return design_expwin(lmax, band);
    if (!g) throw Error(ErrorCode::BadParameter, "the warped design needs a graph");
    return warped_translates(*g, filters);
  }

  bool needs_spectrum() const { return bank_file.empty() && design == "warped"; }
};

struct MethodArgs {
  std::string method = "cheby";
  int order = 30;

  void add(CLI::App* app) {
    app->add_option("--method", method, "exact or cheby")
        ->capture_default_str()
        ->check(CLI::IsMember({"exact", "cheby"}));
    app->add_option("--order", order, "Chebyshev order")->capture_default_str()->check(CLI::PositiveNumber);
  }

  FilterMethod get() const { return method == "exact" ? FilterMethod::exact() : FilterMethod::chebyshev(order); }
  bool exact() const { return method == "exact"; }
};

Eigen::VectorXd single_column(const Eigen::MatrixXd& m, const std::string& what) {
  if (m.cols() != 1) throw Error(ErrorCode::ShapeMismatch, what + " must have exactly one column");
  return m.col(0);
}

std::string replace_suffix(const std::string& path, const std::string& suffix) {
  fs::path p(path);
  return (p.parent_path() / p.stem()).string() + suffix;
}

// ----- commands -----

struct GenerateCmd {
  std::string kind;
  int n = 64;
  double p = 0.1;
  std::uint64_t seed = 0;
  int rows = 8, cols = 8;
  int star = 8, tail = 8;
  std::vector<int> blocks;
  double p_in = 0.5, p_out = 0.01;
  int communities = 4;
  int k = 6;
  double noise = -1.0;
  std::string points;
  double sigma = 0.0;
  std::string out;

  void add(CLI::App* app) {
    app->add_option("kind", kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"ring", "path", "comet", "grid2d", "erdos_renyi", "sbm", "community", "sensor",
                               "swiss_roll", "two_moons", "knn"}));
    app->add_option("--n", n, "Vertex count")->capture_default_str();
    app->add_option("--p", p, "Edge probability (erdos_renyi)")->capture_default_str();
    app->add_option("--seed", seed, "Random seed")->capture_default_str();
    app->add_option("--rows", rows, "grid2d rows")->capture_default_str();
    app->add_option("--cols", cols, "grid2d columns")->capture_default_str();
    app->add_option("--star", star, "comet star degree")->capture_default_str();
    app->add_option("--tail", tail, "comet tail length")->capture_default_str();
    app->add_option("--blocks", blocks, "sbm block sizes")->delimiter(',');
    app->add_option("--p-in", p_in, "Within-block probability")->capture_default_str();
    app->add_option("--p-out", p_out, "Between-block probability")->capture_default_str();
    app->add_option("--communities", communities, "community block count")->capture_default_str();
    app->add_option("--k", k, "Nearest neighbours")->capture_default_str();
    app->add_option("--noise", noise, "Point noise (swiss_roll, two_moons); generator default when negative")
        ->capture_default_str();
    app->add_option("--points", points, "Point cloud CSV (knn)");
    app->add_option("--sigma", sigma, "Kernel width (knn); automatic when 0")->capture_default_str();
    app->add_option("--out", out, "Output .mtx")->required();
  }

  void execute(Run& run) const {
    Graph g = make();
    io::write_graph(out, g);
    run.wrote(out);
    if (g.coords()) run.wrote(io::coords_path_for(out));
    run.extra["N"] = g.N();
    run.extra["Ne"] = g.Ne();
  }

  Graph make() const {
    if (kind == "ring") return ring(n);
    if (kind == "path") return path(n);
    if (kind == "comet") return comet(star, tail);
    if (kind == "grid2d") return grid2d(rows, cols);
    if (kind == "erdos_renyi") return erdos_renyi(n, p, seed);
    if (kind == "sbm") {
      if (blocks.empty()) throw Error(ErrorCode::BlockSizeMismatch, "--blocks is required for sbm");
      return stochastic_block_model(blocks, p_in, p_out, seed);
    }
    if (kind == "community") return community(n, seed, CommunityParams{communities, p_in, p_out});
    if (kind == "sensor") return sensor(n, seed, k);
    if (kind == "swiss_roll") {
      SwissRollParams sp;
      sp.k = k;
      if (noise >= 0.0) sp.noise = noise;
      return swiss_roll(n, seed, sp);
    }
    if (kind == "two_moons") {
      TwoMoonsParams tp;
      tp.k = k;
      if (noise >= 0.0) tp.noise = noise;
      return two_moons(n, seed, tp);
    }
    if (points.empty()) throw Error(ErrorCode::BadParameter, "--points is required for knn");
    NnGraphOptions opts;
    opts.strategy = Knn{k};
    if (sigma > 0.0) opts.sigma = sigma;
    opts.name = fs::path(points).stem().string();
    return nn_graph(io::read_csv(points), opts);
  }
};

struct LaplacianCmd {
  GraphArgs graph;
  std::string out;
  std::string eigenvalues;

  void add(CLI::App* app) {
    graph.add(app);
    app->add_option("--out", out, "Write the Laplacian as .mtx");
    app->add_option("--eigenvalues", eigenvalues,
                    "Eigenvalue CSV (default: <graph>.eigenvalues.csv when --out is not given)");
  }

  void execute(Run& run) const {
    const Graph g = graph.load();
    run.extra["N"] = g.N();
    run.extra["kind"] = laplacian_kind_name(g.lap_kind());
    std::string evals = eigenvalues;
    if (out.empty() && evals.empty()) evals = replace_suffix(graph.path, ".eigenvalues.csv");
    if (!out.empty()) {
      io::write_matrix_market(out, g.L());
      run.wrote(out);
    }
    if (!evals.empty()) {
      const auto sd = compute_fourier_basis(g);
      io::write_csv(evals, sd->e);
      run.wrote(evals);
      run.extra["lmax"] = sd->lmax;
    }
  }
};

struct FourierCmd {
  GraphArgs graph;
  std::string eigenvalues;
  std::string basis;

  void add(CLI::App* app) {
    graph.add(app);
    app->add_option("--eigenvalues", eigenvalues, "Eigenvalue CSV (default: <graph>.eigenvalues.csv)");
    app->add_option("--basis", basis, "Eigenvector CSV, one column per eigenvalue (default: <graph>.basis.csv)");
  }

  void execute(Run& run) const {
    const Graph g = graph.load();
    const auto sd = compute_fourier_basis(g);
    const std::string e_path = eigenvalues.empty() ? replace_suffix(graph.path, ".eigenvalues.csv") : eigenvalues;
    const std::string u_path = basis.empty() ? replace_suffix(graph.path, ".basis.csv") : basis;
    io::write_csv(e_path, sd->e);
    run.wrote(e_path);
    io::write_csv(u_path, sd->U);
    run.wrote(u_path);
    run.extra["lmax"] = sd->lmax;
    run.extra["mu"] = sd->mu;
  }
};

struct FilterCmd {
  GraphArgs graph;
  DesignArgs design;
  MethodArgs method;
  std::string signal;
  std::string out;
  bool synthesis = false;

  void add(CLI::App* app) {
    graph.add(app);
    design.add(app);
    method.add(app);
    app->add_option("--signal", signal, "Input CSV (N rows)")->required();
    app->add_option("--out", out, "Output CSV")->required();
    app->add_flag("--synthesis", synthesis, "Treat the input as coefficients and synthesize");
  }

  void execute(Run& run) const {
    const Graph g = graph.load();
    if (method.exact() || design.needs_spectrum()) compute_fourier_basis(g);
    const double lmax = graph_lmax(g);
    const FilterBank fb = design.build(lmax, &g);
    const Eigen::MatrixXd input = io::read_csv(signal);
    const Eigen::MatrixXd result = synthesis ? filter_synthesis(g, fb, input, method.get())
                                             : filter_analysis(g, fb, input, method.get());
    io::write_csv(out, result);
    run.wrote(out);
    if (!design.save_bank.empty()) {
      write_json(design.save_bank, bank_to_json(fb));
      run.wrote(design.save_bank);
    }
    run.extra["lmax"] = lmax;
    run.extra["filters"] = fb.size();
    run.extra["bank"] = descriptor_to_json(fb.descriptor());
  }
};

struct PyramidAnalyzeCmd {
  GraphArgs graph;
  std::string signal;
  int levels = 3;
  double alpha = 1.0;
  double epsilon = 0.005;
  std::string out;

  void add(CLI::App* app) {
    graph.add(app, false);
    app->add_option("--signal", signal, "Input CSV (one column)")->required();
    app->add_option("--levels", levels, "Number of reductions")->capture_default_str();
    app->add_option("--alpha", alpha, "Level smoothing strength")->capture_default_str();
    app->add_option("--epsilon", epsilon, "Interpolation regularizer")->capture_default_str();
    app->add_option("--out", out, "Output directory")->required();
  }

  void execute(Run& run) const {
    const Graph g = graph.load().with_laplacian(LaplacianKind::CombinatorialU);
    const Eigen::VectorXd f = single_column(io::read_csv(signal), "signal");
    const Multiresolution mr = graph_multiresolution(g, levels, {alpha, epsilon});
    const Pyramid pyr = pyramid_analysis(mr, f);
    write_pyramid(out, mr, pyr);
    run.wrote(out);
    json sizes = json::array();
    for (const auto& level : mr.levels) sizes.push_back(level.graph.N());
    run.extra["level_sizes"] = sizes;
  }
};

struct PyramidSynthesizeCmd {
  GraphArgs graph;
  std::string in;
  std::string out;
  std::string reference;

  void add(CLI::App* app) {
    graph.add(app, false);
    app->add_option("--in", in, "Pyramid directory")->required();
    app->add_option("--out", out, "Reconstructed signal CSV")->required();
    app->add_option("--reference", reference, "Original signal; max_abs_diff goes to the manifest");
  }

  void execute(Run& run) const {
    const Graph g = graph.load().with_laplacian(LaplacianKind::CombinatorialU);
    const PyramidArchive archive = read_pyramid(in);
    const Multiresolution mr = multiresolution_from_kept(g, archive.kept, archive.params);
    const Eigen::VectorXd rec = pyramid_synthesis(mr, archive.pyramid);
    io::write_csv(out, rec);
    run.wrote(out);
    if (!reference.empty()) {
      const Eigen::VectorXd ref = single_column(io::read_csv(reference), "reference");
      if (ref.size() != rec.size()) throw Error(ErrorCode::ShapeMismatch, "reference length differs");
      run.extra["max_abs_diff"] = (ref - rec).lpNorm<Eigen::Infinity>();
    }
  }
};

struct DenoiseCmd {
  GraphArgs graph;
  MethodArgs method;
  std::string signal;
  std::string solver = "tik";
  double gamma = 1.0;
  double tau = 0.1;
  double lambda = 0.1;
  int filters = 4;
  std::string mask;
  int max_iter = 1000;
  double tol = 1e-6;
  std::string out;

  void add(CLI::App* app) {
    graph.add(app);
    method.add(app);
    app->add_option("--signal", signal, "Noisy signal CSV (one column)")->required();
    app->add_option("--solver", solver, "tv, tik, wavelet or bpdn")
        ->capture_default_str()
        ->check(CLI::IsMember({"tv", "tik", "wavelet", "bpdn"}));
    app->add_option("--gamma", gamma, "Regularization weight (tv, tik)")->capture_default_str();
    app->add_option("--tau", tau, "Soft threshold (wavelet)")->capture_default_str();
    app->add_option("--lambda", lambda, "l1 weight (bpdn)")->capture_default_str();
    app->add_option("--filters", filters, "itersine kernels (wavelet, bpdn)")->capture_default_str();
    app->add_option("--mask", mask, "Observation mask CSV, nonzero = observed (bpdn)");
    app->add_option("--max-iter", max_iter, "Iteration cap")->capture_default_str();
    app->add_option("--tol", tol, "Stopping tolerance")->capture_default_str();
    app->add_option("--out", out, "Denoised signal CSV")->required();
  }

  void execute(Run& run) const {
    const Graph g = graph.load();
    const Eigen::VectorXd y = single_column(io::read_csv(signal), "signal");
    const SolverOptions opts{max_iter, tol};
    Eigen::VectorXd x;
    SolverReport report;
    if (solver == "tv") {
      auto r = prox_tv(g, y, gamma, opts);
      x = std::move(r.x);
      report = std::move(r.report);
    } else if (solver == "tik") {
      auto r = tik_denoise(g, y, gamma);
      x = std::move(r.x);
      report = std::move(r.report);
    } else {
      if (method.exact()) compute_fourier_basis(g);
      const FilterBank fb = design_itersine(graph_lmax(g), filters);
      if (solver == "wavelet") {
        auto r = wavelet_denoise(g, fb, y, tau, method.get());
        x = std::move(r.x);
        report = std::move(r.report);
      } else {
        std::optional<Eigen::VectorXd> m;
        if (!mask.empty()) m = single_column(io::read_csv(mask), "mask");
        auto r = solve_bpdn(g, fb, y, m, lambda, opts, method.get());
        x = filter_synthesis(g, fb, r.coefficients, method.get()).col(0);
        report = std::move(r.report);
      }
    }
    io::write_csv(out, x);
    run.wrote(out);
    run.extra["report"] = report_to_json(report);
  }
};

struct PlotGraphCmd {
  GraphArgs graph;
  std::string signal;
  std::string format = "auto";
  int width = 640, height = 480;
  std::string out;

  void add(CLI::App* app) {
    graph.add(app, false);
    app->add_option("--signal", signal, "Vertex signal CSV (one column) for colouring");
    app->add_option("--format", format, "auto, svg or dot")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "svg", "dot"}));
    app->add_option("--width", width, "Canvas width (px)")->capture_default_str();
    app->add_option("--height", height, "Canvas height (px)")->capture_default_str();
    app->add_option("--out", out, "Output .svg or .dot")->required();
  }

  void execute(Run& run) const {
    const Graph g = graph.load();
    std::string fmt = format;
    if (fmt == "auto") fmt = fs::path(out).extension() == ".dot" ? "dot" : "svg";
    std::string text;
    if (fmt == "dot") {
      text = export_graph_dot(g);
    } else {
      PlotStyle style;
      style.width = width;
      style.height = height;
      std::optional<Eigen::VectorXd> s;
      if (!signal.empty()) s = single_column(io::read_csv(signal), "signal");
      text = export_graph_svg(g, s, style);
    }
    write_text(out, text);
    run.wrote(out);
  }

  static void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    f << text;
  }
};

struct PlotFiltersCmd {
  std::string graph_path;
  DesignArgs design;
  double lmax = 0.0;
  int grid = 200;
  int width = 640, height = 480;
  std::string out;

  void add(CLI::App* app) {
    app->add_option("graph", graph_path, "Graph whose lmax sets the domain (optional with --lmax)");
    design.add(app);
    app->add_option("--lmax", lmax, "Spectral domain upper end")->capture_default_str();
    app->add_option("--grid", grid, "Samples per curve")->capture_default_str();
    app->add_option("--width", width, "Canvas width (px)")->capture_default_str();
    app->add_option("--height", height, "Canvas height (px)")->capture_default_str();
    app->add_option("--out", out, "Output .svg")->required();
  }

  void execute(Run& run) const {
    std::optional<Graph> g;
    if (!graph_path.empty()) g = io::read_graph(graph_path);
    double domain = lmax;
    if (domain <= 0.0) {
      if (!g) throw Error(ErrorCode::BadParameter, "give a graph or --lmax");
      if (design.needs_spectrum()) compute_fourier_basis(*g);
      domain = graph_lmax(*g);
    }
    if (g && design.needs_spectrum()) compute_fourier_basis(*g);
    const FilterBank fb = design.build(domain, g ? &*g : nullptr);
    PlotStyle style;
    style.width = width;
    style.height = height;
    PlotGraphCmd::write_text(out, export_filter_svg(fb, domain, grid, style));
    run.wrote(out);
    if (!design.save_bank.empty()) {
      write_json(design.save_bank, bank_to_json(fb));
      run.wrote(design.save_bank);
    }
  }
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::IoError:
    case ErrorCode::ParseError:
      return 1;
    default:
      return 2;
  }
}

int replay(const std::string& manifest_path, std::ostream& out, std::ostream& err) {
  const json m = read_json(manifest_path);
  std::vector<std::string> argv;
  json expected;
  try {
    argv = m.at("argv").get<std::vector<std::string>>();
    expected = m.at("outputs");
    if (m.contains("dense_cap"))
      ::setenv("GRAPHSIG_DENSE_CAP", std::to_string(m.at("dense_cap").get<int>()).c_str(), 1);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("run manifest: ") + e.what());
  }
  if (!argv.empty() && argv.front() == "replay") throw Error(ErrorCode::ParseError, "manifest replays itself");
  const int code = run(argv, out, err);
  if (code != 0) return code;
  int mismatches = 0;
  for (const auto& [file, hash] : expected.items()) {
    const std::string now = fnv1a(file);
    if (now != hash.get<std::string>()) {
      err << "error: " << file << " differs from the recorded output\n";
      ++mismatches;
    }
  }
  if (mismatches) return 2;
  out << "replay reproduced " << expected.size() << " output(s)\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph signal processing toolbox", "graphsig"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Run manifest path (default: <output>.manifest.json)");

  GenerateCmd generate;
  LaplacianCmd laplacian;
  FourierCmd fourier;
  FilterCmd filter;
  PyramidAnalyzeCmd pyr_analyze;
  PyramidSynthesizeCmd pyr_synth;
  DenoiseCmd denoise;
  PlotGraphCmd plot_graph;
  PlotFiltersCmd plot_filters;
  std::string replay_path;

  auto* gen = app.add_subcommand("generate", "Generate a graph (.mtx plus .coords.csv)");
  generate.add(gen);
  auto* lap = app.add_subcommand("laplacian", "Export a Laplacian and its eigenvalues");
  laplacian.add(lap);
  auto* fou = app.add_subcommand("fourier", "Export the Fourier basis");
  fourier.add(fou);
  auto* fil = app.add_subcommand("filter", "Filter a signal with a filter bank");
  filter.add(fil);
  auto* pyr = app.add_subcommand("pyramid", "Multiresolution pyramid");
  pyr->require_subcommand(1);
  auto* pa = pyr->add_subcommand("analyze", "Decompose a signal into a pyramid directory");
  pyr_analyze.add(pa);
  auto* ps = pyr->add_subcommand("synthesize", "Reconstruct a signal from a pyramid directory");
  pyr_synth.add(ps);
  auto* den = app.add_subcommand("denoise", "Graph-regularized denoising");
  denoise.add(den);
  auto* plt = app.add_subcommand("plot", "SVG / DOT export");
  plt->require_subcommand(1);
  auto* pg = plt->add_subcommand("graph", "Graph with optional vertex signal");
  plot_graph.add(pg);
  auto* pf = plt->add_subcommand("filters", "Filter bank responses");
  plot_filters.add(pf);
  auto* rep = app.add_subcommand("replay", "Re-run a manifest and verify outputs are identical");
  rep->add_option("manifest", replay_path, "Run manifest")->required();

  std::vector<std::string> storage;
  storage.push_back("graphsig");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Run r;
  r.argv = args;
  r.manifest_path = manifest_path;
  r.out = &out;
  try {
    if (rep->parsed()) return replay(replay_path, out, err);
    if (gen->parsed()) {
      r.command = "generate";
      r.sub = gen;
      generate.execute(r);
    } else if (lap->parsed()) {
      r.command = "laplacian";
      r.sub = lap;
      laplacian.execute(r);
    } else if (fou->parsed()) {
      r.command = "fourier";
      r.sub = fou;
      fourier.execute(r);
    } else if (fil->parsed()) {
      r.command = "filter";
      r.sub = fil;
      filter.execute(r);
    } else if (pa->parsed()) {
      r.command = "pyramid analyze";
      r.sub = pa;
      pyr_analyze.execute(r);
    } else if (ps->parsed()) {
      r.command = "pyramid synthesize";
      r.sub = ps;
      pyr_synth.execute(r);
    } else if (den->parsed()) {
      r.command = "denoise";
      r.sub = den;
      denoise.execute(r);
    } else if (pg->parsed()) {
      r.command = "plot graph";
      r.sub = pg;
      plot_graph.execute(r);
    } else if (pf->parsed()) {
      r.command = "plot filters";
      r.sub = pf;
      plot_filters.execute(r);
    }
    write_manifest(r);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace graphsig::cli
