#include "graphsig/pyramid.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SparseCholesky>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "graphsig/error.hpp"
#include "graphsig/io.hpp"
#include "graphsig/lanczos.hpp"
#include "graphsig/spectral.hpp"

namespace graphsig {
namespace {

void check_selection(std::span<const int> kept, int n) {
  if (kept.empty()) throw Error(ErrorCode::EmptyKeptSet, "no vertex kept");
  for (std::size_t p = 0; p < kept.size(); ++p) {
    if (kept[p] < 0 || kept[p] >= n)
      throw Error(ErrorCode::IndexOutOfRange, "kept vertex " + std::to_string(kept[p]) + " out of range");
    if (p > 0 && kept[p] <= kept[p - 1])
      throw Error(ErrorCode::BadParameter, "kept indices must be sorted and unique");
  }
}

std::vector<int> complement_of(std::span<const int> kept, int n) {
  std::vector<char> in(n, 0);
  for (int v : kept) in[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

// Dense submatrix L[rows, cols] through a column lookup.
Eigen::MatrixXd dense_block(const SparseMatrix& L, const std::vector<int>& row_pos,
                            std::span<const int> cols, int n_rows) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (SparseMatrix::InnerIterator it(L, cols[c]); it; ++it)
      if (row_pos[it.row()] >= 0) out(row_pos[it.row()], c) = it.value();
  return out;
}

SparseMatrix sparse_block(const SparseMatrix& L, const std::vector<int>& row_pos, std::span<const int> cols,
                          int n_rows) {
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (SparseMatrix::InnerIterator it(L, cols[c]); it; ++it)
      if (row_pos[it.row()] >= 0) t.emplace_back(row_pos[it.row()], static_cast<int>(c), it.value());
  SparseMatrix out(n_rows, static_cast<int>(cols.size()));
  out.setFromTriplets(t.begin(), t.end());
  out.makeCompressed();
  return out;
}

std::vector<int> positions(std::span<const int> subset, int n) {
  std::vector<int> pos(n, -1);
  for (std::size_t p = 0; p < subset.size(); ++p) pos[subset[p]] = static_cast<int>(p);
  return pos;
}

Graph graph_from_laplacian(const SparseMatrix& L, const Graph& parent, std::span<const int> kept) {
  std::vector<Triplet> t;
  for (int j = 0; j < L.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(L, j); it; ++it)
      if (it.row() != j && it.value() < 0.0) t.emplace_back(it.row(), j, -it.value());
  SparseMatrix W(L.rows(), L.cols());
  W.setFromTriplets(t.begin(), t.end());
  GraphOptions opts;
  opts.directed = Directedness::Undirected;
  opts.kind = LaplacianKind::CombinatorialU;
  opts.name = parent.name() + "_reduced";
  if (parent.coords()) {
    Eigen::MatrixXd c(static_cast<Eigen::Index>(kept.size()), parent.coords()->cols());
    for (std::size_t p = 0; p < kept.size(); ++p) c.row(p) = parent.coords()->row(kept[p]);
    opts.coords = std::move(c);
  }
  return graph_from_weights(W, opts);
}

Eigen::VectorXd largest_eigenvector(const Graph& g) {
  const int n = g.N();
  Eigen::VectorXd u;
  if (n <= default_dense_cap()) {
    u = compute_fourier_basis(g)->U.col(n - 1);
  } else {
    const SparseMatrix& L = g.L();
    LanczosOptions opts;
    opts.max_steps = 300;
    opts.tol = 1e-10;
    u = lanczos_largest([&L](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = L * x; }, n, opts).vector;
    for (int i = 0; i < n; ++i)
      if (std::abs(u[i]) > 1e-8) {
        if (u[i] < 0.0) u = -u;
        break;
      }
  }
  return u;
}

MultiresolutionLevel reduce_level(const Graph& parent, std::vector<int> kept, bool fallback) {
  SparseMatrix reduced = kron_reduce(parent.L(), kept);
  Graph child = graph_from_laplacian(reduced, parent, kept);
  return {std::move(child), std::move(kept), fallback};
}

void check_multiresolution_input(const Graph& g, const MultiresolutionParams& params) {
  if (g.lap_kind() != LaplacianKind::CombinatorialU)
    throw Error(ErrorCode::KindMismatch, "multiresolution needs the combinatorial Laplacian");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "multiresolution needs a connected graph");
  if (!(params.alpha >= 0.0) || !(params.epsilon > 0.0))
    throw Error(ErrorCode::BadParameter, "alpha must be >= 0 and epsilon > 0");
}

Eigen::VectorXd lowpass(const Graph& g, const Eigen::VectorXd& f, double alpha) {
  SparseMatrix A = alpha * g.L();
  for (int i = 0; i < g.N(); ++i) A.coeffRef(i, i) += 1.0;
  Eigen::SimplicialLDLT<SparseMatrix> solver(A);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::SolverFailure, "factorization of I + alpha L failed");
  return solver.solve(f);
}

}  // namespace

SparseMatrix kron_reduce(const SparseMatrix& L, std::span<const int> kept) {
  if (L.rows() != L.cols()) throw Error(ErrorCode::NonSquare, "Laplacian must be square");
  const int n = static_cast<int>(L.rows());
  check_selection(kept, n);
  if (static_cast<int>(kept.size()) == n) return L;

  const std::vector<int> comp = complement_of(kept, n);
  const auto kpos = positions(kept, n);
  const auto cpos = positions(comp, n);
  const int nk = static_cast<int>(kept.size()), nc = static_cast<int>(comp.size());

  const SparseMatrix Lcc = sparse_block(L, cpos, comp, nc);
  Eigen::SimplicialLDLT<SparseMatrix> solver(Lcc);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::SingularInteriorBlock, "interior block factorization failed");
  const Eigen::VectorXd pivots = solver.vectorD();
  const double scale = std::max(1.0, pivots.cwiseAbs().maxCoeff());
  if (pivots.minCoeff() <= 1e-12 * scale)
    throw Error(ErrorCode::SingularInteriorBlock,
                "interior block is singular (a component contains no kept vertex)");

  const Eigen::MatrixXd Lck = dense_block(L, cpos, kept, nc);
  const Eigen::MatrixXd X = solver.solve(Lck);
  Eigen::MatrixXd R = dense_block(L, kpos, kept, nk) - Lck.transpose() * X;
  R = 0.5 * (R + R.transpose()).eval();

  std::vector<Triplet> t;
  for (int j = 0; j < nk; ++j)
    for (int i = 0; i < nk; ++i) {
      double v = R(i, j);
      if (i == j) {
        if (v < 0.0 && v > -1e-10) v = 0.0;
      } else if (v > 0.0 && v < 1e-12) {
        v = 0.0;
      }
      if (v != 0.0) t.emplace_back(i, j, v);
    }
  SparseMatrix out(nk, nk);
  out.setFromTriplets(t.begin(), t.end());
  out.makeCompressed();
  return out;
}

Multiresolution graph_multiresolution(const Graph& g, int n_levels, const MultiresolutionParams& params) {
  if (n_levels < 0) throw Error(ErrorCode::BadParameter, "n_levels must be >= 0");
  check_multiresolution_input(g, params);
  Multiresolution mr;
  mr.params = params;
  mr.levels.push_back({g, {}, false});
  for (int level = 1; level <= n_levels; ++level) {
    const Graph& parent = mr.levels.back().graph;
    const int n = parent.N();
    if (n < 2)
      throw Error(ErrorCode::BadParameter,
                  "level " + std::to_string(level) + " would reduce a single-vertex graph");
    const Eigen::VectorXd u = largest_eigenvector(parent);
    std::vector<int> kept;
    for (int i = 0; i < n; ++i)
      if (u[i] >= 0.0) kept.push_back(i);
    if (2 * static_cast<int>(kept.size()) < n) {
      kept.clear();
      for (int i = 0; i < n; ++i)
        if (u[i] <= 0.0) kept.push_back(i);
    }
    bool fallback = false;
    if (kept.empty() || static_cast<int>(kept.size()) == n) {
      kept.clear();
      for (int i = 0; i < n; i += 2) kept.push_back(i);
      fallback = true;
    }
    mr.levels.push_back(reduce_level(parent, std::move(kept), fallback));
  }
  return mr;
}

Multiresolution multiresolution_from_kept(const Graph& g, const std::vector<std::vector<int>>& kept,
                                          const MultiresolutionParams& params) {
  check_multiresolution_input(g, params);
  Multiresolution mr;
  mr.params = params;
  mr.levels.push_back({g, {}, false});
  for (const auto& sel : kept) {
    const Graph& parent = mr.levels.back().graph;
    if (static_cast<int>(sel.size()) >= parent.N())
      throw Error(ErrorCode::LevelMismatch, "stored selection does not shrink the graph");
    mr.levels.push_back(reduce_level(parent, sel, false));
  }
  return mr;
}

Eigen::MatrixXd interpolate(const Graph& g, std::span<const int> kept, const Eigen::MatrixXd& values,
                            double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::BadParameter, "epsilon must be positive");
  check_selection(kept, g.N());
  if (values.rows() != static_cast<Eigen::Index>(kept.size()))
    throw Error(ErrorCode::ShapeMismatch, "one value per kept vertex expected");

  SparseMatrix A = g.L();
  for (int i = 0; i < g.N(); ++i) A.coeffRef(i, i) += epsilon;
  Eigen::SimplicialLDLT<SparseMatrix> solver(A);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::SolverFailure, "factorization of L + eps I failed");

  Eigen::MatrixXd selectors = Eigen::MatrixXd::Zero(g.N(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t p = 0; p < kept.size(); ++p) selectors(kept[p], p) = 1.0;
  const Eigen::MatrixXd phi = solver.solve(selectors);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::SolverFailure, "Green's function solve failed");

  Eigen::MatrixXd phi_kk(static_cast<Eigen::Index>(kept.size()), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t p = 0; p < kept.size(); ++p) phi_kk.row(p) = phi.row(kept[p]);
  phi_kk = 0.5 * (phi_kk + phi_kk.transpose()).eval();
  Eigen::LDLT<Eigen::MatrixXd> small(phi_kk);
  if (small.info() != Eigen::Success) throw Error(ErrorCode::SolverFailure, "kernel system is singular");
  return phi * small.solve(values);
}

Pyramid pyramid_analysis(const Multiresolution& mr, const Eigen::VectorXd& f) {
  if (mr.levels.empty()) throw Error(ErrorCode::LevelMismatch, "empty multiresolution");
  if (f.size() != mr.levels.front().graph.N())
    throw Error(ErrorCode::ShapeMismatch, "signal does not match the level-0 graph");
  Pyramid pyr;
  Eigen::VectorXd current = f;
  for (int l = 0; l < mr.num_levels(); ++l) {
    const Graph& g = mr.levels[l].graph;
    const auto& kept = mr.levels[l + 1].kept;
    const Eigen::VectorXd smooth = lowpass(g, current, mr.params.alpha);
    Eigen::VectorXd coarse(static_cast<Eigen::Index>(kept.size()));
    for (std::size_t p = 0; p < kept.size(); ++p) coarse[p] = smooth[kept[p]];
    const Eigen::VectorXd predicted = interpolate(g, kept, coarse, mr.params.epsilon).col(0);
    pyr.levels.push_back({coarse, current - predicted});
    current = coarse;
  }
  pyr.coarsest = current;
  return pyr;
}

Eigen::VectorXd pyramid_synthesis(const Multiresolution& mr, const Pyramid& pyramid) {
  if (static_cast<int>(pyramid.levels.size()) != mr.num_levels())
    throw Error(ErrorCode::LevelMismatch, "pyramid has " + std::to_string(pyramid.levels.size()) +
                                              " levels, multiresolution " + std::to_string(mr.num_levels()));
  if (pyramid.coarsest.size() != mr.levels.back().graph.N())
    throw Error(ErrorCode::LevelMismatch, "coarsest signal does not match the coarsest graph");
  Eigen::VectorXd current = pyramid.coarsest;
  for (int l = mr.num_levels() - 1; l >= 0; --l) {
    const Graph& g = mr.levels[l].graph;
    if (pyramid.levels[l].prediction_error.size() != g.N())
      throw Error(ErrorCode::LevelMismatch, "prediction error of level " + std::to_string(l) + " has wrong size");
    current = interpolate(g, mr.levels[l + 1].kept, current, mr.params.epsilon).col(0) +
              pyramid.levels[l].prediction_error;
  }
  return current;
}

void write_pyramid(const std::filesystem::path& dir, const Multiresolution& mr, const Pyramid& pyramid) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create '" + dir.string() + "'");
  nlohmann::json manifest;
  manifest["alpha"] = mr.params.alpha;
  manifest["epsilon"] = mr.params.epsilon;
  manifest["num_levels"] = mr.num_levels();
  manifest["sizes"] = nlohmann::json::array();
  for (const auto& level : mr.levels) manifest["sizes"].push_back(level.graph.N());
  manifest["kept"] = nlohmann::json::array();
  manifest["fallback_selection"] = nlohmann::json::array();
  for (int l = 1; l <= mr.num_levels(); ++l) {
    manifest["kept"].push_back(mr.levels[l].kept);
    manifest["fallback_selection"].push_back(mr.levels[l].fallback_selection);
  }
  for (std::size_t l = 0; l < pyramid.levels.size(); ++l) {
    io::write_csv(dir / ("level_" + std::to_string(l) + "_coarse.csv"), pyramid.levels[l].coarse);
    io::write_csv(dir / ("level_" + std::to_string(l) + "_error.csv"), pyramid.levels[l].prediction_error);
  }
  io::write_csv(dir / "coarsest.csv", pyramid.coarsest);
  std::ofstream out(dir / "manifest.json");
  if (!out) throw Error(ErrorCode::IoError, "cannot write pyramid manifest");
  out << manifest.dump(2) << '\n';
}

PyramidArchive read_pyramid(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw Error(ErrorCode::IoError, "no manifest.json in '" + dir.string() + "'");
  PyramidArchive archive;
  try {
    const auto manifest = nlohmann::json::parse(in);
    archive.params.alpha = manifest.at("alpha").get<double>();
    archive.params.epsilon = manifest.at("epsilon").get<double>();
    archive.kept = manifest.at("kept").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("pyramid manifest: ") + e.what());
  }
  auto column = [](const Eigen::MatrixXd& m) -> Eigen::VectorXd {
    if (m.cols() != 1) throw Error(ErrorCode::ParseError, "pyramid CSV must have one column");
    return m.col(0);
  };
  for (std::size_t l = 0; l < archive.kept.size(); ++l) {
    PyramidLevel level;
    level.coarse = column(io::read_csv(dir / ("level_" + std::to_string(l) + "_coarse.csv")));
    level.prediction_error = column(io::read_csv(dir / ("level_" + std::to_string(l) + "_error.csv")));
    archive.pyramid.levels.push_back(std::move(level));
  }
  archive.pyramid.coarsest = column(io::read_csv(dir / "coarsest.csv"));
  return archive;
}

}  // namespace graphsig
