#include "graphsig/generators.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "graphsig/error.hpp"
#include "graphsig/nn_graph.hpp"
#include "graphsig/rng.hpp"

namespace graphsig {
namespace {

Graph unit_graph(int n, const std::vector<std::pair<int, int>>& edges, Eigen::MatrixXd coords,
                 std::string name) {
  std::vector<Triplet> t;
  t.reserve(2 * edges.size());
  for (auto [i, j] : edges) {
    t.emplace_back(i, j, 1.0);
    t.emplace_back(j, i, 1.0);
  }
  SparseMatrix W(n, n);
  W.setFromTriplets(t.begin(), t.end());
  GraphOptions opts;
  opts.directed = Directedness::Undirected;
  opts.coords = std::move(coords);
  opts.name = std::move(name);
  return graph_from_weights(W, opts);
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::BadProbability, std::string(what) + " must lie in [0, 1]");
}

}  // namespace

Graph ring(int n) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "ring needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  Eigen::MatrixXd xy(n, 2);
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    const double angle = 2.0 * std::numbers::pi * i / n;
    xy(i, 0) = std::cos(angle);
    xy(i, 1) = std::sin(angle);
  }
  return unit_graph(n, edges, std::move(xy), "ring");
}

Graph path(int n) {
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "path needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  Eigen::MatrixXd xy = Eigen::MatrixXd::Zero(n, 2);
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) edges.emplace_back(i, i + 1);
    xy(i, 0) = i;
  }
  return unit_graph(n, edges, std::move(xy), "path");
}

Graph comet(int star_degree, int tail_length) {
  if (star_degree < 1 || tail_length < 0 || 1 + star_degree + tail_length < 2)
    throw Error(ErrorCode::SizeTooSmall, "comet needs a star of at least one leaf");
  const int n = 1 + star_degree + tail_length;
  std::vector<std::pair<int, int>> edges;
  Eigen::MatrixXd xy = Eigen::MatrixXd::Zero(n, 2);
  // Leaves fan around the centre; the last leaf sits at angle 0 and the
  // tail continues along the positive x axis.
  for (int leaf = 1; leaf <= star_degree; ++leaf) {
    edges.emplace_back(0, leaf);
    const double angle = 2.0 * std::numbers::pi * leaf / star_degree;
    xy(leaf, 0) = std::cos(angle);
    xy(leaf, 1) = std::sin(angle);
  }
  for (int t = 0; t < tail_length; ++t) {
    const int v = star_degree + 1 + t;
    edges.emplace_back(v - 1, v);
    xy(v, 0) = 2.0 + t;
  }
  return unit_graph(n, edges, std::move(xy), "comet");
}

Graph grid2d(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2)
    throw Error(ErrorCode::SizeTooSmall, "grid needs at least 2 vertices");
  const int n = rows * cols;
  std::vector<std::pair<int, int>> edges;
  Eigen::MatrixXd xy(n, 2);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      xy(v, 0) = c;
      xy(v, 1) = r;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  return unit_graph(n, edges, std::move(xy), "grid2d");
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "erdos_renyi needs at least 1 vertex");
  check_probability(p, "p");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
  std::vector<Triplet> t;
  for (auto [i, j] : edges) {
    t.emplace_back(i, j, 1.0);
    t.emplace_back(j, i, 1.0);
  }
  SparseMatrix W(n, n);
  W.setFromTriplets(t.begin(), t.end());
  GraphOptions opts;
  opts.directed = Directedness::Undirected;
  opts.name = "erdos_renyi";
  return graph_from_weights(W, opts);
}

Graph stochastic_block_model(int n, std::span<const int> block_sizes, double p_in, double p_out,
                             std::uint64_t seed) {
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");
  if (block_sizes.empty()) throw Error(ErrorCode::BlockSizeMismatch, "no blocks given");
  for (int b : block_sizes)
    if (b < 1) throw Error(ErrorCode::BlockSizeMismatch, "block sizes must be positive");
  const int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (total != n)
    throw Error(ErrorCode::BlockSizeMismatch, "block sizes sum to " + std::to_string(total) +
                                                  ", expected " + std::to_string(n));
  std::vector<int> block_of(n);
  for (int b = 0, v = 0; b < static_cast<int>(block_sizes.size()); ++b)
    for (int i = 0; i < block_sizes[b]; ++i) block_of[v++] = b;

  Rng rng(seed);
  std::vector<Triplet> t;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(block_of[i] == block_of[j] ? p_in : p_out)) {
        t.emplace_back(i, j, 1.0);
        t.emplace_back(j, i, 1.0);
      }
  SparseMatrix W(n, n);
  W.setFromTriplets(t.begin(), t.end());
  GraphOptions opts;
  opts.directed = Directedness::Undirected;
  opts.name = "sbm";
  return graph_from_weights(W, opts);
}

Graph stochastic_block_model(std::span<const int> block_sizes, double p_in, double p_out,
                             std::uint64_t seed) {
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  return stochastic_block_model(n, block_sizes, p_in, p_out, seed);
}

Graph community(int n, std::uint64_t seed, const CommunityParams& params) {
  if (params.communities < 1 || params.communities > n)
    throw Error(ErrorCode::BadParameter, "need between 1 and n communities");
  std::vector<int> sizes(params.communities, n / params.communities);
  for (int b = 0; b < n % params.communities; ++b) ++sizes[b];
  return stochastic_block_model(n, sizes, params.p_in, params.p_out, seed).with_name("community");
}

Graph sensor(int n, std::uint64_t seed, int k) {
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "sensor needs at least 2 vertices");
  const Rng root(seed);
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    Eigen::MatrixXd pts(n, 2);
    for (int i = 0; i < n; ++i) {
      pts(i, 0) = rng.uniform();
      pts(i, 1) = rng.uniform();
    }
    NnGraphOptions opts;
    opts.strategy = Knn{std::min(k, n - 1)};
    opts.name = "sensor";
    Graph g = nn_graph(pts, opts);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::NotConnected, "no connected sensor graph after 100 draws");
}

Graph swiss_roll(int n, std::uint64_t seed, const SwissRollParams& params) {
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "swiss_roll needs at least 2 vertices");
  Rng rng(seed);
  Eigen::MatrixXd pts(n, 3);
  for (int i = 0; i < n; ++i) {
    const double t = 1.5 * std::numbers::pi * (1.0 + 2.0 * rng.uniform());
    const double y = params.height * rng.uniform();
    pts(i, 0) = t * std::cos(t) + params.noise * rng.normal();
    pts(i, 1) = y + params.noise * rng.normal();
    pts(i, 2) = t * std::sin(t) + params.noise * rng.normal();
  }
  NnGraphOptions opts;
  opts.strategy = Knn{std::min(params.k, n - 1)};
  opts.name = "swiss_roll";
  return nn_graph(pts, opts);
}

Graph two_moons(int n, std::uint64_t seed, const TwoMoonsParams& params) {
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "two_moons needs at least 2 vertices");
  Rng rng(seed);
  const int upper = (n + 1) / 2;
  Eigen::MatrixXd pts(n, 2);
  for (int i = 0; i < n; ++i) {
    const double t = std::numbers::pi * rng.uniform();
    const double r = params.radius;
    if (i < upper) {
      pts(i, 0) = r * std::cos(t);
      pts(i, 1) = r * std::sin(t);
    } else {
      pts(i, 0) = r * (1.0 - std::cos(t));
      pts(i, 1) = r * (0.5 - std::sin(t));
    }
    pts(i, 0) += params.noise * rng.normal();
    pts(i, 1) += params.noise * rng.normal();
  }
  NnGraphOptions opts;
  opts.strategy = Knn{std::min(params.k, n - 1)};
  opts.name = "two_moons";
  return nn_graph(pts, opts);
}

}  // namespace graphsig
