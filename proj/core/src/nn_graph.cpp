#include "graphsig/nn_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "graphsig/error.hpp"
#include "graphsig/kdtree.hpp"

namespace graphsig {
namespace {

struct Arc {
  int i, j;
  double dist2;
};

// Unordered pairs keep the larger weight, i.e. W = max(W, W^T).
SparseMatrix symmetric_max_weights(int n, std::vector<Arc> arcs, double sigma) {
  for (auto& a : arcs)
    if (a.i > a.j) std::swap(a.i, a.j);
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.i, a.j, a.dist2) < std::tie(b.i, b.j, b.dist2);
  });
  std::vector<Triplet> t;
  t.reserve(2 * arcs.size());
  for (std::size_t p = 0; p < arcs.size(); ++p) {
    if (p > 0 && arcs[p].i == arcs[p - 1].i && arcs[p].j == arcs[p - 1].j) continue;
    // smallest distance first within a pair, hence the largest weight
    const double w = std::exp(-arcs[p].dist2 / (sigma * sigma));
    if (w <= 0.0) continue;
    t.emplace_back(arcs[p].i, arcs[p].j, w);
    t.emplace_back(arcs[p].j, arcs[p].i, w);
  }
  SparseMatrix W(n, n);
  W.setFromTriplets(t.begin(), t.end());
  W.makeCompressed();
  return W;
}

double resolve_sigma(std::optional<double> sigma, double automatic) {
  if (sigma) {
    if (!(*sigma > 0.0) || !std::isfinite(*sigma))
      throw Error(ErrorCode::BadParameter, "sigma must be positive and finite");
    return *sigma;
  }
  return automatic > 0.0 ? automatic : 1.0;
}

Eigen::MatrixXd coords_from_points(const Eigen::MatrixXd& points) {
  if (points.cols() >= 3) return points.leftCols(3);
  if (points.cols() == 2) return points;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(points.rows(), 2);
  c.col(0) = points.col(0);
  return c;
}

}  // namespace

Graph nn_graph(const Eigen::MatrixXd& points, const NnGraphOptions& options) {
  const int m = static_cast<int>(points.rows());
  if (m < 2) throw Error(ErrorCode::SizeTooSmall, "nn_graph needs at least two points");
  if (points.cols() < 1) throw Error(ErrorCode::ShapeMismatch, "points need at least one column");
  if (!points.allFinite()) throw Error(ErrorCode::NonFinite, "point cloud has non-finite entries");
  bool degenerate = true;
  for (int i = 1; i < m && degenerate; ++i) degenerate = points.row(i) == points.row(0);
  if (degenerate) throw Error(ErrorCode::DegenerateCloud, "all points are identical");

  const KdTree tree(points);
  std::vector<Arc> arcs;
  double automatic_sigma = 0.0;

  if (const auto* knn = std::get_if<Knn>(&options.strategy)) {
    if (knn->k < 1) throw Error(ErrorCode::BadParameter, "k must be at least 1");
    if (knn->k >= m)
      throw Error(ErrorCode::KTooLarge, "k = " + std::to_string(knn->k) + " needs more than " +
                                            std::to_string(m) + " points");
    arcs.reserve(static_cast<std::size_t>(m) * knn->k);
    for (int i = 0; i < m; ++i) {
      const auto nbrs = tree.knn(tree.row(i), knn->k, i);
      automatic_sigma += std::sqrt(nbrs.back().dist2);
      for (const auto& nb : nbrs) arcs.push_back({i, nb.index, nb.dist2});
    }
    automatic_sigma /= m;
  } else {
    const double eps = std::get<Radius>(options.strategy).epsilon;
    if (!(eps > 0.0)) throw Error(ErrorCode::BadParameter, "radius must be positive");
    for (int i = 0; i < m; ++i)
      for (const auto& nb : tree.radius(tree.row(i), eps, i)) {
        arcs.push_back({i, nb.index, nb.dist2});
        automatic_sigma += std::sqrt(nb.dist2);
      }
    if (!arcs.empty()) automatic_sigma /= static_cast<double>(arcs.size());
  }

  const double sigma = resolve_sigma(options.sigma, automatic_sigma);
  GraphOptions go;
  go.directed = Directedness::Undirected;
  go.coords = coords_from_points(points);
  go.name = options.name;
  return graph_from_weights(symmetric_max_weights(m, std::move(arcs), sigma), go);
}

Graph patch_graph(const Image& image, const PatchGraphOptions& options) {
  const int h = image.height, w = image.width, ch = image.channels;
  if (h < 1 || w < 1 || ch < 1 ||
      image.pixels.size() != static_cast<std::size_t>(h) * w * ch)
    throw Error(ErrorCode::ShapeMismatch, "image buffer does not match its dimensions");
  const int ps = options.patch_size;
  if (ps < 1 || ps % 2 == 0) throw Error(ErrorCode::BadParameter, "patch_size must be odd and positive");
  if (ps > std::min(h, w))
    throw Error(ErrorCode::PatchLargerThanImage,
                "patch of " + std::to_string(ps) + " pixels exceeds the image");
  const int m = h * w;
  if (options.k < 1) throw Error(ErrorCode::BadParameter, "k must be at least 1");
  if (options.k >= m) throw Error(ErrorCode::KTooLarge, "k must be smaller than the pixel count");
  if (options.search_window && *options.search_window < 1)
    throw Error(ErrorCode::BadParameter, "search window must be at least 1 pixel");

  const int half = ps / 2;
  const bool with_coords = options.coord_weight > 0.0;
  const int fdim = ps * ps * ch + (with_coords ? 2 : 0);
  auto reflect = [](int idx, int n) {
    // symmetric padding, edge pixel repeated
    while (idx < 0 || idx >= n) idx = idx < 0 ? -idx - 1 : 2 * n - idx - 1;
    return idx;
  };

  Eigen::MatrixXd features(m, fdim);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      const int v = r * w + c;
      int f = 0;
      for (int dr = -half; dr <= half; ++dr)
        for (int dc = -half; dc <= half; ++dc) {
          const int rr = reflect(r + dr, h), cc = reflect(c + dc, w);
          for (int k = 0; k < ch; ++k) features(v, f++) = image.at(rr, cc, k);
        }
      if (with_coords) {
        features(v, f++) = options.coord_weight * r;
        features(v, f++) = options.coord_weight * c;
      }
    }

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m) * options.k);
  double automatic_sigma = 0.0;

  if (!options.search_window) {
    const KdTree tree(features);
    for (int v = 0; v < m; ++v) {
      const auto nbrs = tree.knn(tree.row(v), options.k, v);
      automatic_sigma += std::sqrt(nbrs.back().dist2);
      for (const auto& nb : nbrs) arcs.push_back({v, nb.index, nb.dist2});
    }
  } else {
    const int win = *options.search_window;
    std::vector<Neighbor> cand;
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c) {
        const int v = r * w + c;
        cand.clear();
        for (int rr = std::max(0, r - win); rr <= std::min(h - 1, r + win); ++rr)
          for (int cc = std::max(0, c - win); cc <= std::min(w - 1, c + win); ++cc) {
            const int u = rr * w + cc;
            if (u == v) continue;
            cand.push_back({u, (features.row(v) - features.row(u)).squaredNorm()});
          }
        const std::size_t take = std::min<std::size_t>(options.k, cand.size());
        std::partial_sort(cand.begin(), cand.begin() + take, cand.end());
        if (take > 0) automatic_sigma += std::sqrt(cand[take - 1].dist2);
        for (std::size_t p = 0; p < take; ++p) arcs.push_back({v, cand[p].index, cand[p].dist2});
      }
  }
  automatic_sigma /= m;

  const double sigma = resolve_sigma(options.sigma, automatic_sigma);
  Eigen::MatrixXd coords(m, 2);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      coords(r * w + c, 0) = c;
      coords(r * w + c, 1) = h - 1 - r;
    }
  GraphOptions go;
  go.directed = Directedness::Undirected;
  go.coords = std::move(coords);
  go.name = "patch";
  return graph_from_weights(symmetric_max_weights(m, std::move(arcs), sigma), go);
}

}  // namespace graphsig
