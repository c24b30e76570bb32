#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphsig/graph.hpp"

namespace graphsig {

struct Knn {
  int k = 6;
};
struct Radius {
  double epsilon = 0.1;
};
using NeighborStrategy = std::variant<Knn, Radius>;

struct NnGraphOptions {
  NeighborStrategy strategy = Knn{};
  /// Gaussian kernel width; nullopt = mean distance to the k-th neighbour
  /// (or mean selected-pair distance for the radius strategy).
  std::optional<double> sigma;
  std::string name = "nn";
};

/// Gaussian-weighted neighbour graph exp(-d^2/sigma^2) on the rows of
/// `points`, symmetrized by W = max(W, W^T).
Graph nn_graph(const Eigen::MatrixXd& points, const NnGraphOptions& options = {});

/// Row-major H x W x C image.
struct Image {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<double> pixels;

  double at(int r, int c, int ch = 0) const {
    return pixels[(static_cast<std::size_t>(r) * width + c) * channels + ch];
  }
};

struct PatchGraphOptions {
  int patch_size = 5;  // odd
  /// Half-width of the candidate window in pixels; nullopt = global search.
  std::optional<int> search_window;
  int k = 8;
  std::optional<double> sigma;
  /// Scale of the pixel-position feature appended to each patch (0 = off).
  double coord_weight = 0.0;
};

/// One vertex per pixel (index r * width + c); patches use symmetric padding.
Graph patch_graph(const Image& image, const PatchGraphOptions& options = {});

}  // namespace graphsig
