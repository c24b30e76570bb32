#pragma once

#include <Eigen/Core>

#include <vector>

namespace graphsig {

struct Neighbor {
  int index;
  double dist2;

  // Distance first, index breaks ties so queries are fully deterministic.
  friend bool operator<(const Neighbor& a, const Neighbor& b) {
    return a.dist2 < b.dist2 || (a.dist2 == b.dist2 && a.index < b.index);
  }
};

/// Exact Euclidean k-d tree over the rows of a point matrix.
class KdTree {
 public:
  explicit KdTree(const Eigen::MatrixXd& points, int leaf_size = 16);

  /// k nearest rows to `query`, sorted by (distance, index). `exclude` is
  /// skipped (pass the query's own row index, or -1).
  std::vector<Neighbor> knn(const double* query, int k, int exclude = -1) const;
  /// All rows within `radius` (inclusive), sorted by (distance, index).
  std::vector<Neighbor> radius(const double* query, double radius, int exclude = -1) const;

  int size() const { return static_cast<int>(points_.rows()); }
  int dim() const { return static_cast<int>(points_.cols()); }
  const double* row(int i) const { return points_.data() + static_cast<std::ptrdiff_t>(i) * dim(); }

 private:
  struct Node {
    int begin, end;      // range into order_
    int split_dim = -1;  // -1 for leaves
    double split = 0.0;
    int left = -1, right = -1;
    Eigen::VectorXd lo, hi;  // bounding box
  };

  int build(int begin, int end, int leaf_size);
  double box_dist2(const Node& node, const double* q) const;
  double dist2(const double* q, int i) const;

  // Row-major copy so each point is contiguous.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> points_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
};

}  // namespace graphsig
