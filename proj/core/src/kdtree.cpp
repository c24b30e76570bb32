#include "graphsig/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace graphsig {

KdTree::KdTree(const Eigen::MatrixXd& points, int leaf_size) : points_(points) {
  order_.resize(points.rows());
  std::iota(order_.begin(), order_.end(), 0);
  if (!order_.empty()) build(0, size(), std::max(1, leaf_size));
}

int KdTree::build(int begin, int end, int leaf_size) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_.back().begin = begin;
  nodes_.back().end = end;
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(dim(), std::numeric_limits<double>::infinity());
  Eigen::VectorXd hi = -lo;
  for (int p = begin; p < end; ++p) {
    const double* x = row(order_[p]);
    for (int c = 0; c < dim(); ++c) {
      lo[c] = std::min(lo[c], x[c]);
      hi[c] = std::max(hi[c], x[c]);
    }
  }
  int split_dim = 0;
  double spread = -1.0;
  for (int c = 0; c < dim(); ++c)
    if (hi[c] - lo[c] > spread) {
      spread = hi[c] - lo[c];
      split_dim = c;
    }
  nodes_[id].lo = lo;
  nodes_[id].hi = hi;
  if (end - begin <= leaf_size || spread <= 0.0) return id;

  const int mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](int a, int b) {
                     const double xa = row(a)[split_dim], xb = row(b)[split_dim];
                     return xa < xb || (xa == xb && a < b);
                   });
  const double split = row(order_[mid])[split_dim];
  const int left = build(begin, mid, leaf_size);
  const int right = build(mid, end, leaf_size);
  nodes_[id].split_dim = split_dim;
  nodes_[id].split = split;
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

double KdTree::box_dist2(const Node& node, const double* q) const {
  double acc = 0.0;
  for (int c = 0; c < dim(); ++c) {
    double gap = 0.0;
    if (q[c] < node.lo[c]) gap = node.lo[c] - q[c];
    else if (q[c] > node.hi[c]) gap = q[c] - node.hi[c];
    acc += gap * gap;
  }
  return acc;
}

double KdTree::dist2(const double* q, int i) const {
  const double* x = row(i);
  double acc = 0.0;
  for (int c = 0; c < dim(); ++c) {
    const double diff = q[c] - x[c];
    acc += diff * diff;
  }
  return acc;
}

std::vector<Neighbor> KdTree::knn(const double* query, int k, int exclude) const {
  std::priority_queue<Neighbor> heap;  // worst on top
  if (k <= 0 || nodes_.empty()) return {};

  auto visit = [&](auto&& self, int id) -> void {
    const Node& node = nodes_[id];
    if (static_cast<int>(heap.size()) == k && box_dist2(node, query) > heap.top().dist2) return;
    if (node.split_dim < 0) {
      for (int p = node.begin; p < node.end; ++p) {
        const int i = order_[p];
        if (i == exclude) continue;
        const Neighbor cand{i, dist2(query, i)};
        if (static_cast<int>(heap.size()) < k) {
          heap.push(cand);
        } else if (cand < heap.top()) {
          heap.pop();
          heap.push(cand);
        }
      }
      return;
    }
    const bool go_left_first = query[node.split_dim] <= node.split;
    self(self, go_left_first ? node.left : node.right);
    self(self, go_left_first ? node.right : node.left);
  };
  visit(visit, 0);

  std::vector<Neighbor> out;
  out.reserve(heap.size());
  while (!heap.empty()) {
    out.push_back(heap.top());
    heap.pop();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Neighbor> KdTree::radius(const double* query, double radius, int exclude) const {
  std::vector<Neighbor> out;
  if (nodes_.empty()) return out;
  const double r2 = radius * radius;
  auto visit = [&](auto&& self, int id) -> void {
    const Node& node = nodes_[id];
    if (box_dist2(node, query) > r2) return;
    if (node.split_dim < 0) {
      for (int p = node.begin; p < node.end; ++p) {
        const int i = order_[p];
        if (i == exclude) continue;
        const double d2 = dist2(query, i);
        if (d2 <= r2) out.push_back({i, d2});
      }
      return;
    }
    self(self, node.left);
    self(self, node.right);
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphsig
