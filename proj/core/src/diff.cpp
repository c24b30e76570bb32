#include "graphsig/diff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphsig/error.hpp"
#include "graphsig/io.hpp"

namespace graphsig {
namespace {

IncidenceOperator build_incidence(const Graph& g) {
  IncidenceOperator inc;
  inc.num_vertices = g.N();
  const Eigen::SparseMatrix<double, Eigen::RowMajor> rows(g.W());
  for (int i = 0; i < rows.outerSize(); ++i)
    for (decltype(rows)::InnerIterator it(rows, i); it; ++it) {
      const int j = static_cast<int>(it.col());
      if (!g.directed() && j <= i) continue;
      inc.edges.push_back({i, j, it.value()});
    }
  std::vector<Triplet> t;
  t.reserve(2 * inc.edges.size());
  for (int e = 0; e < inc.num_edges(); ++e) {
    const double s = std::sqrt(inc.edges[e].weight);
    t.emplace_back(e, inc.edges[e].source, -s);
    t.emplace_back(e, inc.edges[e].target, s);
  }
  inc.gradient.resize(inc.num_edges(), g.N());
  inc.gradient.setFromTriplets(t.begin(), t.end());
  inc.gradient.makeCompressed();
  return inc;
}

}  // namespace

std::shared_ptr<const IncidenceOperator> adj2vec(const Graph& g) {
  return g.cache().incidence.get_or_compute([&g] { return build_incidence(g); });
}

Eigen::MatrixXd grad(const IncidenceOperator& inc, const Eigen::MatrixXd& f) {
  if (f.rows() != inc.num_vertices)
    throw Error(ErrorCode::ShapeMismatch, "grad expects " + std::to_string(inc.num_vertices) + " rows");
  return inc.gradient * f;
}

Eigen::MatrixXd div(const IncidenceOperator& inc, const Eigen::MatrixXd& s) {
  if (s.rows() != inc.num_edges())
    throw Error(ErrorCode::ShapeMismatch, "div expects " + std::to_string(inc.num_edges()) + " rows");
  return inc.gradient.transpose() * s;
}

double graph_tv(const Graph& g, const Eigen::VectorXd& f) {
  return grad(*adj2vec(g), f).cwiseAbs().sum();
}

std::string edges_csv(const IncidenceOperator& inc) {
  std::ostringstream out;
  for (const auto& e : inc.edges)
    out << e.source << ',' << e.target << ',' << io::format_double(e.weight) << '\n';
  return out.str();
}

}  // namespace graphsig
