#include <doctest.h>

#include "graphsig/error.hpp"
#include "graphsig/generators.hpp"
#include "graphsig/graph.hpp"
#include "oracles.hpp"

using namespace graphsig;

namespace {

Graph dense_graph(const Eigen::MatrixXd& W, Directedness dir = Directedness::Auto,
                  std::optional<LaplacianKind> kind = std::nullopt) {
  GraphOptions o;
  o.directed = dir;
  o.kind = kind;
  return graph_from_dense(W, o);
}

template <class Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadParameter;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("single edge") {
    Eigen::MatrixXd W(2, 2);
    W << 0, 1, 1, 0;
    const Graph g = dense_graph(W);
    CHECK(g.N() == 2);
    CHECK(g.Ne() == 1);
    CHECK_FALSE(g.directed());
    CHECK(g.d() == Eigen::Vector2d(1, 1));
    Eigen::MatrixXd L(2, 2);
    L << 1, -1, -1, 1;
    CHECK(oracle::dense(g.L()) == L);
  }

  TEST_CASE("directed counts arcs") {
    Eigen::MatrixXd W(3, 3);
    W << 0, 2, 0, 0, 0, 3, 0, 0, 0;
    const Graph g = dense_graph(W, Directedness::Directed, LaplacianKind::CombinatorialD);
    CHECK(g.directed());
    CHECK(g.Ne() == 2);
    CHECK(g.d() == Eigen::Vector3d(2, 3, 0));
  }

  TEST_CASE("self loops are dropped and flagged") {
    Eigen::MatrixXd W(3, 3);
    W << 0, 1, 0, 1, 5, 1, 0, 1, 0;
    const Graph g = dense_graph(W);
    CHECK(g.self_loops_dropped());
    CHECK(oracle::dense(g.W()).diagonal().cwiseAbs().maxCoeff() == 0.0);
    CHECK(g.Ne() == 2);
  }

  TEST_CASE("explicit zeros are pruned") {
    std::vector<Triplet> t{{0, 1, 0.0}, {1, 0, 0.0}, {1, 2, 1.0}, {2, 1, 1.0}};
    SparseMatrix W(3, 3);
    W.setFromTriplets(t.begin(), t.end());
    const Graph g = graph_from_weights(W);
    CHECK(g.W().nonZeros() == 2);
    CHECK(g.Ne() == 1);
  }

  TEST_CASE("asymmetric undirected input is averaged") {
    Eigen::MatrixXd W(2, 2);
    W << 0, 2, 0, 0;
    const Graph g = dense_graph(W, Directedness::Undirected);
    CHECK(g.symmetrized());
    CHECK(g.W().coeff(0, 1) == 1.0);
    CHECK(g.W().coeff(1, 0) == 1.0);
  }

  TEST_CASE("auto detects direction") {
    Eigen::MatrixXd W(2, 2);
    W << 0, 2, 0, 0;
    CHECK(dense_graph(W).directed());
    W(1, 0) = 2;
    CHECK_FALSE(dense_graph(W).directed());
  }

  TEST_CASE("construction errors") {
    CHECK(code_of([] { graph_from_dense(Eigen::MatrixXd::Zero(2, 3)); }) == ErrorCode::NonSquare);
    CHECK(code_of([] { graph_from_dense(Eigen::MatrixXd::Zero(0, 0)); }) == ErrorCode::EmptyGraph);
    Eigen::MatrixXd W(2, 2);
    W << 0, -1, -1, 0;
    CHECK(code_of([&] { graph_from_dense(W); }) == ErrorCode::NegativeWeight);
    W << 0, NAN, NAN, 0;
    CHECK(code_of([&] { graph_from_dense(W); }) == ErrorCode::NonFinite);
    GraphOptions o;
    o.coords = Eigen::MatrixXd::Zero(2, 4);
    W << 0, 1, 1, 0;
    CHECK(code_of([&] { graph_from_dense(W, o); }) == ErrorCode::ShapeMismatch);
  }

  TEST_CASE("path(3) combinatorial Laplacian") {
    Eigen::Matrix3d expected;
    expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    CHECK(oracle::dense(path(3).L()) == Eigen::MatrixXd(expected));
  }

  TEST_CASE("normalized spectrum lies in [0, 2]") {
    const Graph g = path(3).with_laplacian(LaplacianKind::NormalizedU);
    const Eigen::VectorXd e = oracle::eigenvalues_general(oracle::dense(g.L()));
    CHECK(e.minCoeff() >= -1e-10);
    CHECK(e.maxCoeff() <= 2 + 1e-10);
  }

  TEST_CASE("normalized Laplacian zeroes isolated vertices") {
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(3, 3);
    W(0, 1) = W(1, 0) = 1;
    const Graph g = dense_graph(W, Directedness::Undirected, LaplacianKind::NormalizedU);
    const Eigen::MatrixXd L = oracle::dense(g.L());
    CHECK(L.row(2).cwiseAbs().sum() == 0.0);
    CHECK(L.col(2).cwiseAbs().sum() == 0.0);
  }

  TEST_CASE("directed 2-cycle distribution Laplacian") {
    Eigen::MatrixXd W(2, 2);
    W << 0, 1, 1, 0;
    const Graph g = dense_graph(W, Directedness::Directed, LaplacianKind::DistributionNormalizedD);
    const Eigen::MatrixXd expected = oracle::dense_laplacian(W, LaplacianKind::DistributionNormalizedD);
    CHECK(oracle::max_abs(oracle::dense(g.L()) - expected) <= 1e-12);
    Eigen::MatrixXd hand(2, 2);
    hand << 1, -1, -1, 1;
    CHECK(oracle::max_abs(expected - hand) <= 1e-12);
  }

  TEST_CASE("every Laplacian kind matches the dense formula on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 5 + trial * 3;
      const bool directed = trial % 2 == 1;
      const Eigen::MatrixXd W = oracle::random_weights(rng, n, 0.3, directed, true);
      const Graph g = dense_graph(W, directed ? Directedness::Directed : Directedness::Undirected);
      std::vector<LaplacianKind> kinds{LaplacianKind::CombinatorialD, LaplacianKind::DegreeNormalizedD,
                                       LaplacianKind::DistributionNormalizedD};
      if (!directed) {
        kinds.push_back(LaplacianKind::CombinatorialU);
        kinds.push_back(LaplacianKind::NormalizedU);
      }
      for (auto kind : kinds) {
        CAPTURE(trial);
        CAPTURE(laplacian_kind_name(kind));
        const Eigen::MatrixXd L = oracle::dense(laplacian(g, kind));
        const Eigen::MatrixXd ref = oracle::dense_laplacian(oracle::dense(g.W()), kind);
        CHECK(oracle::max_abs(L - ref) <= 1e-10);
      }
    }
  }

  TEST_CASE("undirected kinds on a directed graph are rejected") {
    Eigen::MatrixXd W(2, 2);
    W << 0, 1, 0, 0;
    const Graph g = dense_graph(W, Directedness::Directed, LaplacianKind::CombinatorialD);
    CHECK(code_of([&] { laplacian(g, LaplacianKind::CombinatorialU); }) == ErrorCode::KindMismatch);
    CHECK(code_of([&] { laplacian(g, LaplacianKind::DistributionNormalizedD); }) ==
          ErrorCode::NotStronglyConnected);
    CHECK(code_of([&] { laplacian(g, LaplacianKind::DegreeNormalizedD); }) == ErrorCode::ZeroDegreeVertex);
  }

  TEST_CASE("stationary distribution") {
    SUBCASE("directed ring is uniform") {
      Eigen::MatrixXd W = Eigen::MatrixXd::Zero(4, 4);
      for (int i = 0; i < 4; ++i) W(i, (i + 1) % 4) = 1;
      const auto dd = stationary_distribution(dense_graph(W, Directedness::Directed, LaplacianKind::CombinatorialD));
      CHECK(oracle::max_abs(dd.pi - Eigen::VectorXd::Constant(4, 0.25)) <= 1e-12);
    }
    SUBCASE("sink vertex") {
      Eigen::MatrixXd W(2, 2);
      W << 0, 1, 0, 0;
      const Graph g = dense_graph(W, Directedness::Directed, LaplacianKind::CombinatorialD);
      CHECK(code_of([&] { stationary_distribution(g); }) == ErrorCode::ZeroOutDegree);
    }
    SUBCASE("random strongly connected graph") {
      std::mt19937_64 rng(11);
      const Eigen::MatrixXd W = oracle::random_weights(rng, 10, 0.3, true, true);
      const Graph g = dense_graph(W, Directedness::Directed, LaplacianKind::CombinatorialD);
      const auto dd = stationary_distribution(g);
      const Eigen::MatrixXd P = oracle::dense(dd.P);
      CHECK((P.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-12);
      CHECK((dd.pi.transpose() * P - dd.pi.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(std::abs(dd.pi.sum() - 1.0) <= 1e-12);
      CHECK(dd.pi.minCoeff() > 0.0);
      CHECK(oracle::max_abs(dd.pi - oracle::perron_pi(W)) <= 1e-9);
    }
    SUBCASE("iteration cap reports NotConverged") {
      std::mt19937_64 rng(3);
      const Eigen::MatrixXd W = oracle::random_weights(rng, 30, 0.05, true, true);
      const Graph g = dense_graph(W, Directedness::Directed, LaplacianKind::CombinatorialD);
      CHECK(code_of([&] { stationary_distribution(g, 2, 1e-15); }) == ErrorCode::NotConverged);
    }
  }

  TEST_CASE("kind names round trip") {
    for (auto kind : {LaplacianKind::CombinatorialU, LaplacianKind::NormalizedU, LaplacianKind::CombinatorialD,
                      LaplacianKind::DegreeNormalizedD, LaplacianKind::DistributionNormalizedD})
      CHECK(parse_laplacian_kind(laplacian_kind_name(kind)) == kind);
    CHECK(parse_laplacian_kind("normalized") == LaplacianKind::NormalizedU);
    CHECK(code_of([] { parse_laplacian_kind("spectral"); }) == ErrorCode::BadParameter);
  }

  TEST_CASE("connectivity") {
    CHECK(is_connected(ring(5)));
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(4, 4);
    W(0, 1) = W(1, 0) = W(2, 3) = W(3, 2) = 1;
    CHECK_FALSE(is_connected(graph_from_dense(W)));
  }
}

TEST_SUITE("properties") {
  TEST_CASE("graph invariants on random inputs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 40);
      const bool directed = rng() % 2;
      Eigen::MatrixXd W = oracle::random_weights(rng, n, 0.25, directed, rng() % 2);
      const Graph g = dense_graph(W, directed ? Directedness::Directed : Directedness::Undirected,
                                  directed ? std::optional(LaplacianKind::CombinatorialD) : std::nullopt);
      const Eigen::MatrixXd Wd = oracle::dense(g.W());
      CHECK(Wd.diagonal().cwiseAbs().sum() == 0.0);
      CHECK(Wd.minCoeff() >= 0.0);
      for (int k = 0; k < g.W().outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(g.W(), k); it; ++it) CHECK(it.value() > 0.0);
      const Eigen::VectorXd rows = Wd.rowwise().sum();
      CHECK(((g.d() - rows).array().abs() <= 1e-12 * rows.array().abs().max(1.0)).all());
      if (!directed) {
        CHECK(oracle::max_abs(Wd - Wd.transpose()) == 0.0);
        CHECK(g.Ne() * 2 == g.W().nonZeros());
        const Eigen::MatrixXd L = oracle::dense(g.L());
        CHECK(L.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(oracle::eigenvalues_general(L).minCoeff() >= -1e-10);
        const Eigen::MatrixXd Ln = oracle::dense(laplacian(g, LaplacianKind::NormalizedU));
        const Eigen::VectorXd en = oracle::eigenvalues_general(Ln);
        CHECK(en.minCoeff() >= -1e-10);
        CHECK(en.maxCoeff() <= 2 + 1e-10);
      } else {
        CHECK(g.Ne() == g.W().nonZeros());
      }
      CHECK(oracle::max_abs(oracle::dense(g.L()) - oracle::dense_laplacian(Wd, g.lap_kind())) <= 1e-12);
    }
  }

  TEST_CASE("combinatorial and distribution directed Laplacians are symmetric PSD") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::MatrixXd W = oracle::random_weights(rng, 6 + trial, 0.3, true, true);
      const Graph g = dense_graph(W, Directedness::Directed, LaplacianKind::CombinatorialD);
      for (auto kind : {LaplacianKind::CombinatorialD, LaplacianKind::DistributionNormalizedD}) {
        const Eigen::MatrixXd L = oracle::dense(laplacian(g, kind));
        CHECK(oracle::max_abs(L - L.transpose()) <= 1e-12);
        CHECK(oracle::eigenvalues_general(L).minCoeff() >= -1e-10);
      }
    }
  }
}
