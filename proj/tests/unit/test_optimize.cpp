#include <doctest.h>

#include <random>

#include "graphsig/diff.hpp"
#include "graphsig/error.hpp"
#include "graphsig/filters.hpp"
#include "graphsig/generators.hpp"
#include "graphsig/optimize.hpp"
#include "graphsig/spectral.hpp"
#include "error_code.hpp"
#include "oracles.hpp"
#include "tasks.hpp"

using namespace graphsig;
using testutil::code_of;

namespace {

bool non_increasing(const std::vector<double>& h) {
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] > h[i - 1] + 1e-12 * std::abs(h[i - 1])) return false;
  return true;
}

// Smooth signal: a few low Fourier modes.
Eigen::VectorXd low_pass_signal(const Graph& g, std::mt19937_64& rng, int modes) {
  const auto sd = compute_fourier_basis(g);
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(g.N());
  for (int i = 1; i <= modes; ++i) f += n(rng) * sd->U.col(i);
  return f * std::sqrt(static_cast<double>(g.N()) / modes);
}

Eigen::VectorXd noise(std::mt19937_64& rng, int n, double sigma) {
  std::normal_distribution<double> d(0.0, sigma);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

}  // namespace

TEST_SUITE("optimize") {
  TEST_CASE("soft threshold") {
    Eigen::MatrixXd c(1, 5);
    c << -3, -0.5, 0, 0.5, 3;
    Eigen::MatrixXd expected(1, 5);
    expected << -2, 0, 0, 0, 2;
    CHECK(soft_threshold(c, 1.0) == expected);
  }

  TEST_CASE("prox_tv on a single edge") {
    // Closed form: the endpoints move toward each other by gamma until they meet.
    const Graph g = path(2);
    const Eigen::Vector2d y(0.0, 1.0);
    for (double gamma : {0.1, 0.3, 0.7}) {
      const ProxTvResult r = prox_tv(g, y, gamma, {5000, 1e-12});
      const double shift = std::min(gamma, 0.5);
      CHECK(std::abs(r.x[0] - shift) <= 1e-6);
      CHECK(std::abs(r.x[1] - (1 - shift)) <= 1e-6);
    }
  }

  TEST_CASE("prox_tv limits") {
    const Graph g = sensor(50, 1);
    std::mt19937_64 rng(5);
    const Eigen::VectorXd y = noise(rng, 50, 1.0);
    const ProxTvResult tiny = prox_tv(g, y, 1e-15);
    CHECK(oracle::max_abs(tiny.x - y) <= 1e-10);

    const Eigen::VectorXd c = Eigen::VectorXd::Constant(50, 1.5);
    const ProxTvResult flat = prox_tv(g, c, 2.0);
    CHECK(flat.x == c);
    CHECK(flat.report.converged);

    const ProxTvResult huge = prox_tv(g, y, 1e6, {20000, 1e-8});
    CHECK(oracle::max_abs(huge.x - Eigen::VectorXd::Constant(50, y.mean())) <= 1e-3);
  }

  TEST_CASE("prox_tv on two cliques") {
    const std::vector<int> blocks{10, 10};
    const Graph g = stochastic_block_model(blocks, 1.0, 0.0, 1);
    std::mt19937_64 rng(6);
    Eigen::VectorXd truth = Eigen::VectorXd::Zero(20);
    truth.tail(10).setOnes();
    const Eigen::VectorXd n = noise(rng, 20, 0.1);
    const Eigen::VectorXd y = truth + n;
    const ProxTvResult r = prox_tv(g, y, 0.1, {10000, 1e-10});
    CHECK(r.report.converged);
    CHECK(non_increasing(r.report.objective_history));
    for (int b = 0; b < 2; ++b) {
      const Eigen::VectorXd xb = r.x.segment(10 * b, 10);
      const Eigen::VectorXd nb = n.segment(10 * b, 10);
      CHECK(xb.maxCoeff() - xb.minCoeff() <= (nb.maxCoeff() - nb.minCoeff()) / 5);
    }
    // Subgradient optimality: x - y + gamma D^T s = 0 with s in the sign set of Dx.
    const auto inc = adj2vec(g);
    const Eigen::VectorXd Dx = inc->gradient * r.x;
    const Eigen::VectorXd s = r.dual / 0.1;
    CHECK(oracle::max_abs(r.x - y + inc->gradient.transpose() * r.dual) <= 1e-12);
    for (int e = 0; e < inc->num_edges(); ++e) {
      CHECK(std::abs(s[e]) <= 1 + 1e-12);
      if (std::abs(Dx[e]) > 1e-6) CHECK(std::abs(s[e] - (Dx[e] > 0 ? 1 : -1)) <= 1e-4);
    }
  }

  TEST_CASE("tik_denoise") {
    const Graph g = sensor(50, 2);
    std::mt19937_64 rng(7);
    const Eigen::VectorXd y = noise(rng, 50, 1.0);
    CHECK(oracle::max_abs(tik_denoise(g, y, 0.0).x - y) <= 1e-12);

    const Eigen::MatrixXd A = Eigen::MatrixXd::Identity(50, 50) + 2.0 * 0.5 * oracle::dense(g.L());
    const DenoiseResult r = tik_denoise(g, y, 0.5);
    CHECK(r.report.converged);
    CHECK(oracle::max_abs(r.x - A.ldlt().solve(y)) <= 1e-8);
    CHECK(non_increasing(r.report.objective_history));

    const DenoiseResult big = tik_denoise(g, y, 1e6);
    CHECK(oracle::max_abs(big.x - Eigen::VectorXd::Constant(50, y.mean())) <= 1e-3);

    const Eigen::VectorXd z = noise(rng, 50, 1.0);
    const Eigen::VectorXd lin = tik_denoise(g, 2.0 * y - 3.0 * z, 0.5).x;
    CHECK(oracle::max_abs(lin - (2.0 * r.x - 3.0 * tik_denoise(g, z, 0.5).x)) <= 1e-8);

    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(3, 3);
    W(0, 1) = W(1, 2) = W(2, 0) = 1;
    W(0, 2) = 2;
    const Graph unbalanced =
        graph_from_dense(W, {Directedness::Directed}).with_laplacian(LaplacianKind::DegreeNormalizedD);
    CHECK(code_of([&] { tik_denoise(unbalanced, Eigen::VectorXd::Ones(3), 1.0); }) ==
          ErrorCode::NonSymmetricLaplacian);
    CHECK(code_of([&] { tik_denoise(g, y, -1.0); }) == ErrorCode::BadParameter);
    CHECK(code_of([&] { tik_denoise(g, Eigen::VectorXd::Ones(5), 1.0); }) == ErrorCode::ShapeMismatch);
  }

  TEST_CASE("wavelet_denoise limits") {
    const Graph g = sensor(64, 3);
    compute_fourier_basis(g);
    const FilterBank fb = design_itersine(graph_lmax(g), 6);
    std::mt19937_64 rng(8);
    const Eigen::VectorXd y = noise(rng, 64, 1.0);
    CHECK(oracle::max_abs(wavelet_denoise(g, fb, y, 0.0, FilterMethod::exact()).x - y) <= 1e-10);
    const double cmax = filter_analysis(g, fb, y, FilterMethod::exact()).cwiseAbs().maxCoeff();
    CHECK(wavelet_denoise(g, fb, y, cmax, FilterMethod::exact()).x.cwiseAbs().maxCoeff() == 0.0);
    const FilterBank hat = design_mexican_hat(graph_lmax(g), 4);
    CHECK(code_of([&] { wavelet_denoise(g, hat, y, 0.1); }) == ErrorCode::NotTightFrame);
  }

  TEST_CASE("wavelet_denoise improves SNR") {
    int improved = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const tasks::DenoiseTrial t = tasks::wavelet_denoise_trial(seed);
      if (t.snr_out > t.snr_in) ++improved;
    }
    CHECK(improved >= 18);
  }

  TEST_CASE("solve_bpdn single atom") {
    const Graph g = sensor(40, 12);
    compute_fourier_basis(g);
    const FilterBank fb = design_itersine(graph_lmax(g), 4);
    Eigen::MatrixXd atom = Eigen::MatrixXd::Zero(40, 4);
    atom(17, 1) = 1.0;
    const Eigen::VectorXd y = filter_synthesis(g, fb, atom, FilterMethod::exact()).col(0);
    const BpdnResult r = solve_bpdn(g, fb, y, std::nullopt, 1e-3, {20000, 1e-10}, FilterMethod::exact());
    Eigen::Index row = 0, col = 0;
    r.coefficients.cwiseAbs().maxCoeff(&row, &col);
    CHECK(row == 17);
    CHECK(col == 1);
  }

  TEST_CASE("solve_bpdn optimality") {
    const Graph g = sensor(40, 4);
    compute_fourier_basis(g);
    const FilterBank fb = design_mexican_hat(graph_lmax(g), 3);
    std::mt19937_64 rng(9);
    const Eigen::VectorXd y = low_pass_signal(g, rng, 3);
    const double lambda = 0.05;
    const BpdnResult r = solve_bpdn(g, fb, y, std::nullopt, lambda, {50000, 1e-9}, FilterMethod::exact());
    INFO("iterations ", r.report.iterations, ", residual ", r.report.residual);
    CHECK(r.coefficients.rows() == 40);
    CHECK(r.coefficients.cols() == fb.size());
    CHECK(r.report.converged);
    CHECK(non_increasing(r.report.objective_history));
    // Subgradient conditions of the lasso.
    const Eigen::VectorXd residual = y - filter_synthesis(g, fb, r.coefficients, FilterMethod::exact()).col(0);
    const Eigen::MatrixXd corr = filter_analysis(g, fb, residual, FilterMethod::exact());
    for (Eigen::Index i = 0; i < corr.size(); ++i) {
      CHECK(std::abs(corr(i)) <= lambda * (1 + 1e-3) + 1e-8);
      if (std::abs(r.coefficients(i)) > 1e-6)
        CHECK(std::abs(corr(i) - lambda * (r.coefficients(i) > 0 ? 1 : -1)) <= 1e-3 * lambda + 1e-6);
    }
  }

  TEST_CASE("solve_bpdn large lambda gives zero") {
    const Graph g = sensor(30, 5);
    const FilterBank fb = design_itersine(estimate_lmax(g), 4);
    std::mt19937_64 rng(10);
    const Eigen::VectorXd y = noise(rng, 30, 1.0);
    const double lambda = 1.01 * filter_analysis(g, fb, y).cwiseAbs().maxCoeff();
    const BpdnResult r = solve_bpdn(g, fb, y, std::nullopt, lambda);
    CHECK(r.coefficients.cwiseAbs().maxCoeff() == 0.0);
    CHECK(code_of([&] { solve_bpdn(g, fb, y, std::nullopt, 0.0); }) == ErrorCode::BadParameter);
    CHECK(code_of([&] { solve_bpdn(g, fb, y, Eigen::VectorXd::Ones(3), 1.0); }) == ErrorCode::ShapeMismatch);
  }

  TEST_CASE("solve_bpdn inpainting beats zero fill") {
    const Graph g = sensor(80, 6);
    compute_fourier_basis(g);
    const FilterBank fb = design_itersine(graph_lmax(g), 6);
    std::mt19937_64 rng(11);
    const Eigen::VectorXd truth = low_pass_signal(g, rng, 3);
    Eigen::VectorXd mask(80);
    std::bernoulli_distribution keep(0.6);
    for (int i = 0; i < 80; ++i) mask[i] = keep(rng) ? 1.0 : 0.0;
    const Eigen::VectorXd y = mask.cwiseProduct(truth);
    const BpdnResult r = solve_bpdn(g, fb, y, mask, 1e-3, {5000, 1e-8}, FilterMethod::exact());
    const Eigen::VectorXd rec = filter_synthesis(g, fb, r.coefficients, FilterMethod::exact()).col(0);
    const Eigen::VectorXd hidden = Eigen::VectorXd::Ones(80) - mask;
    const double err = hidden.cwiseProduct(rec - truth).norm();
    const double zero_fill = hidden.cwiseProduct(truth).norm();
    CHECK(err < 0.5 * zero_fill);
  }
}

TEST_SUITE("properties") {
  TEST_CASE("prox_tv keeps the mean and meets the gap tolerance") {
    std::mt19937_64 rng(40);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 40);
      const Graph g = graph_from_dense(oracle::random_weights(rng, n, 0.2, false, true));
      const Eigen::VectorXd y = noise(rng, n, 1.0);
      const double gamma = 0.05 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng);
      const ProxTvResult r = prox_tv(g, y, gamma, {20000, 1e-6});
      CHECK(r.report.converged);
      CHECK(r.report.residual <= 1e-6);
      CHECK(std::abs(r.x.sum() - y.sum()) <= 1e-9 * n);
      CHECK(r.dual.cwiseAbs().maxCoeff() <= gamma * (1 + 1e-12));
      CHECK(non_increasing(r.report.objective_history));
      CHECK(graph_tv(g, r.x) <= graph_tv(g, y) + 1e-9);
    }
  }

  TEST_CASE("prox_tv total variation shrinks with gamma") {
    const Graph g = sensor(40, 7);
    std::mt19937_64 rng(41);
    const Eigen::VectorXd y = noise(rng, 40, 1.0);
    double previous = graph_tv(g, y);
    for (double gamma : {0.01, 0.05, 0.2, 1.0}) {
      const double tv = graph_tv(g, prox_tv(g, y, gamma, {20000, 1e-9}).x);
      CHECK(tv <= previous + 1e-6);
      previous = tv;
    }
  }

  TEST_CASE("tik_denoise matches the dense solve on random graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 60);
      const Graph g = graph_from_dense(oracle::random_weights(rng, n, 0.15, false, trial % 2 == 0));
      const Eigen::VectorXd y = noise(rng, n, 1.0);
      const double gamma = std::uniform_real_distribution<double>(0.01, 5.0)(rng);
      const Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n) + 2.0 * gamma * oracle::dense(g.L());
      CHECK(oracle::max_abs(tik_denoise(g, y, gamma).x - A.ldlt().solve(y)) <= 1e-8);
    }
  }
}
