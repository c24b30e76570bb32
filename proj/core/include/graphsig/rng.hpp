#pragma once

#include <cstdint>
#include <limits>

namespace graphsig {

/// Counter-based generator: the n-th draw is a pure function of (key, n).
/// split() derives an independent stream, so callers never share state.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  Rng split(std::uint64_t stream) const;

  result_type operator()();
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, both draws consumed).
  double normal();
  bool bernoulli(double p) { return uniform() < p; }

 private:
  Rng(std::uint64_t key, std::uint64_t counter, int) : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace graphsig
