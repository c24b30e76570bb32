#include "graphsig/rng.hpp"

#include <cmath>
#include <numbers>

namespace graphsig {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed + kGolden) ^ mix64(stream * kGolden + 0x632be59bd9b4e019ULL)) {}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(mix64(key_ ^ mix64(stream + 0x2545f4914f6cdd1dULL)), 0, 0);
}

Rng::result_type Rng::operator()() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double Rng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace graphsig
