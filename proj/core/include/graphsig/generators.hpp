#pragma once

#include <cstdint>
#include <span>

#include "graphsig/graph.hpp"

namespace graphsig {

// Deterministic graphs. All carry unit weights and coordinates.
Graph ring(int n);
Graph path(int n);
/// Star of `star_degree` leaves around vertex 0 with a path of `tail_length`
/// vertices hanging off the last leaf.
Graph comet(int star_degree, int tail_length);
Graph grid2d(int rows, int cols);

// Random graphs. The seed is mandatory and the result is a pure function of
// the arguments.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Block sizes must sum to n.
Graph stochastic_block_model(int n, std::span<const int> block_sizes, double p_in, double p_out,
                             std::uint64_t seed);
Graph stochastic_block_model(std::span<const int> block_sizes, double p_in, double p_out,
                             std::uint64_t seed);

struct CommunityParams {
  int communities = 4;
  double p_in = 0.5;
  double p_out = 0.01;
};
/// Stochastic block model with near-equal blocks and dense-in/sparse-out defaults.
Graph community(int n, std::uint64_t seed, const CommunityParams& params = {});

/// Uniform points in the unit square joined by a k-NN graph; redrawn (from
/// derived streams) until connected.
Graph sensor(int n, std::uint64_t seed, int k = 6);

struct SwissRollParams {
  double noise = 0.0;
  double height = 10.0;
  int k = 6;
};
Graph swiss_roll(int n, std::uint64_t seed, const SwissRollParams& params = {});

struct TwoMoonsParams {
  double radius = 1.0;
  double noise = 0.05;
  int k = 5;
};
Graph two_moons(int n, std::uint64_t seed, const TwoMoonsParams& params = {});

}  // namespace graphsig
