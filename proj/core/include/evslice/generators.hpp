#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "evslice/graph.hpp"

namespace evslice {

struct RandomGraphOptions {
  std::size_t vertices = 10;
  std::size_t edges = 50;
  bool directed = false;
  double loop_probability = 0.05;
  // Probability of repeating an earlier pair instead of drawing a fresh one.
  double repeat_probability = 0.2;
  std::size_t influential = 1;
};

RelationalEventGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options);

// Each of n distinct pairs occurs twice: pair i at times n-i-1 and n+perm[i].
// The slice [n-X-1, n+Y] then repeats exactly #{i <= X : perm[i] <= Y} pairs.
RelationalEventGraph repeated_pairs_instance(std::span<const std::int64_t> perm);

// Influential root r, middle vertices a_i and leaves b_i: edge r->a_i at time
// n-i and a_i->b_i at time n+perm[i]. Leaf b_i is influenced in a slice only
// when both of its edges are inside.
RelationalEventGraph two_level_influence_instance(std::span<const std::int64_t> perm);

// Throws std::invalid_argument unless perm is a permutation of 0..n-1.
void check_permutation(std::span<const std::int64_t> perm);

}  // namespace evslice
