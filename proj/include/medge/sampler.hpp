#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "medge/bigint.hpp"
#include "medge/tree.hpp"

namespace medge {

/// Seeded random source with platform-independent output. The engine is
/// std::mt19937_64, whose word sequence the standard pins down exactly;
/// bounded draws use rejection on raw words instead of the (unspecified)
/// standard distributions, so identical seeds give identical results
/// everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform value in [0, bound); bound must be positive. Unbiased via
  /// rejection of the incomplete top cycle.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform big integer in [0, bound) by drawing bit blocks and rejecting
  /// overshoots.
  BigInt uniform_below_big(const BigInt& bound);

 private:
  std::mt19937_64 engine_;
};

/// Uniform composition of n into `parts` positive parts (an ordered tuple
/// summing to n), via a uniform (parts-1)-subset of cut points in 1..n-1.
/// Requires 1 <= parts <= n.
std::vector<long> sample_composition(long n, long parts, Sampler& rng);

/// Uniform plane rooted tree with k vertices (all multiplicities 1), via
/// cycle-lemma rotation of a random lattice word. O(k) time.
MultiEdgeTree sample_plane_tree(long k, Sampler& rng);

/// Exactly uniform multi-edge tree of size n: the vertex count k is drawn
/// from its exact big-integer distribution, then a uniform plane tree with
/// k vertices is decorated with a uniform composition of n into k-1
/// multiplicities.
MultiEdgeTree sample_tree(long n, Sampler& rng);

/// Convenience overload: deterministic in (n, seed).
MultiEdgeTree sample_tree(long n, std::uint64_t seed);

}  // namespace medge
