#include "medge/sampler.hpp"

#include <algorithm>
#include <stdexcept>

#include "medge/counting.hpp"

namespace medge {

std::uint64_t Sampler::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound is 0");
  // Reject words below 2^64 mod bound; every residue then appears equally
  // often among the accepted words.
  const std::uint64_t cutoff = (-bound) % bound;
  for (;;) {
    const std::uint64_t word = next_u64();
    if (word >= cutoff) return word % bound;
  }
}

BigInt Sampler::uniform_below_big(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below_big: bound <= 0");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
  const std::uint64_t top_mask =
      top_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  std::vector<std::uint64_t> buffer(words);
  for (;;) {
    for (auto& w : buffer) w = next_u64();
    buffer.back() &= top_mask;
    BigInt value;
    mpz_import(value.get_mpz_t(), words, -1 /* little-endian words */,
               sizeof(std::uint64_t), 0, 0, buffer.data());
    if (value < bound) return value;
  }
}

std::vector<long> sample_composition(long n, long parts, Sampler& rng) {
  if (parts < 1 || parts > n) {
    throw std::invalid_argument("sample_composition: need 1 <= parts <= n");
  }
  // Partial Fisher-Yates over the cut points 1..n-1.
  std::vector<long> points(static_cast<std::size_t>(n - 1));
  for (long i = 0; i < n - 1; ++i) points[static_cast<std::size_t>(i)] = i + 1;
  const long take = parts - 1;
  for (long i = 0; i < take; ++i) {
    const auto j = i + static_cast<long>(rng.uniform_below(
                           static_cast<std::uint64_t>(n - 1 - i)));
    std::swap(points[static_cast<std::size_t>(i)],
              points[static_cast<std::size_t>(j)]);
  }
  std::vector<long> cuts(points.begin(), points.begin() + take);
  std::sort(cuts.begin(), cuts.end());
  std::vector<long> result;
  result.reserve(static_cast<std::size_t>(parts));
  long previous = 0;
  for (long c : cuts) {
    result.push_back(c - previous);
    previous = c;
  }
  result.push_back(n - previous);
  return result;
}

MultiEdgeTree sample_plane_tree(long k, Sampler& rng) {
  if (k < 1) throw std::invalid_argument("sample_plane_tree: k must be >= 1");
  if (k == 1) return {};
  const long m = k - 1;
  // m up-steps, m+1 down-steps; total sum -1. Exactly one rotation of the
  // shuffled word is a ballot sequence, and dropping its final down-step
  // leaves a uniform Dyck word of length 2m.
  std::vector<signed char> steps(static_cast<std::size_t>(2 * m + 1), -1);
  std::fill(steps.begin(), steps.begin() + m, static_cast<signed char>(1));
  for (long i = 2 * m; i > 0; --i) {
    const auto j = static_cast<long>(
        rng.uniform_below(static_cast<std::uint64_t>(i + 1)));
    std::swap(steps[static_cast<std::size_t>(i)],
              steps[static_cast<std::size_t>(j)]);
  }
  long prefix = 0, minimum = 1, min_pos = -1;
  for (long i = 0; i < 2 * m + 1; ++i) {
    prefix += steps[static_cast<std::size_t>(i)];
    if (prefix < minimum) {
      minimum = prefix;
      min_pos = i;
    }
  }
  // Rebuild the tree directly from the rotated word, skipping its last step.
  std::vector<std::vector<MultiEdgeTree::Edge>> stack;
  stack.emplace_back();
  for (long offset = 1; offset <= 2 * m; ++offset) {
    const auto i =
        static_cast<std::size_t>((min_pos + offset) % (2 * m + 1));
    if (steps[i] > 0) {
      stack.emplace_back();
    } else {
      MultiEdgeTree node{std::move(stack.back())};
      stack.pop_back();
      stack.back().push_back({1, std::move(node)});
    }
  }
  return MultiEdgeTree{std::move(stack.back())};
}

namespace {

void assign_multiplicities(MultiEdgeTree& node,
                           const std::vector<long>& parts,
                           std::size_t& next) {
  for (auto& edge : node.children) {
    edge.multiplicity = static_cast<int>(parts[next++]);
    assign_multiplicities(edge.child, parts, next);
  }
}

}  // namespace

MultiEdgeTree sample_tree(long n, Sampler& rng) {
  if (n < 0) throw std::invalid_argument("sample_tree: n must be >= 0");
  if (n == 0) return {};
  // Draw the vertex count by binary search on exact cumulative weights;
  // cumulative[i] = #trees with at most i+2 vertices.
  const VertexCountTable table = vertex_table(n);
  std::vector<BigInt> cumulative;
  cumulative.reserve(static_cast<std::size_t>(n));
  BigInt running = 0;
  for (long candidate = 2; candidate <= n + 1; ++candidate) {
    running += table.count[static_cast<std::size_t>(candidate)];
    cumulative.push_back(running);
  }
  const BigInt target = rng.uniform_below_big(a_n(n));
  const auto it =
      std::upper_bound(cumulative.begin(), cumulative.end(), target);
  if (it == cumulative.end()) {
    throw std::logic_error("sample_tree: cumulative weights broken");
  }
  const long k = 2 + static_cast<long>(it - cumulative.begin());
  MultiEdgeTree tree = sample_plane_tree(k, rng);
  const std::vector<long> parts = sample_composition(n, k - 1, rng);
  std::size_t next = 0;
  assign_multiplicities(tree, parts, next);
  return tree;
}

MultiEdgeTree sample_tree(long n, std::uint64_t seed) {
  Sampler rng(seed);
  return sample_tree(n, rng);
}

}  // namespace medge
