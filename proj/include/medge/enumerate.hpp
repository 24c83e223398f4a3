#pragma once

#include <functional>

#include "medge/bigint.hpp"
#include "medge/tree.hpp"

namespace medge {

/// Exhaustive generation is exponential; calls above this ceiling are
/// refused unless the caller raises it explicitly.
inline constexpr int kOracleCeiling = 10;

using MultiEdgeVisitor = std::function<void(const MultiEdgeTree&)>;
using DAryMultiVisitor = std::function<void(const DAryMultiEdgeTree&)>;
using DAryVisitor = std::function<void(const DAryTree&)>;

/// Visits every plane rooted multi-edge tree with exactly `n_edges` edges
/// once, in a fixed order (first-child multiplicity, then first-child
/// subtree by size and recursively, then the remaining children). Returns
/// the number of trees visited. The visited tree is only valid for the
/// duration of the callback.
BigInt enumerate_multi_edge(int n_edges, const MultiEdgeVisitor& visit,
                            int ceiling = kOracleCeiling);

/// Visits every multi-edge tree with `n_vertices` vertices whose outgoing
/// multiplicities sum to at most `bound` at each vertex.
BigInt enumerate_dary_multi(int bound, int n_vertices,
                            const DAryMultiVisitor& visit,
                            int ceiling = kOracleCeiling);

/// Visits every pruned d-ary tree with `n_vertices` vertices.
BigInt enumerate_dary(int bound, int n_vertices, const DAryVisitor& visit,
                      int ceiling = kOracleCeiling);

}  // namespace medge
