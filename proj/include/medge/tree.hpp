#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace medge {

/// Rooted plane tree whose parent links carry positive edge multiplicities.
/// Child order is significant. The size of a tree is its total edge count,
/// i.e. the sum of all link multiplicities.
struct MultiEdgeTree {
  struct Edge;
  std::vector<Edge> children;

  bool is_leaf() const { return children.empty(); }
};

struct MultiEdgeTree::Edge {
  int multiplicity = 1;  // >= 1
  MultiEdgeTree child;
};

bool operator==(const MultiEdgeTree& a, const MultiEdgeTree& b);
inline bool operator!=(const MultiEdgeTree& a, const MultiEdgeTree& b) {
  return !(a == b);
}

/// Node of a pruned d-ary tree: children occupy distinct positions in 1..d,
/// stored in strictly increasing order.
struct DAryNode {
  struct Slot;
  std::vector<Slot> children;

  bool is_leaf() const { return children.empty(); }
};

struct DAryNode::Slot {
  int position = 1;  // 1-based
  DAryNode child;
};

bool operator==(const DAryNode& a, const DAryNode& b);
inline bool operator!=(const DAryNode& a, const DAryNode& b) {
  return !(a == b);
}

/// Multi-edge tree whose per-vertex outgoing multiplicities sum to at most
/// `bound`.
struct DAryMultiEdgeTree {
  int bound = 1;
  MultiEdgeTree tree;
};

/// Pruned d-ary tree with its positional bound.
struct DAryTree {
  int bound = 1;
  DAryNode root;
};

inline bool operator==(const DAryMultiEdgeTree& a, const DAryMultiEdgeTree& b) {
  return a.bound == b.bound && a.tree == b.tree;
}
inline bool operator==(const DAryTree& a, const DAryTree& b) {
  return a.bound == b.bound && a.root == b.root;
}

struct TreeStats {
  long height = 0;    // tree links on the longest root path; multiplicities
                      // do not add to height
  long vertices = 1;
  long leaves = 1;
  long size = 0;      // total edge count, multiplicities included
  std::map<int, long> children_histogram;  // r -> #vertices with r children

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

TreeStats stats(const MultiEdgeTree& t);
TreeStats stats(const DAryNode& t);
inline TreeStats stats(const DAryMultiEdgeTree& t) { return stats(t.tree); }
inline TreeStats stats(const DAryTree& t) { return stats(t.root); }

long tree_size(const MultiEdgeTree& t);

/// True when every vertex's outgoing multiplicities sum to at most `bound`.
bool satisfies_degree_bound(const MultiEdgeTree& t, int bound);
inline bool is_valid(const DAryMultiEdgeTree& t) {
  return t.bound >= 1 && satisfies_degree_bound(t.tree, t.bound);
}
/// Positions strictly increasing and within 1..bound at every vertex.
bool is_valid(const DAryTree& t);

/// Canonical text form: nested parenthesized lists with multiplicities,
/// e.g. `(2:(),1:())`; a single vertex is `()`.
std::string format_tree(const MultiEdgeTree& t);
MultiEdgeTree parse_tree(std::string_view text);

/// Same shape with positions instead of multiplicities.
std::string format_dary(const DAryNode& t);
DAryNode parse_dary(std::string_view text);

/// TreeStats as a JSON object (height, vertices, leaves, size,
/// children_histogram).
std::string stats_json(const TreeStats& s);

}  // namespace medge
