#include "medge/bijection.hpp"

#include <stdexcept>

namespace medge {

namespace {

DAryNode to_dary_node(const MultiEdgeTree& node, int bound) {
  DAryNode out;
  out.children.reserve(node.children.size());
  long position = 0;
  for (const auto& edge : node.children) {
    if (edge.multiplicity < 1) {
      throw std::invalid_argument("multiplicity must be positive");
    }
    position += edge.multiplicity;
    if (position > bound) {
      throw std::invalid_argument("out-degree exceeds the bound " +
                                  std::to_string(bound));
    }
    out.children.push_back(
        {static_cast<int>(position), to_dary_node(edge.child, bound)});
  }
  return out;
}

MultiEdgeTree from_dary_node(const DAryNode& node, int bound) {
  MultiEdgeTree out;
  out.children.reserve(node.children.size());
  int previous = 0;
  for (const auto& slot : node.children) {
    if (slot.position <= previous || slot.position > bound) {
      throw std::invalid_argument("positions must be strictly increasing "
                                  "within 1..bound");
    }
    out.children.push_back(
        {slot.position - previous, from_dary_node(slot.child, bound)});
    previous = slot.position;
  }
  return out;
}

}  // namespace

DAryTree to_dary(const DAryMultiEdgeTree& t) {
  if (t.bound < 1) throw std::invalid_argument("bound must be >= 1");
  return {t.bound, to_dary_node(t.tree, t.bound)};
}

DAryMultiEdgeTree from_dary(const DAryTree& t) {
  if (t.bound < 1) throw std::invalid_argument("bound must be >= 1");
  return {t.bound, from_dary_node(t.root, t.bound)};
}

}  // namespace medge
