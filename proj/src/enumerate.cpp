#include "medge/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace medge {

namespace {

void check_budget(int value, int ceiling, const char* what) {
  if (value < 0) throw std::invalid_argument(std::string(what) + " negative");
  if (value > ceiling) {
    throw std::invalid_argument(std::string(what) + " " +
                                std::to_string(value) +
                                " exceeds the oracle ceiling " +
                                std::to_string(ceiling));
  }
}

// The fillers below grow `node.children` in place and restore it before
// returning. The reserve keeps the buffer stable: while a frame is live at
// most `budget` further edges can be appended, so references taken into the
// vector never dangle.

void fill_forest(MultiEdgeTree& node, int budget,
                 const std::function<void()>& done) {
  if (budget == 0) {
    done();
    return;
  }
  node.children.reserve(node.children.size() + budget);
  for (int mult = 1; mult <= budget; ++mult) {
    for (int sub = 0; mult + sub <= budget; ++sub) {
      node.children.push_back({mult, {}});
      const std::size_t idx = node.children.size() - 1;
      fill_forest(node.children[idx].child, sub, [&node, budget, mult, sub,
                                                  &done] {
        fill_forest(node, budget - mult - sub, done);
      });
      node.children.pop_back();
    }
  }
}

void fill_bounded(MultiEdgeTree& node, int vertices, int degree_left,
                  int bound, const std::function<void()>& done) {
  if (vertices == 0) {
    done();
    return;
  }
  if (degree_left == 0) return;  // dead end: vertices left but no degree
  node.children.reserve(node.children.size() +
                        std::min(vertices, degree_left));
  for (int mult = 1; mult <= degree_left; ++mult) {
    for (int sub = 1; sub <= vertices; ++sub) {
      node.children.push_back({mult, {}});
      const std::size_t idx = node.children.size() - 1;
      fill_bounded(node.children[idx].child, sub - 1, bound, bound,
                   [&node, vertices, degree_left, bound, mult, sub, &done] {
                     fill_bounded(node, vertices - sub, degree_left - mult,
                                  bound, done);
                   });
      node.children.pop_back();
    }
  }
}

void fill_dary(DAryNode& node, int vertices, int min_position, int bound,
               const std::function<void()>& done) {
  if (vertices == 0) {
    done();
    return;
  }
  if (min_position > bound) return;
  node.children.reserve(node.children.size() +
                        std::min(vertices, bound - min_position + 1));
  for (int pos = min_position; pos <= bound; ++pos) {
    for (int sub = 1; sub <= vertices; ++sub) {
      node.children.push_back({pos, {}});
      const std::size_t idx = node.children.size() - 1;
      fill_dary(node.children[idx].child, sub - 1, 1, bound,
                [&node, vertices, bound, pos, sub, &done] {
                  fill_dary(node, vertices - sub, pos + 1, bound, done);
                });
      node.children.pop_back();
    }
  }
}

}  // namespace

BigInt enumerate_multi_edge(int n_edges, const MultiEdgeVisitor& visit,
                            int ceiling) {
  check_budget(n_edges, ceiling, "edge count");
  BigInt count = 0;
  MultiEdgeTree root;
  fill_forest(root, n_edges, [&] {
    ++count;
    if (visit) visit(root);
  });
  return count;
}

BigInt enumerate_dary_multi(int bound, int n_vertices,
                            const DAryMultiVisitor& visit, int ceiling) {
  if (bound < 1) throw std::invalid_argument("degree bound must be >= 1");
  if (n_vertices < 1) throw std::invalid_argument("vertex count must be >= 1");
  check_budget(n_vertices, ceiling, "vertex count");
  BigInt count = 0;
  DAryMultiEdgeTree wrapper{bound, {}};
  fill_bounded(wrapper.tree, n_vertices - 1, bound, bound, [&] {
    ++count;
    if (visit) visit(wrapper);
  });
  return count;
}

BigInt enumerate_dary(int bound, int n_vertices, const DAryVisitor& visit,
                      int ceiling) {
  if (bound < 1) throw std::invalid_argument("degree bound must be >= 1");
  if (n_vertices < 1) throw std::invalid_argument("vertex count must be >= 1");
  check_budget(n_vertices, ceiling, "vertex count");
  BigInt count = 0;
  DAryTree wrapper{bound, {}};
  fill_dary(wrapper.root, n_vertices - 1, 1, bound, [&] {
    ++count;
    if (visit) visit(wrapper);
  });
  return count;
}

}  // namespace medge
