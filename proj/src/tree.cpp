#include "medge/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace medge {

bool operator==(const MultiEdgeTree& a, const MultiEdgeTree& b) {
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (a.children[i].multiplicity != b.children[i].multiplicity) return false;
    if (!(a.children[i].child == b.children[i].child)) return false;
  }
  return true;
}

bool operator==(const DAryNode& a, const DAryNode& b) {
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (a.children[i].position != b.children[i].position) return false;
    if (!(a.children[i].child == b.children[i].child)) return false;
  }
  return true;
}

namespace {

void accumulate(const MultiEdgeTree& node, long depth, TreeStats& s) {
  s.vertices += 1;
  s.height = std::max(s.height, depth);
  if (node.is_leaf()) s.leaves += 1;
  s.children_histogram[static_cast<int>(node.children.size())] += 1;
  for (const auto& edge : node.children) {
    s.size += edge.multiplicity;
    accumulate(edge.child, depth + 1, s);
  }
}

void accumulate(const DAryNode& node, long depth, TreeStats& s) {
  s.vertices += 1;
  s.height = std::max(s.height, depth);
  if (node.is_leaf()) s.leaves += 1;
  s.children_histogram[static_cast<int>(node.children.size())] += 1;
  for (const auto& slot : node.children) {
    s.size += 1;
    accumulate(slot.child, depth + 1, s);
  }
}

}  // namespace

TreeStats stats(const MultiEdgeTree& t) {
  TreeStats s;
  s.vertices = 0;
  s.leaves = 0;
  accumulate(t, 0, s);
  return s;
}

TreeStats stats(const DAryNode& t) {
  TreeStats s;
  s.vertices = 0;
  s.leaves = 0;
  accumulate(t, 0, s);
  return s;
}

long tree_size(const MultiEdgeTree& t) {
  long total = 0;
  for (const auto& edge : t.children) {
    total += edge.multiplicity + tree_size(edge.child);
  }
  return total;
}

bool satisfies_degree_bound(const MultiEdgeTree& t, int bound) {
  long sum = 0;
  for (const auto& edge : t.children) {
    if (edge.multiplicity < 1) return false;
    sum += edge.multiplicity;
  }
  if (sum > bound) return false;
  return std::all_of(t.children.begin(), t.children.end(),
                     [&](const auto& e) {
                       return satisfies_degree_bound(e.child, bound);
                     });
}

bool is_valid(const DAryTree& t) {
  if (t.bound < 1) return false;
  auto check = [&](const DAryNode& node, const auto& self) -> bool {
    int prev = 0;
    for (const auto& slot : node.children) {
      if (slot.position <= prev || slot.position > t.bound) return false;
      prev = slot.position;
      if (!self(slot.child, self)) return false;
    }
    return true;
  };
  return check(t.root, check);
}

namespace {

void format_into(const MultiEdgeTree& t, std::string& out) {
  out += '(';
  bool first = true;
  for (const auto& edge : t.children) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(edge.multiplicity);
    out += ':';
    format_into(edge.child, out);
  }
  out += ')';
}

void format_into(const DAryNode& t, std::string& out) {
  out += '(';
  bool first = true;
  for (const auto& slot : t.children) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(slot.position);
    out += ':';
    format_into(slot.child, out);
  }
  out += ')';
}

// Shared recursive-descent core. The label is the integer before ':' (a
// multiplicity or a position); validation beyond positivity is left to the
// tree-level checks.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  template <typename Node, typename Attach>
  Node parse_node(const Attach& attach) {
    expect('(');
    Node node;
    if (peek() != ')') {
      while (true) {
        long label = parse_int();
        expect(':');
        Node child = parse_node<Node>(attach);
        attach(node, static_cast<int>(label), std::move(child));
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(')');
    return node;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
  }

 private:
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    long value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1'000'000'000L) fail("integer out of range");
    }
    if (value < 1) fail("label must be positive");
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("tree parse error at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_tree(const MultiEdgeTree& t) {
  std::string out;
  format_into(t, out);
  return out;
}

std::string format_dary(const DAryNode& t) {
  std::string out;
  format_into(t, out);
  return out;
}

MultiEdgeTree parse_tree(std::string_view text) {
  Parser p(text);
  MultiEdgeTree result = p.parse_node<MultiEdgeTree>(
      [](MultiEdgeTree& node, int label, MultiEdgeTree&& child) {
        node.children.push_back({label, std::move(child)});
      });
  p.finish();
  return result;
}

DAryNode parse_dary(std::string_view text) {
  Parser p(text);
  DAryNode result = p.parse_node<DAryNode>(
      [](DAryNode& node, int label, DAryNode&& child) {
        node.children.push_back({label, std::move(child)});
      });
  p.finish();
  return result;
}

std::string stats_json(const TreeStats& s) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [r, count] : s.children_histogram) {
    hist[std::to_string(r)] = count;
  }
  nlohmann::json j{{"height", s.height},
                   {"vertices", s.vertices},
                   {"leaves", s.leaves},
                   {"size", s.size},
                   {"children_histogram", hist}};
  return j.dump();
}

}  // namespace medge
