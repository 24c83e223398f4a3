#include "medge/bijection.hpp"

#include <set>
#include <string>

#include "doctest.h"
#include "medge/counting.hpp"
#include "medge/enumerate.hpp"
#include "medge/tree.hpp"

using namespace medge;

TEST_CASE("single child: multiplicity k moves to position k") {
  DAryMultiEdgeTree t{5, parse_tree("(3:())")};
  DAryTree image = to_dary(t);
  CHECK(format_dary(image.root) == "(3:())");
  CHECK(from_dary(image) == t);
}

TEST_CASE("multiplicities become prefix sums") {
  DAryMultiEdgeTree t{5, parse_tree("(1:(),3:(),1:())")};
  CHECK(format_dary(to_dary(t).root) == "(1:(),4:(),5:())");

  DAryTree s{5, parse_dary("(2:(),3:())")};
  CHECK(format_tree(from_dary(s).tree) == "(2:(),1:())");
}

TEST_CASE("the paired example trees map to each other") {
  DAryMultiEdgeTree multi{
      5, parse_tree("(1:(1:(2:(),1:()),2:(1:())),3:(1:(),1:(2:()),3:()))")};
  DAryTree expected{
      5, parse_dary("(1:(1:(2:(),3:()),3:(1:())),4:(1:(),2:(2:()),5:()))")};
  CHECK(to_dary(multi) == expected);
  CHECK(from_dary(expected) == multi);
}

TEST_CASE("degree-bound violations are rejected") {
  DAryMultiEdgeTree bad{3, parse_tree("(2:(),2:())")};  // sums to 4 > 3
  CHECK_THROWS_AS(to_dary(bad), std::invalid_argument);
  DAryTree bad_positions{3, parse_dary("(2:(),2:())")};
  CHECK_THROWS_AS(from_dary(bad_positions), std::invalid_argument);
}

TEST_CASE("round trip and statistics preservation over full enumerations") {
  for (int d : {2, 3}) {
    for (int v = 1; v <= 5; ++v) {
      enumerate_dary_multi(d, v, [&](const DAryMultiEdgeTree& t) {
        const DAryTree image = to_dary(t);
        CHECK(is_valid(image));
        CHECK(from_dary(image) == t);
        const TreeStats before = stats(t);
        const TreeStats after = stats(image);
        CHECK(before.height == after.height);
        CHECK(before.vertices == after.vertices);
        CHECK(before.leaves == after.leaves);
        CHECK(before.children_histogram == after.children_histogram);
      });
    }
  }
}

TEST_CASE("the image of the bounded family is exactly the d-ary family") {
  for (int d : {2, 3}) {
    for (int v = 1; v <= 5; ++v) {
      std::set<std::string> image;
      enumerate_dary_multi(d, v, [&](const DAryMultiEdgeTree& t) {
        CHECK(image.insert(format_dary(to_dary(t).root)).second);
      });
      std::set<std::string> family;
      enumerate_dary(d, v, [&](const DAryTree& t) {
        family.insert(format_dary(t.root));
      });
      CHECK(image == family);
    }
  }
}

TEST_CASE("dary round trip from the other side") {
  enumerate_dary(3, 5, [&](const DAryTree& t) {
    CHECK(to_dary(from_dary(t)) == t);
  });
}
