#pragma once

#include "medge/tree.hpp"

namespace medge {

/// Height-preserving bijection onto pruned d-ary trees: children attached by
/// multiplicities (k_1, ..., k_r) move to positions
/// (k_1, k_1+k_2, ..., k_1+...+k_r). Throws std::invalid_argument when the
/// input violates its degree bound.
DAryTree to_dary(const DAryMultiEdgeTree& t);

/// Inverse map: positions (p_1 < ... < p_r) become multiplicities
/// (p_1, p_2-p_1, ..., p_r-p_{r-1}). Throws std::invalid_argument on an
/// invalid input tree.
DAryMultiEdgeTree from_dary(const DAryTree& t);

}  // namespace medge
