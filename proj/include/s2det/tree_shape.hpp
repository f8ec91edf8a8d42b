#pragma once

#include <span>
#include <string_view>

#include "s2det/partition.hpp"

namespace s2det {

// The six trees on 6 vertices. S6 is the star, H6 the double star.
enum class TreeShape { I6, Y6, E6, H6, C6, S6, NotTree };

std::string_view to_string(TreeShape s);
TreeShape tree_shape_from_string(std::string_view s);

// Requires exactly 5 edges with labels in 1..6.
TreeShape classify_tree(std::span<const Edge> edges);
// Shape of color class c of a partition of K_6.
TreeShape class_shape(const EdgePartition& p, int c);

}  // namespace s2det
