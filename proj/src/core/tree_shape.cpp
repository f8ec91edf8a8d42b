#include "s2det/tree_shape.hpp"

#include <algorithm>
#include <array>

#include "s2det/errors.hpp"

namespace s2det {

std::string_view to_string(TreeShape s) {
  switch (s) {
    case TreeShape::I6: return "I6";
    case TreeShape::Y6: return "Y6";
    case TreeShape::E6: return "E6";
    case TreeShape::H6: return "H6";
    case TreeShape::C6: return "C6";
    case TreeShape::S6: return "S6";
    case TreeShape::NotTree: return "NotTree";
  }
  return "NotTree";
}

TreeShape tree_shape_from_string(std::string_view s) {
  for (TreeShape t : {TreeShape::I6, TreeShape::Y6, TreeShape::E6, TreeShape::H6, TreeShape::C6, TreeShape::S6,
                      TreeShape::NotTree}) {
    if (to_string(t) == s) return t;
  }
  throw InputError("unknown tree shape '" + std::string(s) + "'");
}

TreeShape classify_tree(std::span<const Edge> edges) {
  if (edges.size() != 5) throw InputError("tree classification needs exactly 5 edges");
  std::array<int, 6> degree{};
  DisjointSets ds(6);
  bool acyclic = true;
  for (Edge e : edges) {
    if (e.i < 1 || e.i > 6 || e.j < 1 || e.j > 6 || e.i == e.j) throw InputError("edge outside K_6");
    ++degree[e.i - 1];
    ++degree[e.j - 1];
    if (!ds.unite(e.i - 1, e.j - 1)) acyclic = false;
  }
  if (!acyclic) return TreeShape::NotTree;

  std::array<int, 6> sorted = degree;
  std::sort(sorted.begin(), sorted.end(), std::greater<>{});
  using Seq = std::array<int, 6>;
  if (sorted == Seq{2, 2, 2, 2, 1, 1}) return TreeShape::I6;
  if (sorted == Seq{5, 1, 1, 1, 1, 1}) return TreeShape::S6;
  if (sorted == Seq{4, 2, 1, 1, 1, 1}) return TreeShape::C6;
  if (sorted == Seq{3, 3, 1, 1, 1, 1}) return TreeShape::H6;

  // (3,2,2,1,1,1): Y6 has two leaves on the branch vertex, E6 one.
  int branch = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin()) + 1;
  int leaves = 0;
  for (Edge e : edges) {
    if (e.i == branch && degree[e.j - 1] == 1) ++leaves;
    if (e.j == branch && degree[e.i - 1] == 1) ++leaves;
  }
  return leaves == 2 ? TreeShape::Y6 : TreeShape::E6;
}

TreeShape class_shape(const EdgePartition& p, int c) {
  if (p.n() != 6) throw InputError("tree shapes are defined for K_6 only");
  auto edges = p.class_edges(c);
  if (edges.size() != 5) return TreeShape::NotTree;
  return classify_tree(edges);
}

}  // namespace s2det
