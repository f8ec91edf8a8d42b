#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "s2det/partition.hpp"
#include "s2det/partition_set.hpp"

namespace s2det {

// The unique homogeneous cycle-free partition that agrees with p off the face
// and differs from it on at least two face edges. Found by trying all d^3 - 1
// recolorings of the face; anything other than exactly one survivor throws
// LemmaViolation. p must itself be homogeneous and cycle-free (InputError).
EdgePartition flip(const EdgePartition& p, const Face& face);

// Fixed-degree undirected graph stored as a dense neighbor table.
class RegularGraph {
 public:
  RegularGraph(std::uint32_t nodes, std::uint32_t degree, std::vector<std::uint32_t> adjacency);

  std::uint32_t nodes() const { return nodes_; }
  std::uint32_t degree() const { return degree_; }
  std::span<const std::uint32_t> neighbors(std::uint32_t u) const {
    return {adjacency_.data() + static_cast<std::size_t>(u) * degree_, degree_};
  }
  std::span<const std::uint32_t> adjacency() const { return adjacency_; }

 private:
  std::uint32_t nodes_;
  std::uint32_t degree_;
  std::vector<std::uint32_t> adjacency_;
};

// Nodes are the members of a homogeneous cycle-free PartitionSet; neighbor k of
// a node is its flip across faces()[k].
class FlipGraph {
 public:
  FlipGraph(std::shared_ptr<const PartitionSet> nodes, std::vector<Face> faces, RegularGraph graph);

  const PartitionSet& nodes() const { return *nodes_; }
  std::shared_ptr<const PartitionSet> shared_nodes() const { return nodes_; }
  const std::vector<Face>& faces() const { return faces_; }
  const RegularGraph& graph() const { return graph_; }
  std::uint32_t neighbor(std::uint32_t node, std::size_t face) const { return graph_.neighbors(node)[face]; }

 private:
  std::shared_ptr<const PartitionSet> nodes_;
  std::vector<Face> faces_;
  RegularGraph graph_;
};

// Parallel over nodes. Propagates LemmaViolation.
FlipGraph build_flip_graph(std::shared_ptr<const PartitionSet> set);

struct NodeAnchor {
  std::uint32_t node;
  int sign;
};

struct Anchor {
  EdgePartition partition;
  int sign;
};

struct Bipartition {
  std::vector<std::int8_t> sign;
  std::vector<std::uint32_t> component;
  std::uint32_t components = 0;
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
};

// Closed walk of odd length: cycle[0] - cycle[1] - ... - cycle.back() - cycle[0].
struct OddCycleWitness {
  std::vector<std::uint32_t> cycle;
};

// Two anchors in one component whose signs cannot both hold; path joins them.
struct AnchorConflict {
  std::uint32_t first;
  std::uint32_t second;
  std::vector<std::uint32_t> path;
};

using BipartiteResult = std::variant<Bipartition, OddCycleWitness, AnchorConflict>;

// BFS 2-coloring. Each component takes its sign from the first anchor it
// contains, or +1 on its smallest node when it has none.
BipartiteResult check_bipartite(const RegularGraph& graph, std::span<const NodeAnchor> anchors);

// The map ε: node set → {±1} negated by every flip.
class SignatureTable {
 public:
  SignatureTable(std::shared_ptr<const PartitionSet> nodes, Bipartition bipartition);

  const PartitionSet& nodes() const { return *nodes_; }
  int d() const { return nodes_->d(); }
  int sign_at(std::uint32_t index) const { return bipartition_.sign[index]; }
  std::span<const std::int8_t> signs() const { return bipartition_.sign; }
  const Bipartition& bipartition() const { return bipartition_; }
  // Throws InputError for partitions outside the node set.
  int sign(const EdgePartition& p) const;
  // 0 for partitions outside the node set (the value of the dual monomial sum).
  int sign_or_zero(const EdgePartition& p) const;

 private:
  std::shared_ptr<const PartitionSet> nodes_;
  Bipartition bipartition_;
};

using SignatureResult = std::variant<SignatureTable, OddCycleWitness, AnchorConflict>;

SignatureResult check_bipartite(const FlipGraph& graph, std::span<const Anchor> anchors);

struct ConnectivityReport {
  std::uint32_t components = 0;
  // Smallest member of each component, in ascending order.
  std::vector<std::uint32_t> representatives;
};

ConnectivityReport check_connected(const RegularGraph& graph);
inline ConnectivityReport check_connected(const FlipGraph& graph) { return check_connected(graph.graph()); }

int signature(const SignatureTable& table, const EdgePartition& p);

namespace reference {

// Single-threaded adjacency construction.
FlipGraph build_flip_graph(std::shared_ptr<const PartitionSet> set);

}  // namespace reference

}  // namespace s2det
