#include <exception>
#include <limits>

#include "s2det/errors.hpp"
#include "s2det/flips.hpp"

namespace s2det {

RegularGraph::RegularGraph(std::uint32_t nodes, std::uint32_t degree, std::vector<std::uint32_t> adjacency)
    : nodes_(nodes), degree_(degree), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != static_cast<std::size_t>(nodes_) * degree_) throw InputError("adjacency table has the wrong size");
  for (std::uint32_t v : adjacency_)
    if (v >= nodes_) throw InputError("adjacency refers to a missing node");
}

FlipGraph::FlipGraph(std::shared_ptr<const PartitionSet> nodes, std::vector<Face> faces, RegularGraph graph)
    : nodes_(std::move(nodes)), faces_(std::move(faces)), graph_(std::move(graph)) {}

namespace {

std::uint32_t flip_target(const PartitionSet& set, std::size_t node, const Face& face) {
  const EdgePartition q = flip(set.member(node), face);
  auto idx = set.find(q);
  if (!idx) throw InputError("flip leaves the node set; build the graph from the full cycle-free set");
  return *idx;
}

void check_input(const PartitionSet& set) {
  if (set.n() != 2 * set.d()) throw InputError("flip graph needs partitions of K_{2d}");
  if (set.size() == 0) throw InputError("flip graph needs a non-empty node set");
  if (set.size() > std::numeric_limits<std::uint32_t>::max()) throw InputError("node set too large");
}

}  // namespace

FlipGraph build_flip_graph(std::shared_ptr<const PartitionSet> set) {
  check_input(*set);
  std::vector<Face> faces = all_faces(set->n());
  const std::size_t nodes = set->size();
  const std::size_t degree = faces.size();
  std::vector<std::uint32_t> adjacency(nodes * degree);

  // Keep the error raised by the smallest node so failures are reproducible.
  std::size_t failed_node = nodes;
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 512)
  for (std::size_t u = 0; u < nodes; ++u) {
    try {
      for (std::size_t f = 0; f < degree; ++f) adjacency[u * degree + f] = flip_target(*set, u, faces[f]);
    } catch (...) {
#pragma omp critical(s2det_flip_failure)
      {
        if (u < failed_node) {
          failed_node = u;
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  RegularGraph graph(static_cast<std::uint32_t>(nodes), static_cast<std::uint32_t>(degree), std::move(adjacency));
  return FlipGraph(std::move(set), std::move(faces), std::move(graph));
}

namespace reference {

FlipGraph build_flip_graph(std::shared_ptr<const PartitionSet> set) {
  check_input(*set);
  std::vector<Face> faces = all_faces(set->n());
  std::vector<std::uint32_t> adjacency;
  adjacency.reserve(set->size() * faces.size());
  for (std::size_t u = 0; u < set->size(); ++u)
    for (const Face& f : faces) adjacency.push_back(flip_target(*set, u, f));
  RegularGraph graph(static_cast<std::uint32_t>(set->size()), static_cast<std::uint32_t>(faces.size()),
                     std::move(adjacency));
  return FlipGraph(std::move(set), std::move(faces), std::move(graph));
}

}  // namespace reference

}  // namespace s2det
