#include <algorithm>

#include "s2det/errors.hpp"
#include "s2det/flips.hpp"

namespace s2det {

namespace {

struct BfsForest {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> depth;

  std::vector<std::uint32_t> path(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint32_t> from_a{a};
    std::vector<std::uint32_t> from_b{b};
    while (depth[a] > depth[b]) from_a.push_back(a = parent[a]);
    while (depth[b] > depth[a]) from_b.push_back(b = parent[b]);
    while (a != b) {
      from_a.push_back(a = parent[a]);
      from_b.push_back(b = parent[b]);
    }
    from_b.pop_back();
    from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
    return from_a;
  }
};

}  // namespace

BipartiteResult check_bipartite(const RegularGraph& graph, std::span<const NodeAnchor> anchors) {
  const std::uint32_t n = graph.nodes();
  for (const NodeAnchor& a : anchors) {
    if (a.node >= n) throw InputError("anchor node out of range");
    if (a.sign != 1 && a.sign != -1) throw InputError("anchor sign must be +1 or -1");
  }

  Bipartition out;
  out.sign.assign(n, 0);
  out.component.assign(n, 0);
  BfsForest forest{std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0)};
  std::vector<std::uint32_t> queue;
  queue.reserve(n);

  for (std::uint32_t start = 0; start < n; ++start) {
    if (out.sign[start] != 0) continue;
    const std::uint32_t cid = out.components++;
    out.sign[start] = 1;
    out.component[start] = cid;
    forest.parent[start] = start;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      for (std::uint32_t v : graph.neighbors(u)) {
        if (out.sign[v] == 0) {
          out.sign[v] = static_cast<std::int8_t>(-out.sign[u]);
          out.component[v] = cid;
          forest.parent[v] = u;
          forest.depth[v] = forest.depth[u] + 1;
          queue.push_back(v);
        } else if (out.sign[v] == out.sign[u]) {
          return OddCycleWitness{forest.path(u, v)};
        }
      }
    }
  }

  // Per component: 0 = unanchored, otherwise the factor turning BFS parity into the anchored sign.
  std::vector<std::int8_t> factor(out.components, 0);
  std::vector<std::uint32_t> first_anchor(out.components, 0);
  for (const NodeAnchor& a : anchors) {
    const std::uint32_t c = out.component[a.node];
    const int wanted = a.sign * out.sign[a.node];
    if (factor[c] == 0) {
      factor[c] = static_cast<std::int8_t>(wanted);
      first_anchor[c] = a.node;
    } else if (factor[c] != wanted) {
      return AnchorConflict{first_anchor[c], a.node, forest.path(first_anchor[c], a.node)};
    }
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::int8_t f = factor[out.component[v]];
    if (f == -1) out.sign[v] = static_cast<std::int8_t>(-out.sign[v]);
    (out.sign[v] > 0 ? out.plus : out.minus) += 1;
  }
  return out;
}

SignatureTable::SignatureTable(std::shared_ptr<const PartitionSet> nodes, Bipartition bipartition)
    : nodes_(std::move(nodes)), bipartition_(std::move(bipartition)) {
  if (bipartition_.sign.size() != nodes_->size()) throw InputError("signature table size mismatch");
}

int SignatureTable::sign(const EdgePartition& p) const {
  auto idx = nodes_->find(p);
  if (!idx) throw InputError("partition is not in the signature table: " + describe(p));
  return bipartition_.sign[*idx];
}

int SignatureTable::sign_or_zero(const EdgePartition& p) const {
  auto idx = nodes_->find(p);
  return idx ? bipartition_.sign[*idx] : 0;
}

int signature(const SignatureTable& table, const EdgePartition& p) { return table.sign(p); }

SignatureResult check_bipartite(const FlipGraph& graph, std::span<const Anchor> anchors) {
  std::vector<NodeAnchor> nodes;
  nodes.reserve(anchors.size());
  for (const Anchor& a : anchors) {
    auto idx = graph.nodes().find(a.partition);
    if (!idx) throw InputError("anchor is not a node of the flip graph: " + describe(a.partition));
    nodes.push_back(NodeAnchor{*idx, a.sign});
  }
  BipartiteResult result = check_bipartite(graph.graph(), nodes);
  if (auto* b = std::get_if<Bipartition>(&result)) return SignatureTable(graph.shared_nodes(), std::move(*b));
  if (auto* w = std::get_if<OddCycleWitness>(&result)) return std::move(*w);
  return std::get<AnchorConflict>(std::move(result));
}

ConnectivityReport check_connected(const RegularGraph& graph) {
  const std::uint32_t n = graph.nodes();
  ConnectivityReport report;
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++report.components;
    report.representatives.push_back(start);
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::uint32_t v : graph.neighbors(queue[head])) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return report;
}

}  // namespace s2det
