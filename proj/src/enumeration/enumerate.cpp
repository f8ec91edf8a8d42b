#include <algorithm>
#include <string>

#include "s2det/errors.hpp"
#include "s2det/parallel.hpp"
#include "s2det/partition_set.hpp"

namespace s2det {

namespace {

// Depth-first color assignment over edges in lex order, colors ascending, so
// members come out sorted by canonical code.
class Search {
 public:
  Search(int d, bool cycle_free)
      : d_(d), n_(2 * d), edges_(edge_count(2 * d)), target_(2 * d - 1), cycle_free_(cycle_free),
        forests_(edges_ + 1) {
    for (std::size_t e = 0; e < edges_; ++e) {
      Edge edge = edge_at(e, n_);
      ends_[e] = {edge.i - 1, edge.j - 1};
    }
    for (int c = 0; c < d_; ++c) forests_[0][c] = DisjointSets(n_);
  }

  // Fixes the colors of the first prefix.size() edges; false if that prefix is already infeasible.
  bool seed(std::span<const int> prefix) {
    for (std::size_t depth = 0; depth < prefix.size(); ++depth) {
      if (!push(depth, prefix[depth])) return false;
    }
    return true;
  }

  void run(std::size_t depth, std::vector<std::uint8_t>& out) {
    if (depth == edges_) {
      out.insert(out.end(), colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(edges_));
      return;
    }
    for (int c = 0; c < d_; ++c) {
      if (!push(depth, c)) continue;
      run(depth + 1, out);
      --counts_[c];
    }
  }

 private:
  bool push(std::size_t depth, int c) {
    if (counts_[c] == target_) return false;
    if (cycle_free_) {
      std::copy_n(forests_[depth].begin(), d_, forests_[depth + 1].begin());
      if (!forests_[depth + 1][c].unite(ends_[depth].first, ends_[depth].second)) return false;
    }
    colors_[depth] = static_cast<std::uint8_t>(c);
    ++counts_[c];
    return true;
  }

  int d_;
  int n_;
  std::size_t edges_;
  int target_;
  bool cycle_free_;
  std::array<std::pair<int, int>, kMaxEdges> ends_{};
  std::array<std::uint8_t, kMaxEdges> colors_{};
  std::array<int, kMaxColors> counts_{};
  std::vector<std::array<DisjointSets, kMaxColors>> forests_;
};

void check_request(int d, bool allow_infeasible) {
  if (d < 1) throw InputError("d must be at least 1");
  if (2 * d > kMaxVertices) throw InputError("d too large for the inline partition representation");
  if (d > kMaxExhaustiveColors && !allow_infeasible) {
    throw InputError("exhaustive enumeration for d=" + std::to_string(d) + " visits " +
                     std::to_string(homogeneous_partition_count(d)) +
                     " partitions; refusing without an explicit override");
  }
}

}  // namespace

PartitionSet enumerate(int d, const EnumerateOptions& options) {
  check_request(d, options.allow_infeasible);
  const std::size_t edges = edge_count(2 * d);
  const std::size_t prefix_len = std::min<std::size_t>(3, edges);
  std::size_t shards = 1;
  for (std::size_t k = 0; k < prefix_len; ++k) shards *= static_cast<std::size_t>(d);

  std::vector<std::vector<std::uint8_t>> shard_out(shards);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t s = 0; s < shards; ++s) {
    std::vector<int> prefix(prefix_len);
    std::size_t rest = s;
    for (std::size_t k = prefix_len; k-- > 0;) {
      prefix[k] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    Search search(d, options.cycle_free);
    if (search.seed(prefix)) search.run(prefix_len, shard_out[s]);
  }

  // Shard s holds exactly the codes whose leading digits spell s, so
  // concatenation in shard order is already sorted.
  std::size_t total = 0;
  for (const auto& part : shard_out) total += part.size();
  std::vector<std::uint8_t> colors;
  colors.reserve(total);
  for (auto& part : shard_out) {
    colors.insert(colors.end(), part.begin(), part.end());
    std::vector<std::uint8_t>().swap(part);
  }
  return PartitionSet(d, 2 * d, std::move(colors));
}

namespace reference {

PartitionSet enumerate(int d, bool cycle_free) {
  check_request(d, false);
  std::vector<std::uint8_t> colors;
  Search search(d, cycle_free);
  search.run(0, colors);
  return PartitionSet(d, 2 * d, std::move(colors));
}

}  // namespace reference

}  // namespace s2det
