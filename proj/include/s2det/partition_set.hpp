#pragma once

#include <absl/container/flat_hash_map.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "s2det/partition.hpp"

namespace s2det {

// Immutable set of d-partitions of K_n, sorted by canonical code, with a
// hash index from code to position.
class PartitionSet {
 public:
  // `colors` holds the members back to back (edge_count(n) bytes each) and must
  // be sorted strictly ascending by canonical code.
  PartitionSet(int d, int n, std::vector<std::uint8_t> colors);

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  std::size_t size() const { return codes_.size(); }

  EdgePartition member(std::size_t i) const;
  std::span<const std::uint8_t> colors(std::size_t i) const { return {colors_.data() + i * edges_, edges_}; }
  std::span<const std::uint8_t> flat_colors() const { return colors_; }
  std::uint64_t code(std::size_t i) const { return codes_[i]; }
  std::span<const std::uint64_t> codes() const { return codes_; }

  std::optional<std::uint32_t> find_code(std::uint64_t code) const {
    auto it = index_.find(code);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  // Throws InputError when (d, n) differ from the set's.
  std::optional<std::uint32_t> find(const EdgePartition& p) const;
  bool contains(const EdgePartition& p) const { return find(p).has_value(); }

 private:
  int d_;
  int n_;
  std::size_t edges_;
  std::vector<std::uint8_t> colors_;
  std::vector<std::uint64_t> codes_;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> index_;
};

struct EnumerateOptions {
  bool cycle_free = false;
  // Exhaustive runs beyond d = 3 are refused unless this is set.
  bool allow_infeasible = false;
};

inline constexpr int kMaxExhaustiveColors = 3;

// Homogeneous d-partitions of K_{2d} (optionally cycle-free), sharded over the
// first three edge colors with OpenMP. Output is identical for any thread count.
PartitionSet enumerate(int d, const EnumerateOptions& options);
inline PartitionSet enumerate(int d, bool cycle_free) { return enumerate(d, EnumerateOptions{cycle_free, false}); }

bool contains(const PartitionSet& set, const EdgePartition& p);

// multinomial(d(2d-1); 2d-1, ..., 2d-1): the number of homogeneous d-partitions of K_{2d}.
std::uint64_t homogeneous_partition_count(int d);

namespace reference {

// Single-threaded depth-first enumeration; kept as the oracle for the sharded kernel.
PartitionSet enumerate(int d, bool cycle_free);

}  // namespace reference

}  // namespace s2det
