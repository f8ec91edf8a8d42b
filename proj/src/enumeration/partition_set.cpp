#include "s2det/partition_set.hpp"

#include "s2det/errors.hpp"

namespace s2det {

PartitionSet::PartitionSet(int d, int n, std::vector<std::uint8_t> colors)
    : d_(d), n_(n), edges_(s2det::edge_count(n)), colors_(std::move(colors)) {
  if (!code_fits(d, n)) throw InputError("partition codes for this (d, n) exceed 64 bits");
  if (edges_ == 0 || colors_.size() % edges_ != 0) throw InputError("flat color buffer has the wrong length");
  const std::size_t count = colors_.size() / edges_;
  codes_.reserve(count);
  index_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t code = 0;
    for (std::uint8_t c : this->colors(i)) {
      if (c >= d) throw InputError("member color out of range");
      code = code * static_cast<std::uint64_t>(d) + c;
    }
    if (!codes_.empty() && code <= codes_.back()) throw InputError("partition set members must be strictly ascending");
    codes_.push_back(code);
    index_.emplace(code, static_cast<std::uint32_t>(i));
  }
}

EdgePartition PartitionSet::member(std::size_t i) const {
  if (i >= size()) throw InputError("member index out of range");
  return EdgePartition::from_colors(d_, n_, colors(i));
}

std::optional<std::uint32_t> PartitionSet::find(const EdgePartition& p) const {
  if (p.d() != d_ || p.n() != n_) throw InputError("partition dimensions do not match the set");
  return find_code(canonical_code(p));
}

bool contains(const PartitionSet& set, const EdgePartition& p) { return set.contains(p); }

std::uint64_t homogeneous_partition_count(int d) {
  if (d < 1) throw InputError("d must be positive");
  const std::uint64_t per_class = 2 * static_cast<std::uint64_t>(d) - 1;
  // Product of binomials C(remaining, per_class); exact at every step.
  std::uint64_t total = 1;
  std::uint64_t remaining = per_class * static_cast<std::uint64_t>(d);
  for (int c = 0; c < d; ++c) {
    std::uint64_t binom = 1;
    for (std::uint64_t k = 1; k <= per_class; ++k) binom = binom * (remaining - per_class + k) / k;
    if (__builtin_mul_overflow(total, binom, &total)) throw InputError("count overflows 64 bits");
    remaining -= per_class;
  }
  return total;
}

}  // namespace s2det
