#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "s2det/flips.hpp"
#include "s2det/partition.hpp"

namespace s2det {

using ColorTriple = std::array<std::uint8_t, 3>;

// Face relation: the sum over every distinct arrangement of `colors` on the face
// positions (x,y), (x,z), (y,z), with the remaining edges colored as in `context`.
// The face edges of `context` are ignored.
struct RelationInstance {
  Face face;
  ColorTriple colors;  // sorted ascending
  EdgePartition context;

  // 1, 3 or 6 partitions.
  std::vector<EdgePartition> expand() const;
};

// Sorted triples c1 <= c2 <= c3 over d colors, ascending.
std::vector<ColorTriple> color_multisets(int d);
// Distinct orderings of a sorted triple, in lexicographic order.
std::vector<ColorTriple> arrangements(const ColorTriple& sorted);

// C(n,3) · C(d+2,3) · d^(edges-3) with n = 2d.
std::uint64_t relation_instance_count(int d);

struct FullSweep {};
// `count` instances drawn uniformly in blocks of 4096; block b uses its own
// generator seeded from (seed, b), so the stream is independent of thread count.
struct SampledSweep {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using SweepMode = std::variant<FullSweep, SampledSweep>;

inline constexpr std::uint64_t kSampleBlock = 4096;

// Instances in stream order: full mode runs face, then multiset, then context code
// (first non-face edge most significant). The index passed is the stream position.
void for_each_relation_instance(int d, const SweepMode& mode,
                                const std::function<void(const RelationInstance&, std::uint64_t)>& visit);

struct RelationReport {
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  // Instances with at least one term inside the partition set.
  std::uint64_t active = 0;
  std::optional<RelationInstance> first_violation;
  std::uint64_t first_violation_index = 0;
  int first_violation_sum = 0;
};

// Checks Σ_{P in expand(I)} sign_or_zero(P) = 0 for every instance. Parallel over
// (face, multiset) pairs in full mode and over sample blocks otherwise; terms are
// looked up only when the color counts are homogeneous.
RelationReport verify_relations(const SignatureTable& table, const SweepMode& mode);

namespace reference {

// Expands every instance and looks up every term; single-threaded.
RelationReport verify_relations(const SignatureTable& table, const SweepMode& mode);

}  // namespace reference

}  // namespace s2det
