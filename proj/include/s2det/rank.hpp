#pragma once

#include <cstdint>

#include "s2det/field.hpp"

namespace s2det {

struct RankReport {
  int d = 0;
  std::uint64_t modulus = 0;
  std::uint64_t generators = 0;  // d^(edges of K_{2d})
  std::uint64_t relations = 0;   // one row per relation instance
  std::uint64_t rank = 0;
  std::uint64_t dimension = 0;   // generators - rank
};

// Dimension of the span of all basis generators modulo all face relations, by
// elimination over GF(p). Only d = 1 and d = 2 fit in memory.
RankReport rank_certify(int d, const PrimeField& field);

inline std::uint64_t rank_certify_d2(std::uint64_t p) { return rank_certify(2, PrimeField(p)).dimension; }

}  // namespace s2det
