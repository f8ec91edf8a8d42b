#pragma once

#include <memory>
#include <random>

#include "s2det/appendix.hpp"
#include "s2det/field.hpp"
#include "s2det/flips.hpp"
#include "s2det/partition_set.hpp"
#include "s2det/tensor.hpp"

namespace s2det::test {

inline std::shared_ptr<const PartitionSet> cycle_free_set(int d) {
  static std::shared_ptr<const PartitionSet> cache[4];
  if (!cache[d]) cache[d] = std::make_shared<const PartitionSet>(enumerate(d, true));
  return cache[d];
}

inline const FlipGraph& flip_graph(int d) {
  static std::unique_ptr<FlipGraph> cache[4];
  if (!cache[d]) cache[d] = std::make_unique<FlipGraph>(build_flip_graph(cycle_free_set(d)));
  return *cache[d];
}

inline const SignatureTable& signatures(int d) {
  static std::unique_ptr<SignatureTable> cache[4];
  if (!cache[d]) {
    const auto anchors = default_anchors(d);
    cache[d] = std::make_unique<SignatureTable>(signature_table(flip_graph(d), anchors));
  }
  return *cache[d];
}

// Numerator in [-num, num], denominator in [1, den].
inline Rational random_rational(std::mt19937_64& rng, int num = 9, int den = 5) {
  const long p = std::uniform_int_distribution<long>(-num, num)(rng);
  const long q = std::uniform_int_distribution<long>(1, den)(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline TensorInput<Rational> random_tensor(int d, std::mt19937_64& rng, int num = 9, int den = 5) {
  TensorInput<Rational> x(d, 2 * d, Rational(0));
  for (std::size_t e = 0; e < x.edge_count(); ++e)
    for (int c = 0; c < d; ++c) x.at(e, c) = random_rational(rng, num, den);
  return x;
}

inline TensorInput<Residue> random_residues(const PrimeField& field, int d, std::mt19937_64& rng) {
  TensorInput<Residue> x(d, 2 * d, field.zero());
  std::uniform_int_distribution<std::uint64_t> pick(0, field.modulus() - 1);
  for (std::size_t e = 0; e < x.edge_count(); ++e)
    for (int c = 0; c < d; ++c) x.at(e, c) = Residue{pick(rng)};
  return x;
}

inline EdgePartition random_coloring(int d, int n, std::mt19937_64& rng) {
  EdgePartition p(d, n);
  std::uniform_int_distribution<int> color(0, d - 1);
  for (std::size_t e = 0; e < p.edge_count(); ++e) p.set_color(e, color(rng));
  return p;
}

}  // namespace s2det::test
