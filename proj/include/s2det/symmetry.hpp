#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "s2det/partition.hpp"
#include "s2det/partition_set.hpp"
#include "s2det/tree_shape.hpp"

namespace s2det {

// Bijection of {1..n}, n <= 16.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  // images[k] is the image of k + 1 (1-based values).
  static Permutation from_images(std::span<const int> images);
  // Cycle notation, e.g. {{1,2},{3,4}} for (1,2)(3,4).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return n_; }
  int operator()(int v) const { return image_[v - 1] + 1; }
  Permutation inverse() const;
  int sign() const;
  bool is_even() const { return sign() == 1; }
  std::string to_cycle_string() const;

  // (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b);

 private:
  std::int8_t n_ = 0;
  std::array<std::int8_t, kMaxVertices> image_{};
};

// Element (σ, τ) of S_{2d} × S_d: σ relabels vertices, τ relabels colors.
struct PermPair {
  Permutation sigma;
  Permutation tau;

  friend PermPair operator*(const PermPair& a, const PermPair& b) { return {a.sigma * b.sigma, a.tau * b.tau}; }
  friend bool operator==(const PermPair&, const PermPair&) = default;
};

// Edge (i,j) of color c goes to edge (σi,σj) of color τ(c).
EdgePartition act(const PermPair& g, const EdgePartition& p);
Face act(const Permutation& sigma, const Face& f);

// All n! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);
Permutation random_permutation(int n, std::mt19937_64& rng);
std::uint64_t factorial(int n);
// (2d)! d!
std::uint64_t group_order(int d);

// Brute force over the whole group.
std::vector<PermPair> stabilizer(const EdgePartition& p);

struct Orbit {
  EdgePartition representative;  // minimal canonical code in the orbit
  std::uint64_t representative_code = 0;
  std::uint64_t size = 0;
  std::vector<PermPair> stabilizer;
  // Shapes of Γ1..Γd; only filled for d = 3.
  std::vector<TreeShape> types;
};

struct OrbitTable {
  int d = 0;
  std::vector<Orbit> orbits;           // ascending by representative code
  std::vector<std::uint32_t> orbit_of;  // per member of the partition set
};

// Orbits of S_{2d} × S_d on a set closed under the action, generated by adjacent transpositions.
OrbitTable orbits(const PartitionSet& set);

}  // namespace s2det
