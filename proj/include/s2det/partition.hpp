#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace s2det {

inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxEdges = kMaxVertices * (kMaxVertices - 1) / 2;
inline constexpr int kMaxColors = 16;

// Undirected edge of K_n with 1-based labels, i < j.
struct Edge {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr std::size_t edge_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2; }

// Lexicographic rank of (i, j): (1,2),(1,3),...,(1,n),(2,3),...
std::size_t edge_index(int i, int j, int n);
Edge edge_at(std::size_t index, int n);
// All edges of K_n in lexicographic order (cached per n).
std::span<const Edge> edge_list(int n);

// Triangle x < y < z. Its edges are always listed as (x,y), (x,z), (y,z).
struct Face {
  int x = 0;
  int y = 0;
  int z = 0;

  static Face make(int a, int b, int c);

  std::array<Edge, 3> edges() const { return {Edge{x, y}, Edge{x, z}, Edge{y, z}}; }
  std::array<std::size_t, 3> edge_indices(int n) const;

  friend auto operator<=>(const Face&, const Face&) = default;
};

// All C(n,3) faces in lexicographic order.
std::vector<Face> all_faces(int n);

// Coloring of the edges of K_n by d colors; color c (0-based) is the class Γ_{c+1}.
// Stored inline so partitions are cheap to copy in the enumeration and flip kernels.
class EdgePartition {
 public:
  EdgePartition() = default;
  // Every edge starts with color 0.
  EdgePartition(int d, int n);

  static EdgePartition from_colors(int d, int n, std::span<const int> colors);
  static EdgePartition from_colors(int d, int n, std::span<const std::uint8_t> colors);
  // classes[c] lists the edges of Γ_{c+1}; every edge of K_n must appear exactly once.
  static EdgePartition from_classes(int n, const std::vector<std::vector<Edge>>& classes);

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t edge_count() const { return s2det::edge_count(n_); }

  int color(std::size_t e) const { return colors_[e]; }
  int color(int i, int j) const { return colors_[edge_index(i, j, n_)]; }
  void set_color(std::size_t e, int c);

  std::span<const std::uint8_t> colors() const { return {colors_.data(), edge_count()}; }
  std::vector<int> class_sizes() const;
  std::vector<Edge> class_edges(int c) const;

  friend bool operator==(const EdgePartition& a, const EdgePartition& b);

 private:
  std::int8_t d_ = 0;
  std::int8_t n_ = 0;
  std::array<std::uint8_t, kMaxEdges> colors_{};
};

// Fixed-capacity union-find over 0-based vertices, path compression only.
class DisjointSets {
 public:
  explicit DisjointSets(int n = 0);

  int find(int v);
  // Returns false when a and b were already connected.
  bool unite(int a, int b);
  int components() const { return components_; }

 private:
  std::array<std::int8_t, kMaxVertices> parent_{};
  int components_ = 0;
};

// Equal edge count in every color class.
bool is_homogeneous(const EdgePartition& p);
// Every color class is a forest.
bool is_cycle_free(const EdgePartition& p);
bool is_homogeneous_cycle_free(const EdgePartition& p);
// Connected components of the spanning subgraph of color c.
int class_components(const EdgePartition& p, int c);

// Base-d number whose digits are the colors, edge 0 most significant.
std::uint64_t canonical_code(const EdgePartition& p);
EdgePartition decode_partition(std::uint64_t code, int d, int n);
// True when every base-d code over edge_count(n) digits fits in 64 bits.
bool code_fits(int d, int n);

// "Γ1={12,14,23} Γ2={13,24,34}" with 1-based class subscripts.
std::string describe(const EdgePartition& p);

}  // namespace s2det
