#include "s2det/partition.hpp"

#include <algorithm>
#include <limits>

#include "s2det/errors.hpp"

namespace s2det {

namespace {

void check_shape(int d, int n) {
  if (n < 2 || n > kMaxVertices) throw InputError("vertex count must be in 2.." + std::to_string(kMaxVertices));
  if (d < 1 || d > kMaxColors) throw InputError("color count must be in 1.." + std::to_string(kMaxColors));
}

}  // namespace

std::size_t edge_index(int i, int j, int n) {
  if (n < 2 || n > kMaxVertices || i < 1 || j > n || i >= j) {
    throw InputError("invalid edge (" + std::to_string(i) + "," + std::to_string(j) + ") of K_" + std::to_string(n));
  }
  return static_cast<std::size_t>((i - 1) * n - i * (i + 1) / 2 + j - 1);
}

Edge edge_at(std::size_t index, int n) {
  if (index >= edge_count(n)) throw InputError("edge index out of range");
  int i = 1;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    ++i;
    --row;
  }
  return Edge{i, i + 1 + static_cast<int>(index)};
}

std::span<const Edge> edge_list(int n) {
  static const auto tables = [] {
    std::array<std::vector<Edge>, kMaxVertices + 1> t;
    for (int m = 2; m <= kMaxVertices; ++m)
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) t[m].push_back(Edge{i, j});
    return t;
  }();
  if (n < 2 || n > kMaxVertices) throw InputError("vertex count out of range");
  return tables[n];
}

Face Face::make(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  if (v[0] < 1 || v[0] == v[1] || v[1] == v[2]) throw InputError("face vertices must be distinct positive labels");
  return Face{v[0], v[1], v[2]};
}

std::array<std::size_t, 3> Face::edge_indices(int n) const {
  if (z > n) throw InputError("face does not lie in K_" + std::to_string(n));
  return {edge_index(x, y, n), edge_index(x, z, n), edge_index(y, z, n)};
}

std::vector<Face> all_faces(int n) {
  std::vector<Face> faces;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z) faces.push_back(Face{x, y, z});
  return faces;
}

EdgePartition::EdgePartition(int d, int n) {
  check_shape(d, n);
  d_ = static_cast<std::int8_t>(d);
  n_ = static_cast<std::int8_t>(n);
}

EdgePartition EdgePartition::from_colors(int d, int n, std::span<const int> colors) {
  EdgePartition p(d, n);
  if (colors.size() != p.edge_count()) throw InputError("expected " + std::to_string(p.edge_count()) + " edge colors");
  for (std::size_t e = 0; e < colors.size(); ++e) p.set_color(e, colors[e]);
  return p;
}

EdgePartition EdgePartition::from_colors(int d, int n, std::span<const std::uint8_t> colors) {
  EdgePartition p(d, n);
  if (colors.size() != p.edge_count()) throw InputError("expected " + std::to_string(p.edge_count()) + " edge colors");
  for (std::size_t e = 0; e < colors.size(); ++e) p.set_color(e, colors[e]);
  return p;
}

EdgePartition EdgePartition::from_classes(int n, const std::vector<std::vector<Edge>>& classes) {
  EdgePartition p(static_cast<int>(classes.size()), n);
  std::vector<bool> seen(p.edge_count(), false);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Edge e : classes[c]) {
      if (e.i > e.j) std::swap(e.i, e.j);
      std::size_t idx = edge_index(e.i, e.j, n);
      if (seen[idx]) throw InputError("edge listed twice in partition classes");
      seen[idx] = true;
      p.colors_[idx] = static_cast<std::uint8_t>(c);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InputError("partition classes do not cover K_n");
  return p;
}

void EdgePartition::set_color(std::size_t e, int c) {
  if (e >= edge_count()) throw InputError("edge index out of range");
  if (c < 0 || c >= d_) throw InputError("color " + std::to_string(c) + " out of range for d=" + std::to_string(d_));
  colors_[e] = static_cast<std::uint8_t>(c);
}

std::vector<int> EdgePartition::class_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(d_), 0);
  for (std::uint8_t c : colors()) ++sizes[c];
  return sizes;
}

std::vector<Edge> EdgePartition::class_edges(int c) const {
  std::vector<Edge> out;
  for (std::size_t e = 0; e < edge_count(); ++e)
    if (colors_[e] == c) out.push_back(edge_list(n_)[e]);
  return out;
}

bool operator==(const EdgePartition& a, const EdgePartition& b) {
  return a.d_ == b.d_ && a.n_ == b.n_ && std::ranges::equal(a.colors(), b.colors());
}

DisjointSets::DisjointSets(int n) : components_(n) {
  for (int v = 0; v < n; ++v) parent_[v] = static_cast<std::int8_t>(v);
}

int DisjointSets::find(int v) {
  int root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    int next = parent_[v];
    parent_[v] = static_cast<std::int8_t>(root);
    v = next;
  }
  return root;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  parent_[b] = static_cast<std::int8_t>(a);
  --components_;
  return true;
}

bool is_homogeneous(const EdgePartition& p) {
  std::array<int, kMaxColors> sizes{};
  for (std::uint8_t c : p.colors()) ++sizes[c];
  for (int c = 1; c < p.d(); ++c)
    if (sizes[c] != sizes[0]) return false;
  return true;
}

bool is_cycle_free(const EdgePartition& p) {
  std::array<DisjointSets, kMaxColors> forests;
  for (int c = 0; c < p.d(); ++c) forests[c] = DisjointSets(p.n());
  const auto edges = edge_list(p.n());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge edge = edges[e];
    if (!forests[p.color(e)].unite(edge.i - 1, edge.j - 1)) return false;
  }
  return true;
}

bool is_homogeneous_cycle_free(const EdgePartition& p) { return is_homogeneous(p) && is_cycle_free(p); }

int class_components(const EdgePartition& p, int c) {
  DisjointSets ds(p.n());
  for (std::size_t e = 0; e < p.edge_count(); ++e) {
    if (p.color(e) != c) continue;
    Edge edge = edge_list(p.n())[e];
    ds.unite(edge.i - 1, edge.j - 1);
  }
  return ds.components();
}

bool code_fits(int d, int n) {
  std::uint64_t bound = 1;
  for (std::size_t e = 0; e < edge_count(n); ++e) {
    if (__builtin_mul_overflow(bound, static_cast<std::uint64_t>(d), &bound)) return false;
  }
  return true;
}

std::uint64_t canonical_code(const EdgePartition& p) {
  if (!code_fits(p.d(), p.n())) throw InputError("canonical code does not fit in 64 bits for this (d, n)");
  std::uint64_t code = 0;
  for (std::uint8_t c : p.colors()) code = code * static_cast<std::uint64_t>(p.d()) + c;
  return code;
}

EdgePartition decode_partition(std::uint64_t code, int d, int n) {
  EdgePartition p(d, n);
  if (!code_fits(d, n)) throw InputError("canonical code does not fit in 64 bits for this (d, n)");
  for (std::size_t e = p.edge_count(); e-- > 0;) {
    p.set_color(e, static_cast<int>(code % static_cast<std::uint64_t>(d)));
    code /= static_cast<std::uint64_t>(d);
  }
  if (code != 0) throw InputError("code out of range");
  return p;
}

std::string describe(const EdgePartition& p) {
  std::string out;
  for (int c = 0; c < p.d(); ++c) {
    if (c > 0) out += ' ';
    out += "G" + std::to_string(c + 1) + "={";
    bool first = true;
    for (Edge e : p.class_edges(c)) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(e.i);
      if (p.n() > 9) out += '-';
      out += std::to_string(e.j);
    }
    out += '}';
  }
  return out;
}

}  // namespace s2det
