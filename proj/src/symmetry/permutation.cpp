#include <algorithm>
#include <numeric>

#include "s2det/errors.hpp"
#include "s2det/symmetry.hpp"

namespace s2det {

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxVertices) throw InputError("permutation size out of range");
  Permutation p;
  p.n_ = static_cast<std::int8_t>(n);
  for (int k = 0; k < n; ++k) p.image_[k] = static_cast<std::int8_t>(k);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p = identity(static_cast<int>(images.size()));
  std::array<bool, kMaxVertices> hit{};
  for (std::size_t k = 0; k < images.size(); ++k) {
    const int v = images[k];
    if (v < 1 || v > p.n_ || hit[v - 1]) throw InputError("image list is not a permutation");
    hit[v - 1] = true;
    p.image_[k] = static_cast<std::int8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::array<bool, kMaxVertices> moved{};
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > n || to < 1 || to > n || moved[from - 1]) throw InputError("invalid cycle notation");
      moved[from - 1] = true;
      p.image_[from - 1] = static_cast<std::int8_t>(to - 1);
    }
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation q = *this;
  for (int k = 0; k < n_; ++k) q.image_[image_[k]] = static_cast<std::int8_t>(k);
  return q;
}

int Permutation::sign() const {
  std::array<bool, kMaxVertices> seen{};
  int transpositions = 0;
  for (int k = 0; k < n_; ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (int v = k; !seen[v]; v = image_[v]) {
      seen[v] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::array<bool, kMaxVertices> seen{};
  for (int k = 0; k < n_; ++k) {
    if (seen[k] || image_[k] == k) continue;
    out += '(';
    for (int v = k; !seen[v]; v = image_[v]) {
      seen[v] = true;
      if (out.back() != '(') out += ',';
      out += std::to_string(v + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n_ != b.n_) throw InputError("composing permutations of different sizes");
  Permutation c = a;
  for (int k = 0; k < a.n_; ++k) c.image_[k] = a.image_[b.image_[k]];
  return c;
}

bool operator==(const Permutation& a, const Permutation& b) {
  return a.n_ == b.n_ && std::equal(a.image_.begin(), a.image_.begin() + a.n_, b.image_.begin());
}

EdgePartition act(const PermPair& g, const EdgePartition& p) {
  if (g.sigma.size() != p.n() || g.tau.size() != p.d()) throw InputError("group element does not match the partition");
  EdgePartition out(p.d(), p.n());
  const auto edges = edge_list(p.n());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int a = g.sigma(edges[e].i);
    int b = g.sigma(edges[e].j);
    if (a > b) std::swap(a, b);
    out.set_color(edge_index(a, b, p.n()), g.tau(p.color(e) + 1) - 1);
  }
  return out;
}

Face act(const Permutation& sigma, const Face& f) { return Face::make(sigma(f.x), sigma(f.y), sigma(f.z)); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t group_order(int d) { return factorial(2 * d) * factorial(d); }

std::vector<PermPair> stabilizer(const EdgePartition& p) {
  std::vector<PermPair> out;
  const auto sigmas = all_permutations(p.n());
  const auto taus = all_permutations(p.d());
  for (const auto& sigma : sigmas)
    for (const auto& tau : taus) {
      PermPair g{sigma, tau};
      if (act(g, p) == p) out.push_back(g);
    }
  return out;
}

}  // namespace s2det
