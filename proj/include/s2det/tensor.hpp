#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "s2det/errors.hpp"
#include "s2det/linear_algebra.hpp"
#include "s2det/partition.hpp"
#include "s2det/symmetry.hpp"

namespace s2det {

// One d-coordinate vector v_{i,j} per edge of K_n, edges in lexicographic order.
template <class T>
class TensorInput {
 public:
  TensorInput(int d, int n, const T& fill) : d_(d), n_(n), coords_(s2det::edge_count(n) * d, fill) {
    if (d < 1 || d > kMaxColors || n < 2 || n > kMaxVertices) throw InputError("tensor dimensions out of range");
  }

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t edge_count() const { return s2det::edge_count(n_); }

  T& at(std::size_t e, int c) { return coords_[e * d_ + c]; }
  const T& at(std::size_t e, int c) const { return coords_[e * d_ + c]; }
  std::span<const T> vector(std::size_t e) const { return {coords_.data() + e * d_, static_cast<std::size_t>(d_)}; }
  void set_vector(std::size_t e, std::span<const T> v) {
    if (v.size() != static_cast<std::size_t>(d_)) throw InputError("vector length differs from d");
    for (int c = 0; c < d_; ++c) at(e, c) = v[c];
  }
  std::span<const T> coords() const { return coords_; }

  friend bool operator==(const TensorInput&, const TensorInput&) = default;

 private:
  int d_;
  int n_;
  std::vector<T> coords_;
};

// E_d as a partition of K_{2d}: E_{d-1} on the first 2d-2 vertices, then for each
// s < d the pairs (2s-1, 2d-1), (2s, 2d) get e_d and (2s-1, 2d), (2s, 2d-1) get e_s,
// and (2d-1, 2d) gets e_d.
EdgePartition build_E(int d);

// v_e = e_{color(e)}.
template <class Field>
TensorInput<typename Field::value_type> basis_tensor(const Field& field, const EdgePartition& p) {
  TensorInput<typename Field::value_type> x(p.d(), p.n(), field.zero());
  for (std::size_t e = 0; e < p.edge_count(); ++e) x.at(e, p.color(e)) = field.one();
  return x;
}

// The partition behind a basis-valued input, if every vector is a basis vector.
template <class Field>
std::optional<EdgePartition> as_partition(const Field& field, const TensorInput<typename Field::value_type>& x) {
  EdgePartition p(x.d(), x.n());
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    int hit = -1;
    for (int c = 0; c < x.d(); ++c) {
      const auto& v = x.at(e, c);
      if (field.is_zero(v)) continue;
      if (hit >= 0 || !(v == field.one())) return std::nullopt;
      hit = c;
    }
    if (hit < 0) return std::nullopt;
    p.set_color(e, hit);
  }
  return p;
}

// w_{σi,σj} = v_{i,j}.
template <class T>
TensorInput<T> act_on_tensor(const Permutation& sigma, const TensorInput<T>& x) {
  if (sigma.size() != x.n()) throw InputError("permutation size differs from vertex count");
  TensorInput<T> out = x;
  const auto edges = edge_list(x.n());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int a = sigma(edges[e].i);
    int b = sigma(edges[e].j);
    if (a > b) std::swap(a, b);
    out.set_vector(edge_index(a, b, x.n()), x.vector(e));
  }
  return out;
}

// w_e = T v_e.
template <class Field>
TensorInput<typename Field::value_type> act_on_tensor(const Field& field, const Matrix<typename Field::value_type>& t,
                                                      const TensorInput<typename Field::value_type>& x) {
  const auto d = static_cast<std::size_t>(x.d());
  if (t.rows() != d || t.cols() != d) throw InputError("matrix size differs from d");
  TensorInput<typename Field::value_type> out(x.d(), x.n(), field.zero());
  for (std::size_t e = 0; e < x.edge_count(); ++e) {
    for (std::size_t r = 0; r < d; ++r) {
      auto sum = field.zero();
      for (std::size_t c = 0; c < d; ++c) sum = field.add(sum, field.mul(t(r, c), x.at(e, static_cast<int>(c))));
      out.at(e, static_cast<int>(r)) = sum;
    }
  }
  return out;
}

}  // namespace s2det
