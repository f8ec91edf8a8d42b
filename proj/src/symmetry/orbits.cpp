#include <numeric>

#include "s2det/errors.hpp"
#include "s2det/symmetry.hpp"

namespace s2det {

namespace {

std::uint32_t root_of(std::vector<std::uint32_t>& parent, std::uint32_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

std::vector<PermPair> adjacent_transpositions(int d) {
  const int n = 2 * d;
  std::vector<PermPair> gens;
  for (int k = 1; k < n; ++k) gens.push_back({Permutation::from_cycles(n, {{k, k + 1}}), Permutation::identity(d)});
  for (int c = 1; c < d; ++c) gens.push_back({Permutation::identity(n), Permutation::from_cycles(d, {{c, c + 1}})});
  return gens;
}

}  // namespace

OrbitTable orbits(const PartitionSet& set) {
  if (set.n() != 2 * set.d()) throw InputError("orbit computation expects partitions of K_{2d}");
  const std::size_t count = set.size();
  std::vector<std::uint32_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0u);

  const auto gens = adjacent_transpositions(set.d());
  for (std::size_t u = 0; u < count; ++u) {
    const EdgePartition p = set.member(u);
    for (const PermPair& g : gens) {
      auto v = set.find(act(g, p));
      if (!v) throw InputError("partition set is not closed under the group action");
      const std::uint32_t a = root_of(parent, static_cast<std::uint32_t>(u));
      const std::uint32_t b = root_of(parent, *v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  OrbitTable table;
  table.d = set.d();
  table.orbit_of.assign(count, 0);
  std::vector<std::int64_t> id_of_root(count, -1);
  for (std::size_t u = 0; u < count; ++u) {
    const std::uint32_t r = root_of(parent, static_cast<std::uint32_t>(u));
    if (id_of_root[r] < 0) {
      // First visit in ascending index order, so u is the smallest code of its orbit.
      id_of_root[r] = static_cast<std::int64_t>(table.orbits.size());
      Orbit orbit;
      orbit.representative = set.member(u);
      orbit.representative_code = set.code(u);
      table.orbits.push_back(std::move(orbit));
    }
    table.orbit_of[u] = static_cast<std::uint32_t>(id_of_root[r]);
    ++table.orbits[table.orbit_of[u]].size;
  }

  for (Orbit& orbit : table.orbits) {
    orbit.stabilizer = stabilizer(orbit.representative);
    if (set.d() == 3) {
      for (int c = 0; c < 3; ++c) orbit.types.push_back(class_shape(orbit.representative, c));
    }
  }
  return table;
}

}  // namespace s2det
