#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "../support.hpp"
#include "s2det/errors.hpp"
#include "s2det/partition.hpp"
#include "s2det/tree_shape.hpp"

using namespace s2det;

namespace {

EdgePartition k4(std::vector<std::vector<Edge>> classes) { return EdgePartition::from_classes(4, classes); }

// Depth-first search for a cycle in one color class, independent of the union-find code.
bool class_has_cycle(const EdgePartition& p, int c) {
  const int n = p.n();
  std::vector<std::vector<int>> adj(n + 1);
  for (Edge e : p.class_edges(c)) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<int> state(n + 1, 0);
  std::function<bool(int, int)> visit = [&](int v, int parent) {
    state[v] = 1;
    for (int w : adj[v]) {
      if (w == parent) continue;
      if (state[w] == 1) return true;
      if (state[w] == 0 && visit(w, v)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 1; v <= n; ++v)
    if (state[v] == 0 && visit(v, 0)) return true;
  return false;
}

}  // namespace

TEST_CASE("edge_index follows lexicographic order") {
  CHECK(edge_index(1, 2, 6) == 0);
  CHECK(edge_index(1, 6, 6) == 4);
  CHECK(edge_index(5, 6, 6) == 14);
  CHECK_THROWS_AS(edge_index(2, 2, 6), InputError);
  CHECK_THROWS_AS(edge_index(3, 2, 6), InputError);
  CHECK_THROWS_AS(edge_index(1, 7, 6), InputError);
  CHECK_THROWS_AS(edge_index(0, 3, 6), InputError);
  CHECK_THROWS_AS(edge_at(15, 6), InputError);
}

TEST_CASE("edge_index round-trips for every K_n up to 16 vertices") {
  for (int n = 2; n <= kMaxVertices; ++n) {
    std::size_t expected = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        REQUIRE(edge_index(i, j, n) == expected);
        REQUIRE(edge_at(expected, n) == Edge{i, j});
        REQUIRE(edge_list(n)[expected] == Edge{i, j});
        ++expected;
      }
    }
    CHECK(expected == edge_count(n));
  }
}

TEST_CASE("faces are normalized and list their edges") {
  const Face f = Face::make(3, 1, 2);
  CHECK(f == Face{1, 2, 3});
  CHECK(f.edge_indices(4) == std::array<std::size_t, 3>{0, 1, 3});
  CHECK_THROWS_AS(Face::make(1, 1, 2), InputError);
  CHECK_THROWS_AS((Face{1, 2, 5}.edge_indices(4)), InputError);
  CHECK(all_faces(4).size() == 4);
  CHECK(all_faces(6).size() == 20);
  const auto faces = all_faces(6);
  CHECK(std::is_sorted(faces.begin(), faces.end()));
}

TEST_CASE("homogeneity compares edge counts") {
  const auto fig1 = k4({{{1, 2}, {1, 4}, {2, 3}}, {{1, 3}, {2, 4}, {3, 4}}});
  const auto fig3 = k4({{{1, 2}, {1, 3}}, {{2, 3}, {1, 4}, {2, 4}, {3, 4}}});
  CHECK(is_homogeneous(fig1));
  CHECK_FALSE(is_homogeneous(fig3));
  CHECK_FALSE(is_cycle_free(fig3));
  const EdgePartition mono(3, 6);
  CHECK_FALSE(is_homogeneous(mono));
  CHECK(is_homogeneous(EdgePartition(1, 2)));
}

TEST_CASE("cycle-freeness per class") {
  const auto fig1 = k4({{{1, 2}, {1, 4}, {2, 3}}, {{1, 3}, {2, 4}, {3, 4}}});
  const auto fig2 = k4({{{1, 2}, {1, 3}, {1, 4}}, {{2, 3}, {2, 4}, {3, 4}}});
  CHECK(is_cycle_free(fig1));
  CHECK(is_homogeneous(fig2));
  CHECK_FALSE(is_cycle_free(fig2));
  // Color 2 of 3 is empty and vacuously acyclic.
  const auto sparse = EdgePartition::from_classes(3, {{{1, 2}, {2, 3}}, {{1, 3}}, {}});
  CHECK(is_cycle_free(sparse));
  CHECK(class_components(sparse, 2) == 3);
}

TEST_CASE("cycle detection agrees with a depth-first oracle on random colorings") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const int d = 1 + trial % 4;
    const int n = 3 + trial % 6;
    const EdgePartition p = test::random_coloring(d, n, rng);
    bool oracle = true;
    for (int c = 0; c < d; ++c) oracle = oracle && !class_has_cycle(p, c);
    REQUIRE(is_cycle_free(p) == oracle);
    const auto sizes = p.class_sizes();
    REQUIRE(is_homogeneous(p) == std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == sizes[0]; }));
  }
}

TEST_CASE("partition construction validates its input") {
  CHECK_THROWS_AS(EdgePartition(0, 4), InputError);
  CHECK_THROWS_AS(EdgePartition(2, 17), InputError);
  std::vector<int> short_colors{0, 1};
  CHECK_THROWS_AS(EdgePartition::from_colors(2, 4, short_colors), InputError);
  std::vector<int> bad{0, 1, 2, 0, 1, 0};
  CHECK_THROWS_AS(EdgePartition::from_colors(2, 4, bad), InputError);
  CHECK_THROWS_AS(k4({{{1, 2}, {1, 2}, {2, 3}}, {{1, 3}, {2, 4}, {3, 4}}}), InputError);
  CHECK_THROWS_AS(k4({{{1, 2}, {2, 3}}, {{1, 3}, {2, 4}, {3, 4}}}), InputError);
  EdgePartition p(2, 4);
  CHECK_THROWS_AS(p.set_color(6, 0), InputError);
  CHECK_THROWS_AS(p.set_color(0, 2), InputError);
}

TEST_CASE("canonical codes are positional base-d numbers") {
  CHECK(canonical_code(EdgePartition(2, 4)) == 0);
  std::vector<int> colors{1, 0, 0, 0, 0, 0};
  CHECK(canonical_code(EdgePartition::from_colors(2, 4, colors)) == 32);
  std::set<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < 64; ++code) {
    const EdgePartition p = decode_partition(code, 2, 4);
    REQUIRE(canonical_code(p) == code);
    codes.insert(canonical_code(p));
  }
  CHECK(codes.size() == 64);
  CHECK_THROWS_AS(decode_partition(64, 2, 4), InputError);
  CHECK(code_fits(3, 6));
  CHECK_FALSE(code_fits(16, 16));
  CHECK_THROWS_AS(canonical_code(EdgePartition(16, 16)), InputError);
}

TEST_CASE("describe prints 1-based class names") {
  const auto fig1 = k4({{{1, 2}, {1, 4}, {2, 3}}, {{1, 3}, {2, 4}, {3, 4}}});
  CHECK(describe(fig1) == "G1={12,14,23} G2={13,24,34}");
}

TEST_CASE("tree shapes on six vertices") {
  CHECK(classify_tree(std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}) == TreeShape::I6);
  CHECK(classify_tree(std::vector<Edge>{{4, 6}, {1, 4}, {1, 3}, {1, 2}, {2, 5}}) == TreeShape::E6);
  CHECK(classify_tree(std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}) == TreeShape::S6);
  // Branch vertex 3 with leaves 1 and 2, then a path 3-4-5-6.
  CHECK(classify_tree(std::vector<Edge>{{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}) == TreeShape::Y6);
  CHECK(classify_tree(std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {4, 5}, {4, 6}}) == TreeShape::H6);
  CHECK(classify_tree(std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {5, 6}}) == TreeShape::C6);
  CHECK(classify_tree(std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}}) == TreeShape::NotTree);
  CHECK_THROWS_AS(classify_tree(std::vector<Edge>{{1, 2}, {2, 3}}), InputError);
  CHECK_THROWS_AS(classify_tree(std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 7}}), InputError);
  CHECK(to_string(TreeShape::H6) == "H6");
  CHECK(tree_shape_from_string("Y6") == TreeShape::Y6);
  CHECK_THROWS_AS(tree_shape_from_string("Q6"), InputError);
}
