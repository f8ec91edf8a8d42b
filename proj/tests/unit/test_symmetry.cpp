#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "../support.hpp"
#include "s2det/appendix.hpp"
#include "s2det/errors.hpp"
#include "s2det/symmetry.hpp"
#include "s2det/tensor.hpp"

using namespace s2det;

namespace {

Permutation cyc(int n, std::vector<std::vector<int>> cycles) { return Permutation::from_cycles(n, cycles); }

bool stabilizes(const PermPair& g, const EdgePartition& p) { return act(g, p) == p; }

const EdgePartition& rep(int label) { return appendix_data().representatives.at(label - 1).partition; }

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation a = cyc(4, {{1, 2, 3}});
  const Permutation b = cyc(4, {{3, 4}});
  CHECK(a(1) == 2);
  CHECK(a(3) == 1);
  CHECK((a * b)(3) == a(4));
  CHECK((a * a.inverse()) == Permutation::identity(4));
  CHECK(a.sign() == 1);
  CHECK(b.sign() == -1);
  CHECK((a * b).sign() == -1);
  CHECK(a.to_cycle_string() == "(1,2,3)");
  CHECK(Permutation::identity(3).to_cycle_string() == "e");
  std::vector<int> images{2, 1, 3};
  CHECK(Permutation::from_images(images) == cyc(3, {{1, 2}}));
  std::vector<int> bad{1, 1, 3};
  CHECK_THROWS_AS(Permutation::from_images(bad), InputError);
  CHECK_THROWS_AS(cyc(3, {{1, 4}}), InputError);
  CHECK(all_permutations(4).size() == 24);
  CHECK(factorial(6) == 720);
  CHECK(group_order(3) == 4320);
}

TEST_CASE("the relabelling action") {
  const EdgePartition p0 = build_E(2);
  const PermPair id{Permutation::identity(4), Permutation::identity(2)};
  CHECK(act(id, p0) == p0);
  CHECK(stabilizes({cyc(4, {{1, 2}, {3, 4}}), Permutation::identity(2)}, p0));
  CHECK(stabilizes({cyc(4, {{1, 4, 2, 3}}), cyc(2, {{1, 2}})}, p0));
  CHECK(stabilizes({cyc(4, {{1, 3, 2, 4}}), cyc(2, {{1, 2}})}, p0));
  CHECK(stabilizer(p0).size() == 4);

  // Edge (i,j) of color c goes to (σi,σj) of color τ(c).
  const PermPair g{cyc(4, {{1, 2, 3, 4}}), cyc(2, {{1, 2}})};
  const EdgePartition q = act(g, p0);
  for (Edge e : edge_list(4)) {
    int a = g.sigma(e.i);
    int b = g.sigma(e.j);
    if (a > b) std::swap(a, b);
    CHECK(q.color(a, b) == g.tau(p0.color(e.i, e.j) + 1) - 1);
  }
}

TEST_CASE("the action composes") {
  std::mt19937_64 rng(5);
  const auto& set = *test::cycle_free_set(3);
  std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const EdgePartition p = set.member(pick(rng));
    const PermPair g{random_permutation(6, rng), random_permutation(3, rng)};
    const PermPair h{random_permutation(6, rng), random_permutation(3, rng)};
    REQUIRE(act(g, act(h, p)) == act(g * h, p));
    REQUIRE(set.contains(act(g, p)));
  }
}

TEST_CASE("d=2 forms a single orbit") {
  const OrbitTable t = orbits(*test::cycle_free_set(2));
  REQUIRE(t.orbits.size() == 1);
  CHECK(t.orbits[0].size == 12);
  CHECK(t.orbits[0].stabilizer.size() == 4);
}

TEST_CASE("d=3 orbit table") {
  const auto& set = *test::cycle_free_set(3);
  const OrbitTable t = orbits(set);
  REQUIRE(t.orbits.size() == 19);
  std::map<std::uint64_t, int> sizes;
  std::uint64_t total = 0;
  for (const Orbit& o : t.orbits) {
    ++sizes[o.size];
    total += o.size;
    CHECK(o.size * o.stabilizer.size() == 4320);
    CHECK(set.code(set.find(o.representative).value()) == o.representative_code);
    for (const PermPair& g : o.stabilizer) CHECK(stabilizes(g, o.representative));
  }
  CHECK(total == 66240);
  CHECK(sizes == std::map<std::uint64_t, int>{{720, 3}, {1440, 1}, {2160, 1}, {4320, 14}});

  // The multiset of class shapes is an orbit invariant; the representative has the smallest code.
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Orbit& o = t.orbits[t.orbit_of[i]];
    std::vector<TreeShape> shapes;
    for (int c = 0; c < 3; ++c) shapes.push_back(class_shape(set.member(i), c));
    std::vector<TreeShape> expected = o.types;
    std::sort(shapes.begin(), shapes.end());
    std::sort(expected.begin(), expected.end());
    REQUIRE(shapes == expected);
    REQUIRE(set.code(i) >= o.representative_code);
  }
}

TEST_CASE("tabulated representatives match the computed orbits") {
  const auto& set = *test::cycle_free_set(3);
  const OrbitTable t = orbits(set);
  const AppendixReport report = match_appendix(t, set, appendix_data());
  for (const auto& m : report.mismatches) INFO(m);
  CHECK(report.pass());
  CHECK(report.orbits_hit == 19);
  CHECK(stabilizer(rep(1)).size() == 1);
  CHECK(stabilizer(rep(2)).size() == 6);
  CHECK(stabilizer(rep(10)).size() == 2);
  CHECK(stabilizer(rep(12)).size() == 3);
  CHECK(stabilizer(rep(19)).size() == 6);
  CHECK(rep(19) == build_E(3));
}

TEST_CASE("listed stabilizer elements fix their representatives") {
  const Permutation e3 = Permutation::identity(3);
  CHECK(stabilizes({cyc(6, {{1, 6}, {2, 5}, {3, 4}}), e3}, rep(2)));
  CHECK(stabilizes({cyc(6, {{1, 2, 4, 6, 5, 3}}), cyc(3, {{1, 2, 3}})}, rep(2)));
  CHECK(stabilizes({cyc(6, {{1, 5, 4, 6, 2, 3}}), cyc(3, {{1, 2, 3}})}, rep(3)));
  CHECK(stabilizes({cyc(6, {{1, 4, 2}, {3, 5, 6}}), cyc(3, {{1, 3, 2}})}, rep(3)));
  CHECK(stabilizes({cyc(6, {{1, 6}, {2, 5}, {3, 4}}), e3}, rep(10)));
  CHECK(stabilizes({cyc(6, {{1, 4, 2}, {3, 5, 6}}), cyc(3, {{1, 2, 3}})}, rep(12)));
  CHECK(stabilizes({cyc(6, {{1, 2, 4}, {3, 6, 5}}), cyc(3, {{1, 3, 2}})}, rep(12)));
  CHECK(stabilizes({cyc(6, {{1, 2}, {3, 4}, {5, 6}}), e3}, rep(19)));
  CHECK(stabilizes({cyc(6, {{1, 3, 5, 2, 4, 6}}), cyc(3, {{1, 2, 3}})}, rep(19)));
}

TEST_CASE("signature formula for the tabulated representatives") {
  const auto& t3 = test::signatures(3);
  const EpsilonReport report = epsilon_formula_check(t3, appendix_data(), 2000, 17);
  CHECK(report.samples == 2000);
  CHECK(report.violations == 0);
  std::mt19937_64 rng(23);
  const Permutation swap12 = cyc(3, {{1, 2}});
  for (const AppendixEntry& e : appendix_data().representatives) {
    const Permutation sigma = random_permutation(6, rng);
    CHECK(t3.sign(act(PermPair{sigma, Permutation::identity(3)}, e.partition)) == 1);
    CHECK(t3.sign(act(PermPair{sigma, swap12}, e.partition)) == -1);
  }
  const EpsilonReport d2 = epsilon_d2_sweep(test::signatures(2));
  CHECK(d2.samples == 48);
  CHECK(d2.violations == 0);
}

TEST_CASE("d=3 signature ignores vertex relabelling") {
  std::mt19937_64 rng(29);
  const auto& t3 = test::signatures(3);
  const auto& set = t3.nodes();
  std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t i = pick(rng);
    const PermPair g{random_permutation(6, rng), Permutation::identity(3)};
    REQUIRE(t3.sign(act(g, set.member(i))) == t3.sign_at(static_cast<std::uint32_t>(i)));
  }
}

TEST_CASE("representative data parsing") {
  CHECK(appendix_data().representatives.size() == 19);
  CHECK_THROWS_AS(parse_appendix("{"), InputError);
  CHECK_THROWS_AS(parse_appendix(R"({"d": 2, "representatives": []})"), InputError);
  CHECK_THROWS_AS(parse_appendix(R"({"d": 3, "representatives": [{"label": 1}]})"), InputError);
}
