#include <doctest.h>

#include <algorithm>

#include "../support.hpp"
#include "s2det/errors.hpp"
#include "s2det/parallel.hpp"
#include "s2det/partition_set.hpp"
#include "s2det/tree_shape.hpp"

using namespace s2det;

TEST_CASE("small enumeration counts") {
  CHECK(enumerate(1, false).size() == 1);
  CHECK(enumerate(1, true).size() == 1);
  CHECK(enumerate(2, false).size() == 20);
  CHECK(enumerate(2, true).size() == 12);
  CHECK(homogeneous_partition_count(1) == 1);
  CHECK(homogeneous_partition_count(2) == 20);
  CHECK(homogeneous_partition_count(3) == 756756);
}

TEST_CASE("d=2 enumeration matches a filter over all 64 colorings") {
  std::vector<std::uint64_t> homogeneous;
  std::vector<std::uint64_t> cycle_free;
  for (std::uint64_t code = 0; code < 64; ++code) {
    const EdgePartition p = decode_partition(code, 2, 4);
    const auto sizes = p.class_sizes();
    if (sizes[0] != 3) continue;
    homogeneous.push_back(code);
    if (is_cycle_free(p)) cycle_free.push_back(code);
  }
  const auto all = enumerate(2, false);
  const auto cf = enumerate(2, true);
  CHECK(std::vector<std::uint64_t>(all.codes().begin(), all.codes().end()) == homogeneous);
  CHECK(std::vector<std::uint64_t>(cf.codes().begin(), cf.codes().end()) == cycle_free);
}

TEST_CASE("d=3 counts and member properties") {
  const auto all = enumerate(3, false);
  CHECK(all.size() == homogeneous_partition_count(3));
  const auto& cf = *test::cycle_free_set(3);
  REQUIRE(cf.size() == 66240);
  CHECK(std::is_sorted(cf.codes().begin(), cf.codes().end()));
  std::size_t cyclic_in_all = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const EdgePartition p = all.member(i);
    REQUIRE(is_homogeneous(p));
    if (!is_cycle_free(p)) {
      ++cyclic_in_all;
      REQUIRE_FALSE(cf.contains(p));
    } else {
      REQUIRE(cf.contains(p));
    }
  }
  CHECK(all.size() - cyclic_in_all == cf.size());
}

TEST_CASE("cycle-free homogeneous classes are spanning trees of admissible shape") {
  const auto& cf = *test::cycle_free_set(3);
  for (std::size_t i = 0; i < cf.size(); ++i) {
    const EdgePartition p = cf.member(i);
    for (int c = 0; c < 3; ++c) {
      REQUIRE(class_components(p, c) == 1);
      const TreeShape s = class_shape(p, c);
      REQUIRE(s != TreeShape::NotTree);
      REQUIRE(s != TreeShape::S6);
      REQUIRE(s != TreeShape::C6);
    }
  }
}

TEST_CASE("sharded enumeration equals the serial reference for any thread count") {
  for (int d = 1; d <= 3; ++d) {
    for (bool cf : {false, true}) {
      const auto serial = reference::enumerate(d, cf);
      for (int threads : {1, 3}) {
        par::set_threads(threads);
        const auto sharded = enumerate(d, cf);
        REQUIRE(std::ranges::equal(serial.flat_colors(), sharded.flat_colors()));
      }
    }
  }
  par::set_threads(par::max_threads());
}

TEST_CASE("membership lookups") {
  const auto& cf2 = *test::cycle_free_set(2);
  const auto fig1 = EdgePartition::from_classes(4, {{{1, 2}, {1, 4}, {2, 3}}, {{1, 3}, {2, 4}, {3, 4}}});
  const auto fig2 = EdgePartition::from_classes(4, {{{1, 2}, {1, 3}, {1, 4}}, {{2, 3}, {2, 4}, {3, 4}}});
  const auto lopsided = EdgePartition::from_classes(4, {{{1, 2}, {1, 4}, {2, 3}, {3, 4}}, {{1, 3}, {2, 4}}});
  CHECK(contains(cf2, fig1));
  CHECK_FALSE(contains(cf2, fig2));
  CHECK_FALSE(contains(cf2, lopsided));
  CHECK_THROWS_AS(contains(cf2, EdgePartition(3, 6)), InputError);
  CHECK_FALSE(cf2.find_code(0).has_value());
}

TEST_CASE("infeasible and malformed requests are refused") {
  CHECK_THROWS_AS(enumerate(4, false), InputError);
  CHECK_THROWS_AS(enumerate(0, true), InputError);
  std::vector<std::uint8_t> unsorted{1, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1};
  CHECK_THROWS_AS(PartitionSet(2, 4, unsorted), InputError);
  std::vector<std::uint8_t> ragged{0, 1, 0};
  CHECK_THROWS_AS(PartitionSet(2, 4, ragged), InputError);
}
