#include <doctest.h>

#include "hsauto/error.hpp"
#include "hsauto/oracle.hpp"

using namespace hsauto;
using namespace hsauto::oracle;

namespace {

const Table kCycle4{{1, 2, 3, 0}, {1, 2, 3, 0}};
const Table kSwap{{1, 0}, {1, 0}};

std::vector<std::uint64_t> u64(std::initializer_list<std::uint64_t> v) { return v; }

}  // namespace

TEST_CASE("brute counts") {
  CHECK(brute_count({kCycle4, 1}, 5) == u64({0, 2, 0, 0, 0, 32}));
  CHECK(brute_count({Table{{0}, {0}}, 0}, 3) == u64({1, 2, 4, 8}));
  CHECK(brute_count({kSwap, 0}, 4) == u64({1, 0, 4, 0, 16}));
  CHECK_THROWS_AS(brute_count({kSwap, 0}, 17), BoundExceeded);
}

TEST_CASE("brute partition checks") {
  auto ok = brute_partition_check({{kSwap, 0}, {kCycle4, 1}, {kCycle4, 3}}, 8);
  CHECK(ok.ok);
  CHECK(ok.failure.empty());

  auto bad = brute_partition_check({{kCycle4, 0}, {kCycle4, 1}}, 8);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failure == std::vector<std::uint32_t>{0, 0});
  CHECK(bad.coverage == 0);

  auto twice = brute_partition_check({{kSwap, 0}, {kSwap, 0}, {kSwap, 1}}, 8);
  CHECK_FALSE(twice.ok);
  CHECK(twice.failure.empty());
  CHECK(twice.coverage == 2);

  CHECK_THROWS_AS(brute_partition_check({{kSwap, 0}}, 13), BoundExceeded);
}

TEST_CASE("Hall counts") {
  CHECK(hall_count(2, 1) == 1);
  CHECK(hall_count(2, 2) == 3);
  CHECK(hall_count(2, 3) == 13);
  CHECK(hall_count(2, 6) == 3447);
  CHECK(hall_count(1, 7) == 1);
  CHECK(hall_count(3, 2) == 7);
}
