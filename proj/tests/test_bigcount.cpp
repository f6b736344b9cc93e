#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recurpart/bigcount.hpp"
#include "recurpart/errors.hpp"
#include "test_util.hpp"

using namespace recurpart;

// Reference counts from an independent Python table.

TEST_CASE("fibonacci partition counts") {
  CHECK(count_pF(0) == 1);
  CHECK(count_pF(5) == 6);
  CHECK(count_pF(100) == 97075);
  CHECK(count_pF(1000) == BigInt("1013742289697"));
}

TEST_CASE("pell partition counts") {
  const CountTable t = count_table(make_pell(), 1000);
  CHECK(t.counts[100] == 2871);
  CHECK(t.counts[1000] == 78126366);
  CHECK(t.spec_label == "pell");
}

TEST_CASE("table matches enumeration") {
  const std::vector<BigInt> parts = {1, 2, 3, 5, 8, 13, 21, 34, 55};
  const CountTable t = count_table(parts, 60);
  for (long long n = 0; n <= 60; ++n) CHECK(t.counts[n] == brute_force_count(parts, n));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(brute_force_count({1, 2}, 20000), OracleTooLarge);
  CHECK_THROWS_AS(log_count(BigInt(0)), LogOfZero);
  CHECK_THROWS_AS(count_table(std::vector<BigInt>{}, 10), ValidationError);
  CHECK_THROWS_AS(count_table(std::vector<BigInt>{1, 1}, 10), ValidationError);
  const std::size_t saved = memory_budget();
  set_memory_budget(1024);
  CHECK_THROWS_AS(count_table(make_fibonacci(), 100000), CapacityExceeded);
  set_memory_budget(saved);
}

TEST_CASE("log of a count") {
  CHECK(testutil::near(log_count(BigInt(97075)), boost::multiprecision::log(HPReal(97075)), 60));
}
