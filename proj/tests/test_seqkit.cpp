#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recurpart/errors.hpp"
#include "recurpart/seqkit.hpp"
#include "test_util.hpp"

using namespace recurpart;
using testutil::hp;
using testutil::near;
namespace mp = boost::multiprecision;

TEST_CASE("fibonacci terms and roots") {
  const RecurrenceSpec f = make_fibonacci();
  CHECK(f.degree == 2);
  CHECK(f.index_origin == 2);
  CHECK(term(f, 1) == 1);
  CHECK(term(f, 2) == 1);
  CHECK(term(f, 10) == 55);
  CHECK(term(f, 100) == BigInt("354224848179261915075"));
  CHECK(near(f.dominant_root, (1 + mp::sqrt(HPReal(5))) / 2, 60));
  CHECK(near(f.lambda(), 1 / mp::sqrt(HPReal(5)), 60));
  CHECK(near(f.second_modulus(), 1 / f.dominant_root, 60));
}

TEST_CASE("pell terms and binet data") {
  const RecurrenceSpec p = make_pell();
  CHECK(term(p, 5) == 29);
  CHECK(near(p.dominant_root, 1 + mp::sqrt(HPReal(2)), 60));
  CHECK(near(p.lambda(), "0.35355339059327376220042218105242451964241796884424", 48));
}

TEST_CASE("binet reconstruction holds to high index") {
  const RecurrenceSpec t = make_recurrence({1, 1, 1}, {1, 2, 4}, "tribonacci");
  CHECK(near(t.dominant_root, "1.8392867552141611325518525646532866004241787460976", 48));
  for (long k : {1L, 7L, 40L, 64L}) {
    HPComplex acc;
    acc += t.binet_coeffs[0] * pow(HPComplex(t.dominant_root), static_cast<int>(k));
    for (std::size_t j = 0; j < t.conjugate_roots.size(); ++j) {
      acc += t.binet_coeffs[j + 1] * pow(t.conjugate_roots[j], static_cast<int>(k));
    }
    const HPReal exact = to_hp(term(t, k));
    CHECK(mp::abs(acc.re - exact) / exact < pow10_neg(working_digits() - 8));
  }
}

TEST_CASE("parts below a limit") {
  const RecurrenceSpec f = make_fibonacci();
  const auto parts = parts_up_to(f, term(f, 20));
  CHECK(parts.front() == 1);
  CHECK(parts.back() == term(f, 20));
  CHECK(parts.size() == 19);
  const auto with_origin_one = parts_up_to(make_recurrence({1, 1}, {1, 2}, "F2"), BigInt(100));
  CHECK(with_origin_one.size() == 10);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(make_recurrence({1, 1}, {2, 3}, "x"), FirstTermNotOne);
  CHECK_THROWS_AS(make_recurrence({0, 1}, {1, 2}, "x"), NotIncreasing);
  CHECK_THROWS_AS(make_recurrence({3, -2}, {1, 3}, "x"), ReducibleCharPoly);
  CHECK_THROWS_AS(make_recurrence({1}, {1}, "x"), ValidationError);
  CHECK_THROWS_AS(term(make_fibonacci(), 0), DomainError);
}

TEST_CASE("irreducibility test") {
  CHECK(char_poly_irreducible({1, 1}));
  CHECK(char_poly_irreducible({2, 1}));
  CHECK(char_poly_irreducible({1, 1, 1}));
  CHECK_FALSE(char_poly_irreducible({3, -2}));
  // x^4 - 2x^2 - ... = (x^2 - x - 1)(x^2 + x - 1) = x^4 - 3x^2 + 1
  CHECK_FALSE(char_poly_irreducible({0, 3, 0, -1}));
}

TEST_CASE("cache key tracks precision") {
  const RecurrenceSpec p = make_pell();
  const std::string k64 = cache_key(p);
  PrecisionScope scope(40);
  CHECK(cache_key(p) != k64);
}
