#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kfilt/ext_lattice.hpp"

using namespace kfilt;

TEST_CASE("lattice basics") {
  CHECK(gcd_level(4, 6) == 2);
  CHECK(lcm_level(4, 6) == 12);
  CHECK(divides(3, 12));
  CHECK_FALSE(divides(5, 12));
}

TEST_CASE("relative degrees along towers") {
  CHECK(rel_degree(6, 2) == 3);
  CHECK(rel_degree(6, 1) == 6);
  CHECK(rel_degree(4, 4) == 1);
  CHECK_THROWS_AS(rel_degree(4, 3), Error);
  try {
    rel_degree(4, 3);
  } catch (const Error& e) {
    CHECK(e.code == Errc::NotATower);
  }
}

TEST_CASE("tensor products split into compositum copies") {
  TensorComponent t = tensor_decompose(6, 4, 2);
  CHECK(t.level == 12);
  CHECK(t.multiplicity == 1);

  t = tensor_decompose(2, 3, 1);
  CHECK(t.level == 6);
  CHECK(t.multiplicity == 1);

  t = tensor_decompose(2, 2, 1);
  CHECK(t.level == 2);
  CHECK(t.multiplicity == 2);

  t = tensor_decompose(6, 4, 1);
  CHECK(t.level == 12);
  CHECK(t.multiplicity == 2);
}

TEST_CASE("tensor decomposition respects degree bookkeeping") {
  // [l:base] * [m:base] = multiplicity * [level:base]
  const Level pool[] = {1, 2, 3, 4, 6, 12};
  for (Level base : pool)
    for (Level l : pool)
      for (Level m : pool) {
        if (!divides(base, l) || !divides(base, m)) continue;
        TensorComponent t = tensor_decompose(l, m, base);
        CHECK(rel_degree(l, base) * rel_degree(m, base) ==
              t.multiplicity * rel_degree(t.level, base));
      }
}
