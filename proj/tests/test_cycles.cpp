#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kfilt/random_inputs.hpp"

using namespace kfilt;

namespace {

const int kP = 0, kQ1 = 1, kW2 = 2, kW3 = 3;

ZeroCycle a_point(const Geometry& g, const AbElem& a, Int c, Level base) {
  ZeroCycle Z = cyc_zero(base, 0);
  cyc_add_term(g, Z, ProductPoint{{}, a}, c);
  return Z;
}

ZeroCycle deg0(const Geometry& g, const AbElem& a, Level base) {
  ZeroCycle Z = a_point(g, a, 1, base);
  cyc_add_term(g, Z, ProductPoint{{}, g.ab.zero(base)}, -1);
  return Z;
}

}  // namespace

TEST_CASE("cycle degree follows the residue level") {
  Geometry g = make_suite_geometry(1);
  ZeroCycle Z = cyc_zero(1, 1);
  cyc_add_term(g, Z, ProductPoint{{kW3}, g.ab.zero(1)}, 1);
  CHECK(cyc_degree(g, Z) == 3);
  cyc_add_term(g, Z, ProductPoint{{kQ1}, g.ab.zero(1)}, 2);
  CHECK(cyc_degree(g, Z) == 5);
}

TEST_CASE("restriction then pushforward scales by the relative degree") {
  Geometry g = make_suite_geometry(2);
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    ZeroCycle Z = random_cycle(g, rng);
    for (Level e : suite_levels())
      for (Level l : suite_levels()) {
        if (!divides(e, l) || e == l) continue;
        ZeroCycle Ze = cyc_res(g, Z, e);
        CHECK(pushforward_base(g, cyc_res(g, Ze, l), e) == cyc_scale(l / e, Ze));
      }
  }
}

TEST_CASE("restriction preserves degree and pushforward rescales it") {
  Geometry g = make_suite_geometry(1);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    ZeroCycle Z = random_cycle(g, rng);
    for (Level l : suite_levels()) {
      ZeroCycle up = cyc_res(g, Z, l);
      CHECK(cyc_degree(g, up) == cyc_degree(g, Z));
      CHECK(cyc_degree(g, pushforward_base(g, up, 1)) == cyc_degree(g, up) * l);
    }
  }
}

TEST_CASE("group-law product expands bilinearly") {
  Geometry g = make_suite_geometry(1);
  AbElem a{1, {1, 0}}, b{1, {0, 1}};
  ZeroCycle prod = pontryagin(g, deg0(g, a, 1), deg0(g, b, 1));
  ZeroCycle want = cyc_zero(1, 0);
  cyc_add_term(g, want, ProductPoint{{}, g.ab.add(a, b)}, 1);
  cyc_add_term(g, want, ProductPoint{{}, a}, -1);
  cyc_add_term(g, want, ProductPoint{{}, b}, -1);
  cyc_add_term(g, want, ProductPoint{{}, g.ab.zero(1)}, 1);
  CHECK(prod == want);
}

TEST_CASE("group-law product: identity, commutativity, associativity, degree") {
  Geometry g = make_suite_geometry(1);
  Rng rng(17);
  ZeroCycle unit = a_point(g, g.ab.zero(2), 1, 2);
  for (int i = 0; i < 10; ++i) {
    ZeroCycle A = cyc_res(g, a_point(g, random_ab_elem(g, rng), 2, 1), 2);
    ZeroCycle B = cyc_res(g, deg0(g, random_ab_elem(g, rng), 1), 2);
    ZeroCycle C = cyc_res(g, a_point(g, random_ab_elem(g, rng), -1, 1), 2);
    CHECK(pontryagin(g, A, unit) == A);
    CHECK(pontryagin(g, A, B) == pontryagin(g, B, A));
    CHECK(pontryagin(g, pontryagin(g, A, B), C) == pontryagin(g, A, pontryagin(g, B, C)));
    CHECK(cyc_degree(g, pontryagin(g, A, B)) == cyc_degree(g, A) * cyc_degree(g, B));
  }
}

TEST_CASE("product points account for splitting of composita") {
  Geometry g = make_suite_geometry(2);
  // One quadratic and one cubic coordinate over the ground level meet in a
  // single closed point of degree 6.
  std::map<int, Divisor> sel;
  sel[0] = point_divisor(0, kW2, 1);
  sel[1] = point_divisor(1, kW3, 1);
  ZeroCycle A = a_point(g, g.ab.zero(1), 1, 1);
  ZeroCycle W = product_cycle(g, sel, A, 1);
  REQUIRE(W.terms.size() == 1);
  CHECK(W.terms.begin()->second == 1);
  CHECK(cyc_degree(g, W) == 6);

  // Two quadratic coordinates give a split fiber: two closed points.
  sel[1] = point_divisor(1, kW2, 1);
  W = product_cycle(g, sel, A, 1);
  REQUIRE(W.terms.size() == 1);
  CHECK(W.terms.begin()->second == 2);
  CHECK(cyc_degree(g, W) == 4);
}

TEST_CASE("product cycle degree is multiplicative") {
  Geometry g = make_suite_geometry(2);
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    Level base = suite_levels()[i % suite_levels().size()];
    std::map<int, Divisor> sel;
    Divisor D0{0, base, {}};
    D0.coeff[kQ1] = 1;
    D0.coeff[kW3] = 1;
    sel[0] = D0;
    ZeroCycle A = cyc_res(g, a_point(g, random_ab_elem(g, rng), 3, 1), base);
    ZeroCycle W = product_cycle(g, sel, A, base);
    CHECK(cyc_degree(g, W) == g.div_degree(sel[0]) * cyc_degree(g, A));
  }
}

TEST_CASE("degree-zero products die in the dimension-one model") {
  Geometry g = make_suite_geometry(1);
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    ZeroCycle P =
        pontryagin(g, deg0(g, random_ab_elem(g, rng), 1), deg0(g, random_ab_elem(g, rng), 1));
    auto [deg, pt] = modeled_chow_A(g, P);
    CHECK(deg == 0);
    CHECK(g.ab.is_zero(pt));
  }
}

TEST_CASE("width and base mismatches are rejected") {
  Geometry g = make_suite_geometry(1);
  ZeroCycle Z1 = cyc_zero(1, 1);
  ZeroCycle Z0 = cyc_zero(1, 0);
  CHECK_THROWS_AS(pontryagin(g, Z1, Z0), Error);
  ZeroCycle Z2 = cyc_zero(2, 0);
  CHECK_THROWS_AS(pontryagin(g, Z0, Z2), Error);
  CHECK_THROWS_AS(cyc_add(Z0, Z2), Error);
  CHECK_THROWS_AS(cyc_res(g, Z2, 3), Error);
  CHECK_THROWS_AS(pushforward_base(g, Z2, 3), Error);
}
