#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kfilt/random_inputs.hpp"
#include "kfilt/scenario.hpp"

using namespace kfilt;

namespace {
const int kP = 0, kQ1 = 1, kW2 = 2, kW3 = 3;
}

TEST_CASE("divisor degree counts closed points at the base") {
  Geometry g = make_suite_geometry(1);
  Divisor D = point_divisor(0, kW2, 1);
  CHECK(g.div_degree(D) == 2);
  Divisor D3 = point_divisor(0, kW3, 3);
  CHECK(g.div_degree(D3) == 1);
}

TEST_CASE("restriction splits points that become reducible") {
  Geometry g = make_suite_geometry(1);
  Divisor D = point_divisor(0, kW2, 1);
  Divisor up = g.div_res(D, 2);
  CHECK(up.base == 2);
  CHECK(up.coeff.at(kW2) == 2);  // quadratic point splits over the degree-2 level
  CHECK(g.div_degree(up) == 2);  // degree is preserved

  Divisor across = g.div_res(D, 3);
  CHECK(across.coeff.at(kW2) == 1);  // stays a single point over a coprime level
  CHECK(g.div_degree(across) == 2);
}

TEST_CASE("trace rescales rational points by the relative degree") {
  Geometry g = make_suite_geometry(1);
  Divisor D = point_divisor(0, kQ1, 4);
  Divisor down = g.div_tr(D, 2);
  CHECK(down.base == 2);
  CHECK(down.coeff.at(kQ1) == 2);
  CHECK(g.div_degree(down) == 2);

  // A point already minimal at the upper level keeps its coefficient.
  Divisor W = point_divisor(0, kW2, 2);
  CHECK(g.div_tr(W, 1).coeff.at(kW2) == 1);
}

TEST_CASE("trace after restriction is multiplication by the relative degree") {
  Geometry g = make_suite_geometry(1);
  for (Level e : suite_levels())
    for (Level l : suite_levels()) {
      if (!divides(e, l) || e == l) continue;
      for (int pt = 0; pt < 4; ++pt) {
        Divisor D = point_divisor(0, pt, e);
        Divisor round = g.div_tr(g.div_res(D, l), e);
        CHECK(round.coeff.at(pt) == l / e);
      }
    }
}

TEST_CASE("constant abelian model round trip") {
  Geometry g = make_suite_geometry(1);
  AbElem a{1, {3, -2}};
  AbElem round = g.ab.tr(g.ab.res(a, 6), 1);
  CHECK(round.v == std::vector<Int>{18, -12});
}

TEST_CASE("torsion coordinates are normalized into canonical range") {
  AbModel ab;
  ab.kind = AbModel::Kind::Constant;
  ab.constant_group.torsion = {5};
  ab.constant_group.free_rank = 1;
  AbElem a = ab.normalize(AbElem{1, {7, 7}});
  CHECK(a.v == std::vector<Int>{2, 7});
  AbElem s = ab.add(AbElem{1, {4, 1}}, AbElem{1, {3, 1}});
  CHECK(s.v == std::vector<Int>{2, 2});
  CHECK(ab.is_zero(ab.scale(5, AbElem{1, {1, 0}})));
}

TEST_CASE("table abelian model uses its matrices") {
  AbModel ab;
  ab.kind = AbModel::Kind::Table;
  ab.table_groups[1] = AbGroup{{}, 1};
  ab.table_groups[2] = AbGroup{{}, 1};
  ab.res_table[{1, 2}] = {{1}};
  ab.tr_table[{2, 1}] = {{2}};
  AbElem a{1, {3}};
  CHECK(ab.tr(ab.res(a, 2), 1).v == std::vector<Int>{6});
}

TEST_CASE("class reduction identifies involution images in the hyperelliptic model") {
  Geometry g = genus2_geometry();
  Divisor i_sy1{0, 1, {{4, 1}, {0, -1}}};
  Divisor neg_i_y1{0, 1, {{1, -1}, {0, 1}}};
  CHECK(g.pic0_equal(i_sy1, neg_i_y1, 1));
  // And iota itself lands in reduced coordinates.
  Pic0Class cls = g.iota(0, 4, 1);
  CHECK_FALSE(cls.is_zero());
  // The full relation reduces to zero.
  Divisor rel{0, 1, {{1, 1}, {4, 1}, {0, -2}}};
  CHECK(g.pic0_reduce(rel, 1).is_zero());
}

TEST_CASE("model validation accepts the bundled geometries") {
  CHECK(make_suite_geometry(2).validate_models(suite_levels()).ok());
  CHECK(genus2_geometry().validate_models({1}).ok());
}

TEST_CASE("model validation flags a broken trace table") {
  Geometry g;
  CurveModel c;
  c.name = "C";
  c.catalog = {{"p", 1}};
  g.curves.push_back(c);
  g.ab.kind = AbModel::Kind::Table;
  g.ab.table_groups[1] = AbGroup{{}, 1};
  g.ab.table_groups[2] = AbGroup{{}, 1};
  g.ab.res_table[{1, 2}] = {{1}};
  g.ab.tr_table[{2, 1}] = {{3}};  // should be multiplication by 2
  ValidationReport rep = g.validate_models({1, 2});
  CHECK_FALSE(rep.ok());
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations.front().find("2") != std::string::npos);
}

TEST_CASE("relation trace stability is enforced") {
  Geometry g = make_suite_geometry(1);
  // A divisor declared principal at level 2 whose trace is not principal
  // at the ground level.
  Relation R;
  R.level = 2;
  R.coeff = {{kQ1, 2}, {kP, -2}};
  g.curves[0].relations.push_back(R);
  ValidationReport rep = g.validate_models({1, 2});
  CHECK_FALSE(rep.ok());
}
