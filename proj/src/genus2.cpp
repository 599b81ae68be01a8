#include "kfilt/scenario.hpp"

namespace kfilt {

namespace {

// Catalog layout: 0 = p1 (Weierstrass base point), 1..3 = y1..y3,
// 4..6 = their images under the hyperelliptic involution.
constexpr int kP1 = 0;
constexpr int kY1 = 1, kY2 = 2, kY3 = 3;
constexpr int kSY1 = 4;

AbElem unit(const Geometry& g, int i) {
  AbElem e = g.ab.zero(1);
  e.v[static_cast<size_t>(i)] = 1;
  return e;
}

Divisor iota_divisor(int pt) {
  Divisor D{0, 1, {}};
  D.coeff[pt] += 1;
  D.coeff[kP1] -= 1;
  return D;
}

DatumRow pure_j_row(const Geometry& g, int pt) {
  return DatumRow{{iota_divisor(pt)}, g.ab.zero(1)};
}

DatumRow pure_a_row(const Geometry& g, int gen) {
  return DatumRow{{Divisor{0, 1, {}}}, unit(g, gen)};
}

void add_point(const Geometry& g, ZeroCycle& Z, int pt, const AbElem& a, Int c) {
  cyc_add_term(g, Z, ProductPoint{{pt}, a}, c);
}

}  // namespace

Geometry genus2_geometry() {
  Geometry g;
  CurveModel c;
  c.name = "C";
  c.catalog = {{"p1", 1}, {"y1", 1}, {"y2", 1}, {"y3", 1}, {"sy1", 1}, {"sy2", 1}, {"sy3", 1}};
  c.base_point = kP1;
  for (int i = 1; i <= 3; ++i) {
    Relation R;
    R.level = 1;
    R.coeff = {{i, 1}, {i + 3, 1}, {kP1, -2}};
    c.relations.push_back(std::move(R));
  }
  c.involution = {{kP1, kP1}, {1, 4}, {4, 1}, {2, 5}, {5, 2}, {3, 6}, {6, 3}};
  c.weierstrass = kP1;
  g.curves.push_back(std::move(c));

  g.ab.kind = AbModel::Kind::Constant;
  g.ab.model_dimension = 2;
  g.ab.constant_group.free_rank = 3;
  for (int i = 1; i <= 3; ++i) {
    std::vector<Int> e(3, 0), se(3, 0);
    e[i - 1] = 1;
    se[i - 1] = -1;
    g.ab_point[{0, i}] = e;
    g.ab_point[{0, i + 3}] = se;
  }
  g.ab_point[{0, kP1}] = {0, 0, 0};
  return g;
}

Report genus2_example() {
  Geometry g = genus2_geometry();
  Report rep;
  rep.scenario = "genus2";

  AbElem zero = g.ab.zero(1);
  AbElem e1 = unit(g, 0), e2 = unit(g, 1), e3 = unit(g, 2);

  // (a) The depth-three generator family attached to (y1, y2, y3): the
  // mixed symbol maps to the alternating eight-term cycle.
  {
    SymbolDatum S{1, {pure_j_row(g, kY1), pure_a_row(g, 1), pure_a_row(g, 2)}};
    ZeroCycle Z = psi_r_closed(g, S);
    ZeroCycle want = cyc_zero(1, 1);
    AbElem e23 = g.ab.add(e2, e3);
    add_point(g, want, kY1, e23, 1);
    add_point(g, want, kY1, e2, -1);
    add_point(g, want, kY1, e3, -1);
    add_point(g, want, kY1, zero, 1);
    add_point(g, want, kP1, e23, -1);
    add_point(g, want, kP1, e2, 1);
    add_point(g, want, kP1, e3, 1);
    add_point(g, want, kP1, zero, -1);
    CheckResult c{"generator-family-depth-3", Z == want ? "pass" : "fail", {}};
    c.detail.push_back("mixed symbol maps to the eight-term alternating cycle");
    c.detail.push_back(to_string(g, Z));
    rep.add(std::move(c));
  }

  // (b) Pure-A symbols map to a triple Pontryagin product of degree-zero
  // cycles, which vanishes in the Chow group of an abelian surface.
  {
    SymbolDatum S{1, {pure_a_row(g, 0), pure_a_row(g, 1), pure_a_row(g, 2)}};
    ZeroCycle Z = psi_r_closed(g, S);
    ZeroCycle acc = cyc_zero(1, 0);
    cyc_add_term(g, acc, ProductPoint{{}, zero}, 1);
    for (const AbElem& a : {e1, e2, e3}) {
      ZeroCycle f = cyc_zero(1, 0);
      cyc_add_term(g, f, ProductPoint{{}, a}, 1);
      cyc_add_term(g, f, ProductPoint{{}, zero}, -1);
      acc = pontryagin(g, acc, f);
    }
    ZeroCycle want = cyc_zero(1, 1);
    for (auto& [p, c] : acc.terms) add_point(g, want, kP1, p.a, c);
    bool match = (Z == want);
    CheckResult c{"pure-A-triple-product", match ? "axiom-cited" : "fail", {}};
    c.detail.push_back("factors as a Pontryagin product of 3 >= dim(A)+1 = 3 degree-zero cycles");
    c.detail.push_back("such products vanish in the Chow group of the abelian factor");
    if (cyc_degree(g, acc) != 0) {
      c.status = "fail";
      c.detail.push_back("witness product has nonzero degree");
    }
    rep.add(std::move(c));
  }

  // (c) The two-torsion certificate chain for a repeated coordinate.
  {
    Divisor i_sy1 = iota_divisor(kSY1);
    Divisor neg_i_y1{0, 1, {{kY1, -1}, {kP1, 1}}};
    bool ok1 = g.pic0_equal(i_sy1, neg_i_y1, 1);
    rep.add(CheckResult{"involution-negates-classes", ok1 ? "pass" : "fail",
                        {"the involution image of y1 represents the negated class"}});

    Atom ay1 = curve_atom(g, 0, kY1);
    Atom asy1 = curve_atom(g, 0, kSY1);
    Atom ae1 = ab_atom(g, 0), ae3 = ab_atom(g, 2);
    std::vector<SlotEntry> pos = {{{{ay1, 1}}}, {{{ae1, 1}}}, {{{ae3, 1}}}};
    std::vector<SlotEntry> neg = {{{{ay1, -1}}}, {{{ae1, -1}}}, {{{ae3, 1}}}};
    SymbolSum target = sym_normalize(1, pos, 1);
    bool ok2 = (sym_normalize(1, neg, 1) == target);
    rep.add(CheckResult{"sign-pair-identity", ok2 ? "pass" : "fail",
                        {"negating two slots leaves the symbol fixed"}});

    std::vector<WrRow> rows = {
        {1, 1, {{{{ay1, 1}}}, {{{ae1, 1}}}, {{{ae3, 1}}}}},
        {1, 1, {{{{asy1, 1}}}, {{{ae1, -1}}}, {{{ae3, 1}}}}},
        {1, -2, {{{}}, {{}}, {{{ae3, 1}}}}},
    };
    SymbolSum wr = wr_element(rows);
    SymbolSum rewritten = rewrite_atoms(wr, {{asy1, {ay1, -1}}});
    bool ok3 = (rewritten == sym_scale(2, target));
    CheckResult c{"reciprocity-doubles-target", ok3 ? "pass" : "fail", {}};
    c.detail.push_back("reciprocity element reduces to twice the target symbol");
    c.detail.push_back(to_string(g, rewritten));
    c.detail.push_back("so the target dies after inverting 2");
    rep.add(std::move(c));
  }

  // (d) Depth-two generator families and the diagonal cycle.
  {
    SymbolDatum S1{1, {pure_j_row(g, kY1), pure_a_row(g, 1)}};
    ZeroCycle Z1 = psi_r_closed(g, S1);
    ZeroCycle w1 = cyc_zero(1, 1);
    add_point(g, w1, kY1, e2, 1);
    add_point(g, w1, kY1, zero, -1);
    add_point(g, w1, kP1, e2, -1);
    add_point(g, w1, kP1, zero, 1);
    rep.add(CheckResult{"generator-family-depth-2-mixed", Z1 == w1 ? "pass" : "fail",
                        {to_string(g, Z1)}});

    SymbolDatum S2{1, {pure_a_row(g, 0), pure_a_row(g, 1)}};
    ZeroCycle Z2 = psi_r_closed(g, S2);
    ZeroCycle w2 = cyc_zero(1, 1);
    add_point(g, w2, kP1, g.ab.add(e1, e2), 1);
    add_point(g, w2, kP1, e1, -1);
    add_point(g, w2, kP1, e2, -1);
    add_point(g, w2, kP1, zero, 1);
    rep.add(CheckResult{"generator-family-depth-2-pure-A", Z2 == w2 ? "pass" : "fail",
                        {to_string(g, Z2)}});

    ZeroCycle D = cyc_zero(1, 1);
    add_point(g, D, kY1, e1, 1);
    add_point(g, D, kY1, zero, -1);
    add_point(g, D, kP1, e1, -1);
    add_point(g, D, kP1, zero, 1);
    SymbolSum img = phi_r(g, D, 2);
    SymbolSum twice = sym_zero(1);
    sym_add_term(twice, 1, {curve_atom(g, 0, kY1), ab_atom(g, 0)}, 2);
    bool okd = (img == twice);
    CheckResult c{"diagonal-two-torsion", okd ? "pass" : "fail", {}};
    c.detail.push_back("the diagonal cycle maps to twice a single symbol");
    c.detail.push_back(to_string(g, img));
    c.detail.push_back("so it vanishes after inverting 2");
    rep.add(std::move(c));
  }

  return rep;
}

}  // namespace kfilt
