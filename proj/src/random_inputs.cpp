#include "kfilt/random_inputs.hpp"

namespace kfilt {

Geometry make_suite_geometry(int d) {
  Geometry g;
  for (int i = 0; i < d; ++i) {
    CurveModel c;
    c.name = "C" + std::to_string(i + 1);
    c.catalog = {{"p", 1}, {"q1", 1}, {"w2", 2}, {"w3", 3}};
    c.base_point = 0;
    g.curves.push_back(std::move(c));
  }
  g.ab.kind = AbModel::Kind::Constant;
  g.ab.model_dimension = 1;
  g.ab.constant_group.free_rank = 2;
  return g;
}

const std::vector<Level>& suite_levels() {
  static const std::vector<Level> levels = {1, 2, 3, 4, 6};
  return levels;
}

static Int small_coeff(Rng& rng) {
  return static_cast<Int>(std::uniform_int_distribution<int>(-2, 2)(rng));
}

Divisor random_pic0_divisor(const Geometry& g, int curve, Level level, Rng& rng) {
  const CurveModel& c = g.curves[curve];
  Divisor D{curve, level, {}};
  for (int pt = 0; pt < static_cast<int>(c.catalog.size()); ++pt) {
    if (pt == c.base_point) continue;
    if (!divides(c.catalog[pt].min_level, level)) continue;
    Int n = small_coeff(rng);
    if (n != 0) D.coeff[pt] += n;
  }
  Int deg = g.div_degree(D);
  if (deg != 0) D.coeff[c.base_point] -= deg;
  if (D.coeff.count(c.base_point) && D.coeff[c.base_point] == 0) D.coeff.erase(c.base_point);
  return D;
}

AbElem random_ab_elem(const Geometry& g, Rng& rng) {
  AbElem a = g.ab.zero(1);
  for (Int& x : a.v) x = small_coeff(rng);
  return g.ab.normalize(a);
}

SymbolDatum random_datum(const Geometry& g, int r, Rng& rng, const std::vector<Level>& pool) {
  SymbolDatum S;
  S.level = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
  for (int j = 0; j < r; ++j) {
    DatumRow row;
    for (int i = 0; i < g.d(); ++i) row.z.push_back(random_pic0_divisor(g, i, S.level, rng));
    row.a = random_ab_elem(g, rng);
    S.rows.push_back(std::move(row));
  }
  return S;
}

ZeroCycle random_cycle(const Geometry& g, Rng& rng) {
  ZeroCycle Z = cyc_zero(1, g.d());
  int nterms = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int t = 0; t < nterms; ++t) {
    ProductPoint p;
    for (int i = 0; i < g.d(); ++i) {
      const CurveModel& c = g.curves[i];
      p.pts.push_back(
          std::uniform_int_distribution<int>(0, static_cast<int>(c.catalog.size()) - 1)(rng));
    }
    p.a = random_ab_elem(g, rng);
    Int n = small_coeff(rng);
    if (n == 0) n = 1;
    cyc_add_term(g, Z, std::move(p), n);
  }
  return Z;
}

}  // namespace kfilt
