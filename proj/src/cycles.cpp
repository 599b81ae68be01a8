#include "kfilt/cycles.hpp"

#include <sstream>

namespace kfilt {

Level point_residue_level(const Geometry& g, const ProductPoint& p) {
  Level l = p.a.level;
  for (size_t i = 0; i < p.pts.size(); ++i)
    l = lcm_level(l, g.curves[i].catalog.at(p.pts[i]).min_level);
  return l;
}

ZeroCycle cyc_zero(Level base, int width) {
  ZeroCycle Z;
  Z.base = base;
  Z.width = width;
  return Z;
}

void cyc_add_term(const Geometry& g, ZeroCycle& Z, ProductPoint p, Int coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(p.pts.size()) != Z.width)
    throw Error(Errc::LevelMismatch, "product point width does not match the cycle");
  p.a = g.ab.descend(p.a);
  auto it = Z.terms.find(p);
  if (it == Z.terms.end()) {
    Z.terms.emplace(std::move(p), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) Z.terms.erase(it);
  }
}

ZeroCycle cyc_add(const ZeroCycle& A, const ZeroCycle& B) {
  if (A.base != B.base || A.width != B.width)
    throw Error(Errc::BaseMismatch, "cycle addition across bases or widths");
  ZeroCycle out = A;
  for (auto& [p, c] : B.terms) {
    auto it = out.terms.find(p);
    if (it == out.terms.end()) {
      out.terms.emplace(p, c);
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

ZeroCycle cyc_scale(Int c, const ZeroCycle& Z) {
  ZeroCycle out = cyc_zero(Z.base, Z.width);
  if (c != 0)
    for (auto& [p, k] : Z.terms) out.terms.emplace(p, c * k);
  return out;
}

Int cyc_degree(const Geometry& g, const ZeroCycle& Z) {
  Int deg = 0;
  for (auto& [p, c] : Z.terms)
    deg += c * (lcm_level(point_residue_level(g, p), Z.base) / Z.base);
  return deg;
}

ZeroCycle cyc_res(const Geometry& g, const ZeroCycle& Z, Level to) {
  if (!divides(Z.base, to))
    throw Error(Errc::NotATower, "cycle restriction: base does not divide target");
  ZeroCycle out = cyc_zero(to, Z.width);
  for (auto& [p, c] : Z.terms) {
    Level can = lcm_level(point_residue_level(g, p), Z.base);
    cyc_add_term(g, out, p, c * (gcd_level(can, to) / Z.base));
  }
  return out;
}

ZeroCycle pushforward_base(const Geometry& g, const ZeroCycle& Z, Level to) {
  if (!divides(to, Z.base))
    throw Error(Errc::NotATower, "cycle pushforward: target does not divide base");
  ZeroCycle out = cyc_zero(to, Z.width);
  for (auto& [p, c] : Z.terms) {
    Level l = point_residue_level(g, p);
    cyc_add_term(g, out, p, c * (lcm_level(l, Z.base) / lcm_level(l, to)));
  }
  return out;
}

ZeroCycle pontryagin(const Geometry& g, const ZeroCycle& Z1, const ZeroCycle& Z2) {
  if (Z1.width != 0 || Z2.width != 0)
    throw Error(Errc::MixedSupport, "Pontryagin product requires cycles supported on A alone");
  if (Z1.base != Z2.base)
    throw Error(Errc::BaseMismatch, "Pontryagin product across bases");
  Level b = Z1.base;
  ZeroCycle out = cyc_zero(b, 0);
  for (auto& [p1, c1] : Z1.terms) {
    Level l1 = lcm_level(p1.a.level, b);
    for (auto& [p2, c2] : Z2.terms) {
      Level l2 = lcm_level(p2.a.level, b);
      Level L = lcm_level(l1, l2);
      Int copies = gcd_level(l1, l2) / b;
      AbElem sum = g.ab.descend(g.ab.add(g.ab.res(p1.a, L), g.ab.res(p2.a, L)));
      Level mu = lcm_level(sum.level, b);
      cyc_add_term(g, out, ProductPoint{{}, sum}, c1 * c2 * copies * (L / mu));
    }
  }
  return out;
}

ZeroCycle product_cycle(const Geometry& g, const std::map<int, Divisor>& selected,
                        const ZeroCycle& a_cycle, Level base) {
  if (a_cycle.width != 0 || a_cycle.base != base)
    throw Error(Errc::BaseMismatch, "product_cycle: abelian cycle must live over the given base");
  int d = g.d();
  std::vector<int> sel_curves;
  for (auto& [i, D] : selected) {
    if (i < 0 || i >= d) throw Error(Errc::LevelMismatch, "product_cycle: bad curve index");
    if (D.base != base)
      throw Error(Errc::BaseMismatch, "product_cycle: divisor base mismatch");
    sel_curves.push_back(i);
  }

  ZeroCycle out = cyc_zero(base, d);
  // One support choice per selected divisor.
  std::vector<std::map<int, Int>::const_iterator> its, ends;
  for (int i : sel_curves) {
    const auto& m = selected.at(i).coeff;
    if (m.empty()) return out;
    its.push_back(m.begin());
    ends.push_back(m.end());
  }
  while (true) {
    Int dcoeff = 1;
    Level L = base;
    Int lambda_prod = 1;
    std::vector<int> pts(d);
    for (int i = 0; i < d; ++i) pts[i] = g.curves[i].base_point;
    for (size_t k = 0; k < its.size(); ++k) {
      int ci = sel_curves[k];
      auto [pt, c] = *its[k];
      pts[ci] = pt;
      dcoeff *= c;
      Level lam = lcm_level(g.curves[ci].catalog.at(pt).min_level, base);
      L = lcm_level(L, lam);
      lambda_prod *= lam;
    }
    for (auto& [ap, ac] : a_cycle.terms) {
      Level lamA = lcm_level(ap.a.level, base);
      Level Lt = lcm_level(L, lamA);
      // Number of closed points in the fiber product of the coordinates.
      Int num = lambda_prod * lamA;
      Int den = Lt;
      for (size_t k = 0; k < its.size(); ++k) den *= base;
      cyc_add_term(g, out, ProductPoint{pts, ap.a}, dcoeff * ac * (num / den));
    }
    // Advance the odometer over supports.
    size_t k = 0;
    for (; k < its.size(); ++k) {
      if (++its[k] != ends[k]) break;
      its[k] = selected.at(sel_curves[k]).coeff.begin();
    }
    if (its.empty() || k == its.size()) break;
  }
  return out;
}

std::pair<Int, AbElem> modeled_chow_A(const Geometry& g, const ZeroCycle& Z) {
  if (g.ab.model_dimension != 1)
    throw Error(Errc::WrongDimension, "modeled_chow_A needs a dimension-one abelian model");
  if (Z.width != 0)
    throw Error(Errc::MixedSupport, "modeled_chow_A requires a cycle supported on A alone");
  AbElem sum = g.ab.zero(Z.base);
  for (auto& [p, c] : Z.terms) {
    Level can = lcm_level(p.a.level, Z.base);
    sum = g.ab.add(sum, g.ab.scale(c, g.ab.tr(g.ab.res(p.a, can), Z.base)));
  }
  return {cyc_degree(g, Z), sum};
}

std::string to_string(const Geometry& g, const ZeroCycle& Z) {
  if (Z.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, c] : Z.terms) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int ac = c >= 0 ? c : -c;
    if (ac != 1) os << ac << "*";
    os << "[(";
    for (size_t i = 0; i < p.pts.size(); ++i) {
      if (i) os << ", ";
      os << g.curves[i].catalog.at(p.pts[i]).id;
    }
    if (!p.pts.empty()) os << "; ";
    os << "a=(";
    for (size_t j = 0; j < p.a.v.size(); ++j) os << (j ? "," : "") << p.a.v[j];
    os << ")@" << p.a.level << ")]";
  }
  os << " over " << Z.base;
  return os.str();
}

}  // namespace kfilt
