#pragma once

#include <map>
#include <vector>

#include "kfilt/models.hpp"

namespace kfilt {

// A closed point of C_1 x ... x C_d x A (width d), or of A alone (width 0),
// stored in intrinsic form: `pts` holds one catalog index per curve and `a`
// is kept at its minimal level (constant models descend to the ground
// level).  The residue level of the point is the lcm of the coordinate
// levels; over a base b the canonical level is lcm(residue, b).
struct ProductPoint {
  std::vector<int> pts;
  AbElem a;

  bool operator<(const ProductPoint& o) const {
    if (pts != o.pts) return pts < o.pts;
    if (a.level != o.a.level) return a.level < o.a.level;
    return a.v < o.a.v;
  }
  bool operator==(const ProductPoint& o) const {
    return pts == o.pts && a.level == o.a.level && a.v == o.a.v;
  }
};

struct ZeroCycle {
  Level base = 1;
  int width = 0;  // number of curve coordinates (0 = cycle on A alone)
  std::map<ProductPoint, Int> terms;

  bool operator==(const ZeroCycle& o) const {
    return base == o.base && width == o.width && terms == o.terms;
  }
};

Level point_residue_level(const Geometry& g, const ProductPoint& p);

ZeroCycle cyc_zero(Level base, int width);
void cyc_add_term(const Geometry& g, ZeroCycle& Z, ProductPoint p, Int coeff);
ZeroCycle cyc_add(const ZeroCycle& A, const ZeroCycle& B);
ZeroCycle cyc_scale(Int c, const ZeroCycle& Z);

Int cyc_degree(const Geometry& g, const ZeroCycle& Z);
ZeroCycle cyc_res(const Geometry& g, const ZeroCycle& Z, Level to);
ZeroCycle pushforward_base(const Geometry& g, const ZeroCycle& Z, Level to);

// Pontryagin product of two cycles supported on A alone, over one base.
ZeroCycle pontryagin(const Geometry& g, const ZeroCycle& Z1, const ZeroCycle& Z2);

// The product-point expansion: selected curves carry a divisor, all other
// curves receive their base point, and the abelian coordinate runs over
// `a_cycle`.  Tuple formation accounts for the splitting of composita.
ZeroCycle product_cycle(const Geometry& g, const std::map<int, Divisor>& selected,
                        const ZeroCycle& a_cycle, Level base);

// (degree, albanese sum) for the dimension-one abelian model, where the
// Chow group of A is degree + point sum.
std::pair<Int, AbElem> modeled_chow_A(const Geometry& g, const ZeroCycle& Z);

std::string to_string(const Geometry& g, const ZeroCycle& Z);

}  // namespace kfilt
