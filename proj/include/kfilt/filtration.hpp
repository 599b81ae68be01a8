#pragma once

#include <functional>
#include <string>

#include "kfilt/cycles.hpp"
#include "kfilt/symbols.hpp"

namespace kfilt {

// The raw input of the cycle-building map: r rows, each holding one
// degree-zero divisor per curve and one abelian point, all at one level.
struct DatumRow {
  std::vector<Divisor> z;
  AbElem a;
};

struct SymbolDatum {
  Level level = 1;
  std::vector<DatumRow> rows;
  int r() const { return static_cast<int>(rows.size()); }
};

Atom curve_atom(const Geometry& g, int curve, int point);
Atom ab_atom(const Geometry& g, int gen, Level level = 1);
SlotEntry ab_slot_entry(const Geometry& g, const AbElem& a);
// The image of a product point under the Albanese embedding, expanded
// into atoms.
SlotEntry point_slot_entry(const Geometry& g, const ProductPoint& p);

Int phi0(const Geometry& g, const ZeroCycle& Z);
// r copies of the embedded point, normalized and passed through the
// one-copy-per-curve quotient.  Defined over the ground field.
SymbolSum phi_r(const Geometry& g, const ZeroCycle& Z, int r);
// Same map over the cycle's own base (used for trace-compatibility checks).
SymbolSum phi_r_at(const Geometry& g, const ZeroCycle& Z, int r);

// The closed product-point formula: alternating sums over curve subsets,
// row injections, supports, and abelian index subsets.
ZeroCycle psi_r_closed(const Geometry& g, const SymbolDatum& S);
// Independent path through Pontryagin products and product cycles.
ZeroCycle psi_r_product(const Geometry& g, const SymbolDatum& S);

struct PsiBucket {
  std::vector<int> curves;  // selected curve indices (I)
  std::vector<int> rows;    // assigned row per selected curve (phi_I)
  ZeroCycle part;           // contribution over base 1
};
std::vector<PsiBucket> psi_r_buckets(const Geometry& g, const SymbolDatum& S);

// The natural quotient map: normalize the rows as a symbol and drop
// repeated curve factors.
SymbolSum datum_symbol(const Geometry& g, const SymbolDatum& S);

struct AlbaneseValue {
  Int degree = 0;
  std::vector<Pic0Class> jac;  // one class per curve, at level 1
  AbElem a;
  bool operator==(const AlbaneseValue& o) const {
    if (degree != o.degree || a.level != o.a.level || a.v != o.a.v) return false;
    if (jac.size() != o.jac.size()) return false;
    for (size_t i = 0; i < jac.size(); ++i)
      if (jac[i].vec != o.jac[i].vec) return false;
    return true;
  }
};
AlbaneseValue albanese(const Geometry& g, const ZeroCycle& Z);

struct Certificate {
  int claimed_r = 0;
  bool certified = false;  // certified membership is sound; false means unknown
  Int degree = 0;
  std::vector<SymbolSum> evidence;  // normal forms for 1 <= j < claimed_r
};
Certificate certify_membership(const Geometry& g, const ZeroCycle& Z, int r);

struct RoundtripReport {
  bool ok = true;
  std::vector<std::string> failures;
};
RoundtripReport roundtrip_report(const Geometry& g, const SymbolDatum& S);

Int binom(Int n, Int k);
Int factorial_int(int n);
// Brute-force count of size-j subsets of {1..r} containing every component
// of h (1-based components).
Int binomial_count_oracle(int r, const std::vector<int>& h, int j);

struct VanishReport {
  bool ok = false;
  bool precondition_ok = false;
  int buckets_total = 0;
  int buckets_repeated_factor = 0;
  int buckets_axiom_cited = 0;  // >= g+1 Pontryagin factors of degree 0
  int buckets_chow_checked = 0;
  std::vector<std::string> notes;
};
VanishReport vanishing_structural_check(const Geometry& g, const SymbolDatum& S, int g_dim);

}  // namespace kfilt
