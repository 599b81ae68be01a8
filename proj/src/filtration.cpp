#include "kfilt/filtration.hpp"

#include <algorithm>
#include <sstream>

namespace kfilt {

Atom curve_atom(const Geometry& g, int curve, int point) {
  return Atom{curve, point, g.curves.at(curve).catalog.at(point).min_level, 0};
}

Atom ab_atom(const Geometry& g, int gen, Level level) {
  const AbGroup& grp = g.ab.group(level);
  Int ord = gen < static_cast<int>(grp.torsion.size()) ? grp.torsion[gen] : 0;
  return Atom{kFactorA, gen, level, ord};
}

SlotEntry ab_slot_entry(const Geometry& g, const AbElem& a) {
  AbElem e = g.ab.normalize(g.ab.descend(a));
  SlotEntry out;
  for (size_t j = 0; j < e.v.size(); ++j)
    if (e.v[j] != 0) out.terms.push_back({ab_atom(g, static_cast<int>(j), e.level), e.v[j]});
  return out;
}

SlotEntry point_slot_entry(const Geometry& g, const ProductPoint& p) {
  SlotEntry out;
  for (size_t i = 0; i < p.pts.size(); ++i)
    if (p.pts[i] != g.curves[i].base_point)
      out.terms.push_back({curve_atom(g, static_cast<int>(i), p.pts[i]), 1});
  SlotEntry a = ab_slot_entry(g, p.a);
  out.terms.insert(out.terms.end(), a.terms.begin(), a.terms.end());
  return out;
}

Int phi0(const Geometry& g, const ZeroCycle& Z) { return cyc_degree(g, Z); }

SymbolSum phi_r_at(const Geometry& g, const ZeroCycle& Z, int r) {
  if (r < 0) throw Error(Errc::LevelMismatch, "phi_r needs r >= 0");
  // r = 0 yields the degree, carried by the empty symbol.
  SymbolSum out = sym_zero(Z.base);
  for (auto& [p, c] : Z.terms) {
    Level lam = lcm_level(point_residue_level(g, p), Z.base);
    SymbolSum pw = sym_normalize_power(lam, point_slot_entry(g, p), r, Z.base);
    out = sym_add(out, sym_scale(c, pw));
  }
  return underline_quotient(out);
}

SymbolSum phi_r(const Geometry& g, const ZeroCycle& Z, int r) {
  if (Z.base != 1)
    throw Error(Errc::BaseNotGround, "phi_r is defined over the ground level");
  return phi_r_at(g, Z, r);
}

// ---------------------------------------------------------------------------
// The cycle-building map
// ---------------------------------------------------------------------------

static void check_datum(const Geometry& g, const SymbolDatum& S) {
  int d = g.d();
  for (const DatumRow& row : S.rows) {
    if (static_cast<int>(row.z.size()) != d)
      throw Error(Errc::LevelMismatch, "datum row does not carry one divisor per curve");
    for (int i = 0; i < d; ++i) {
      const Divisor& D = row.z[i];
      if (D.curve != i)
        throw Error(Errc::LevelMismatch, "datum divisor attached to the wrong curve");
      if (D.base != S.level)
        throw Error(Errc::BaseMismatch, "datum divisor is not given at the datum level");
      if (g.div_degree(D) != 0)
        throw Error(Errc::NonZeroDegree, "datum divisor has nonzero degree");
    }
    AbElem a = g.ab.descend(row.a);
    if (!divides(a.level, S.level))
      throw Error(Errc::LevelMismatch, "datum abelian point is not defined at the datum level");
  }
}

// Visit every bucket (subset I of curves together with an injective
// assignment of distinct rows to the members of I).
static void for_each_bucket(
    int d, int r, const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  int smax = std::min(d, r);
  std::vector<int> I, rows;
  std::vector<bool> used(static_cast<size_t>(r), false);
  std::function<void(int)> assign = [&](size_t t) {
    if (t == I.size()) {
      fn(I, rows);
      return;
    }
    for (int j = 0; j < r; ++j) {
      if (used[j]) continue;
      used[j] = true;
      rows.push_back(j);
      assign(t + 1);
      rows.pop_back();
      used[j] = false;
    }
  };
  std::function<void(int, int)> choose = [&](int from, int left) {
    if (left == 0) {
      assign(0);
      return;
    }
    for (int i = from; i + left <= d; ++i) {
      I.push_back(i);
      choose(i + 1, left - 1);
      I.pop_back();
    }
  };
  for (int s = 0; s <= smax; ++s) choose(0, s);
}

// Contribution of one bucket, over the ground level, computed by direct
// closed-point bookkeeping.
static ZeroCycle bucket_closed(const Geometry& g, const SymbolDatum& S,
                               const std::vector<int>& I, const std::vector<int>& rows) {
  int d = g.d();
  int r = S.r();
  int s = static_cast<int>(I.size());
  Level kp = S.level;

  std::vector<int> free_rows;
  {
    std::vector<bool> taken(static_cast<size_t>(r), false);
    for (int j : rows) taken[j] = true;
    for (int j = 0; j < r; ++j)
      if (!taken[j]) free_rows.push_back(j);
  }
  std::vector<AbElem> ares(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) ares[j] = g.ab.res(g.ab.descend(S.rows[j].a), kp);

  ZeroCycle Zk = cyc_zero(kp, d);

  std::vector<const std::map<int, Int>*> supp;
  for (int t = 0; t < s; ++t) supp.push_back(&S.rows[rows[t]].z[I[t]].coeff);
  for (auto* m : supp)
    if (m->empty()) return pushforward_base(g, Zk, 1);

  std::vector<std::map<int, Int>::const_iterator> its;
  for (auto* m : supp) its.push_back(m->begin());

  while (true) {
    Int n_prod = 1;
    Level L = kp;
    Int lambda_prod = 1;
    std::vector<int> pts(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) pts[i] = g.curves[i].base_point;
    for (int t = 0; t < s; ++t) {
      auto [pt, n] = *its[t];
      pts[I[t]] = pt;
      n_prod *= n;
      Level lam = lcm_level(g.curves[I[t]].catalog.at(pt).min_level, kp);
      L = lcm_level(L, lam);
      lambda_prod *= lam;
    }
    int nf = static_cast<int>(free_rows.size());
    for (unsigned mask = 0; mask < (1u << nf); ++mask) {
      int j = 0;
      AbElem a_sum = g.ab.zero(kp);
      for (int b = 0; b < nf; ++b)
        if (mask & (1u << b)) {
          ++j;
          a_sum = g.ab.add(a_sum, ares[free_rows[b]]);
        }
      Int sign = ((r - s - j) % 2 != 0) ? -1 : 1;
      AbElem a_min = g.ab.descend(a_sum);
      Level lamA = lcm_level(a_min.level, kp);
      Level Lt = lcm_level(L, lamA);
      Int num = lambda_prod * lamA;
      Int den = Lt;
      for (int t = 0; t < s; ++t) den *= kp;
      cyc_add_term(g, Zk, ProductPoint{pts, a_min}, sign * n_prod * (num / den));
    }
    size_t k = 0;
    for (; k < its.size(); ++k) {
      if (++its[k] != supp[k]->end()) break;
      its[k] = supp[k]->begin();
    }
    if (its.empty() || k == its.size()) break;
  }
  return pushforward_base(g, Zk, 1);
}

// Same contribution computed through Pontryagin and product-cycle calls.
static ZeroCycle bucket_product(const Geometry& g, const SymbolDatum& S,
                                const std::vector<int>& I, const std::vector<int>& rows) {
  int r = S.r();
  Level kp = S.level;
  std::vector<bool> taken(static_cast<size_t>(r), false);
  for (int j : rows) taken[j] = true;

  ZeroCycle acc = cyc_zero(kp, 0);
  cyc_add_term(g, acc, ProductPoint{{}, g.ab.zero(kp)}, 1);
  for (int j = 0; j < r; ++j) {
    if (taken[j]) continue;
    ZeroCycle factor = cyc_zero(kp, 0);
    cyc_add_term(g, factor, ProductPoint{{}, g.ab.res(g.ab.descend(S.rows[j].a), kp)}, 1);
    cyc_add_term(g, factor, ProductPoint{{}, g.ab.zero(kp)}, -1);
    acc = pontryagin(g, acc, factor);
  }

  std::map<int, Divisor> selected;
  for (size_t t = 0; t < I.size(); ++t) selected[I[t]] = S.rows[rows[t]].z[I[t]];
  ZeroCycle W = product_cycle(g, selected, acc, kp);
  return pushforward_base(g, W, 1);
}

ZeroCycle psi_r_closed(const Geometry& g, const SymbolDatum& S) {
  check_datum(g, S);
  ZeroCycle out = cyc_zero(1, g.d());
  for_each_bucket(g.d(), S.r(), [&](const std::vector<int>& I, const std::vector<int>& rows) {
    out = cyc_add(out, bucket_closed(g, S, I, rows));
  });
  return out;
}

ZeroCycle psi_r_product(const Geometry& g, const SymbolDatum& S) {
  check_datum(g, S);
  ZeroCycle out = cyc_zero(1, g.d());
  for_each_bucket(g.d(), S.r(), [&](const std::vector<int>& I, const std::vector<int>& rows) {
    out = cyc_add(out, bucket_product(g, S, I, rows));
  });
  return out;
}

std::vector<PsiBucket> psi_r_buckets(const Geometry& g, const SymbolDatum& S) {
  check_datum(g, S);
  std::vector<PsiBucket> out;
  for_each_bucket(g.d(), S.r(), [&](const std::vector<int>& I, const std::vector<int>& rows) {
    out.push_back(PsiBucket{I, rows, bucket_closed(g, S, I, rows)});
  });
  return out;
}

SymbolSum datum_symbol(const Geometry& g, const SymbolDatum& S) {
  check_datum(g, S);
  std::vector<SlotEntry> slots;
  for (const DatumRow& row : S.rows) {
    SlotEntry e;
    for (int i = 0; i < g.d(); ++i)
      for (auto& [pt, n] : row.z[i].coeff)
        if (pt != g.curves[i].base_point && n != 0)
          e.terms.push_back({curve_atom(g, i, pt), n});
    SlotEntry a = ab_slot_entry(g, row.a);
    e.terms.insert(e.terms.end(), a.terms.begin(), a.terms.end());
    slots.push_back(std::move(e));
  }
  return underline_quotient(sym_normalize(S.level, slots, 1));
}

AlbaneseValue albanese(const Geometry& g, const ZeroCycle& Z) {
  if (Z.base != 1)
    throw Error(Errc::BaseNotGround, "the albanese value is taken over the ground level");
  AlbaneseValue out;
  out.degree = cyc_degree(g, Z);
  std::vector<Divisor> jac(static_cast<size_t>(g.d()));
  for (int i = 0; i < g.d(); ++i) jac[i] = Divisor{i, 1, {}};
  out.a = g.ab.zero(1);
  for (auto& [p, c] : Z.terms) {
    Level l = point_residue_level(g, p);
    for (int i = 0; i < g.d(); ++i) {
      Divisor D{i, l, {}};
      D.coeff[p.pts[i]] += 1;
      D.coeff[g.curves[i].base_point] -= 1;
      jac[i] = g.div_add(jac[i], g.div_scale(c, g.div_tr(D, 1)));
    }
    AbElem a = g.ab.descend(p.a);
    out.a = g.ab.add(out.a, g.ab.scale(c, g.ab.tr(g.ab.res(a, l), 1)));
  }
  for (int i = 0; i < g.d(); ++i) out.jac.push_back(g.pic0_reduce(jac[i], 1));
  out.a = g.ab.normalize(out.a);
  return out;
}

Certificate certify_membership(const Geometry& g, const ZeroCycle& Z, int r) {
  Certificate cert;
  cert.claimed_r = r;
  cert.degree = phi0(g, Z);
  bool all_zero = (r <= 0) || cert.degree == 0;
  for (int j = 1; j < r; ++j) {
    cert.evidence.push_back(phi_r(g, Z, j));
    if (!cert.evidence.back().is_zero()) all_zero = false;
  }
  cert.certified = all_zero;
  return cert;
}

RoundtripReport roundtrip_report(const Geometry& g, const SymbolDatum& S) {
  RoundtripReport rep;
  int r = S.r();
  ZeroCycle Z = psi_r_closed(g, S);
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  if (phi0(g, Z) != 0) fail("image cycle has nonzero degree");
  for (int t = 1; t < r; ++t)
    if (!phi_r(g, Z, t).is_zero())
      fail("lower map " + std::to_string(t) + " does not kill the image cycle");
  if (r >= 1) {
    SymbolSum lhs = phi_r(g, Z, r);
    SymbolSum rhs = sym_scale(factorial_int(r), datum_symbol(g, S));
    if (!(lhs == rhs)) fail("round trip does not return r! times the normalized input");
  }
  if (!(psi_r_product(g, S) == Z)) fail("closed and product evaluations disagree");
  return rep;
}

Int binom(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int b = 1;
  for (Int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

Int factorial_int(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial_count_oracle(int r, const std::vector<int>& h, int j) {
  Int req = 0;
  for (int c : h) {
    if (c < 1 || c > r) return 0;
    req |= Int(1) << (c - 1);
  }
  Int count = 0;
  for (Int mask = 0; mask < (Int(1) << r); ++mask) {
    if ((mask & req) != req) continue;
    int bits = 0;
    for (int b = 0; b < r; ++b)
      if (mask & (Int(1) << b)) ++bits;
    if (bits == j) ++count;
  }
  return count;
}

VanishReport vanishing_structural_check(const Geometry& g, const SymbolDatum& S, int g_dim) {
  VanishReport rep;
  check_datum(g, S);
  int d = g.d();
  int r = S.r();
  rep.precondition_ok = (r > d + g_dim);
  if (!rep.precondition_ok) {
    rep.notes.push_back("precondition failed: need more rows than curves plus model dimension");
    rep.ok = false;
    return rep;
  }
  Level kp = S.level;
  bool all_good = true;
  for_each_bucket(d, r, [&](const std::vector<int>& I, const std::vector<int>& rows) {
    ++rep.buckets_total;
    int s = static_cast<int>(I.size());
    int free_count = r - s;
    std::ostringstream os;
    os << "bucket I={";
    for (size_t t = 0; t < I.size(); ++t) os << (t ? "," : "") << I[t];
    os << "} rows={";
    for (size_t t = 0; t < rows.size(); ++t) os << (t ? "," : "") << rows[t];
    os << "}: " << free_count << " degree-zero factors";
    if (free_count >= g_dim + 1) {
      ++rep.buckets_axiom_cited;
      os << "; iterated degree-zero product vanishes in the modeled Chow group";
      if (g_dim == 1) {
        std::vector<bool> taken(static_cast<size_t>(r), false);
        for (int j : rows) taken[j] = true;
        ZeroCycle acc = cyc_zero(kp, 0);
        cyc_add_term(g, acc, ProductPoint{{}, g.ab.zero(kp)}, 1);
        for (int j = 0; j < r; ++j) {
          if (taken[j]) continue;
          ZeroCycle factor = cyc_zero(kp, 0);
          cyc_add_term(g, factor, ProductPoint{{}, g.ab.res(g.ab.descend(S.rows[j].a), kp)}, 1);
          cyc_add_term(g, factor, ProductPoint{{}, g.ab.zero(kp)}, -1);
          acc = pontryagin(g, acc, factor);
        }
        auto [deg, pt] = modeled_chow_A(g, acc);
        ++rep.buckets_chow_checked;
        if (deg == 0 && g.ab.is_zero(pt)) {
          os << "; checked: (degree, point sum) = (0, 0)";
        } else {
          os << "; CHECK FAILED: (degree, point sum) != (0, 0)";
          all_good = false;
        }
      }
    } else {
      os << "; UNCLASSIFIED";
      all_good = false;
    }
    rep.notes.push_back(os.str());
  });
  rep.ok = all_good;
  return rep;
}

}  // namespace kfilt
