#include "kfilt/models.hpp"

#include <algorithm>
#include <cstdlib>

namespace kfilt {

int CurveModel::point_index(const std::string& id) const {
  for (size_t i = 0; i < catalog.size(); ++i)
    if (catalog[i].id == id) return static_cast<int>(i);
  throw Error(Errc::ValidationError, "unknown point '" + id + "' on curve " + name);
}

// ---------------------------------------------------------------------------
// AbModel
// ---------------------------------------------------------------------------

const AbGroup& AbModel::group(Level l) const {
  if (kind == Kind::Constant) return constant_group;
  auto it = table_groups.find(l);
  if (it == table_groups.end())
    throw Error(Errc::LevelMismatch, "table model has no group at level " + std::to_string(l));
  return it->second;
}

AbElem AbModel::normalize(AbElem e) const {
  const AbGroup& g = group(e.level);
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    Int t = g.torsion[i];
    e.v[i] = ((e.v[i] % t) + t) % t;
  }
  return e;
}

AbElem AbModel::add(const AbElem& a, const AbElem& b) const {
  if (a.level != b.level)
    throw Error(Errc::LevelMismatch, "abelian addition across levels");
  AbElem out = a;
  for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
  return normalize(out);
}

AbElem AbModel::neg(const AbElem& a) const { return scale(-1, a); }

AbElem AbModel::scale(Int c, const AbElem& a) const {
  AbElem out = a;
  for (auto& x : out.v) x *= c;
  return normalize(out);
}

static std::vector<Int> apply_columns(const std::vector<std::vector<Int>>& cols,
                                      const std::vector<Int>& v, int out_rank) {
  std::vector<Int> out(out_rank, 0);
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    const auto& col = cols.at(j);
    for (int i = 0; i < out_rank; ++i) out[i] += v[j] * col[i];
  }
  return out;
}

AbElem AbModel::res(const AbElem& a, Level to) const {
  if (!divides(a.level, to))
    throw Error(Errc::NotATower, "restriction target is not an overfield");
  if (a.level == to) return a;
  if (kind == Kind::Constant) return AbElem{to, a.v};
  auto it = res_table.find({a.level, to});
  if (it == res_table.end())
    throw Error(Errc::LevelMismatch, "table model has no res entry " +
                                         std::to_string(a.level) + "->" + std::to_string(to));
  return normalize(AbElem{to, apply_columns(it->second, a.v, group(to).rank())});
}

AbElem AbModel::tr(const AbElem& a, Level to) const {
  if (!divides(to, a.level))
    throw Error(Errc::NotATower, "trace target is not a subfield");
  if (a.level == to) return a;
  if (kind == Kind::Constant) {
    AbElem out{to, a.v};
    Int f = a.level / to;
    for (auto& x : out.v) x *= f;
    return normalize(out);
  }
  auto it = tr_table.find({a.level, to});
  if (it == tr_table.end())
    throw Error(Errc::LevelMismatch, "table model has no Tr entry " +
                                         std::to_string(a.level) + "->" + std::to_string(to));
  return normalize(AbElem{to, apply_columns(it->second, a.v, group(to).rank())});
}

AbElem AbModel::descend(const AbElem& a) const {
  if (kind == Kind::Constant) return normalize(AbElem{1, a.v});
  return normalize(a);
}

bool AbModel::is_zero(const AbElem& a) const {
  AbElem n = normalize(a);
  return std::all_of(n.v.begin(), n.v.end(), [](Int x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Divisors
// ---------------------------------------------------------------------------

Divisor point_divisor(int curve, int point, Level base, Int coeff) {
  Divisor D;
  D.curve = curve;
  D.base = base;
  if (coeff != 0) D.coeff[point] = coeff;
  return D;
}

Int Geometry::div_degree(const Divisor& D) const {
  const CurveModel& C = curves.at(D.curve);
  Int deg = 0;
  for (auto& [pt, c] : D.coeff) {
    Level can = lcm_level(C.catalog.at(pt).min_level, D.base);
    deg += c * (can / D.base);
  }
  return deg;
}

Divisor Geometry::div_res(const Divisor& D, Level to) const {
  if (!divides(D.base, to))
    throw Error(Errc::NotATower, "divisor restriction: base does not divide target");
  const CurveModel& C = curves.at(D.curve);
  Divisor out;
  out.curve = D.curve;
  out.base = to;
  for (auto& [pt, c] : D.coeff) {
    Level can = lcm_level(C.catalog.at(pt).min_level, D.base);
    Int mult = gcd_level(can, to) / D.base;
    if (c * mult != 0) out.coeff[pt] += c * mult;
  }
  return out;
}

Divisor Geometry::div_tr(const Divisor& D, Level to) const {
  if (!divides(to, D.base))
    throw Error(Errc::NotATower, "divisor trace: target does not divide base");
  const CurveModel& C = curves.at(D.curve);
  Divisor out;
  out.curve = D.curve;
  out.base = to;
  for (auto& [pt, c] : D.coeff) {
    Level ml = C.catalog.at(pt).min_level;
    Int mult = lcm_level(ml, D.base) / lcm_level(ml, to);
    if (c * mult != 0) out.coeff[pt] += c * mult;
  }
  return out;
}

Divisor Geometry::div_add(const Divisor& A, const Divisor& B) const {
  if (A.curve != B.curve || A.base != B.base)
    throw Error(Errc::BaseMismatch, "divisor addition across curves or bases");
  Divisor out = A;
  for (auto& [pt, c] : B.coeff) {
    out.coeff[pt] += c;
    if (out.coeff[pt] == 0) out.coeff.erase(pt);
  }
  return out;
}

Divisor Geometry::div_scale(Int c, const Divisor& D) const {
  Divisor out;
  out.curve = D.curve;
  out.base = D.base;
  if (c != 0)
    for (auto& [pt, k] : D.coeff) out.coeff[pt] = c * k;
  return out;
}

// ---------------------------------------------------------------------------
// Pic^0: integer lattice reduction against the declared relations
// ---------------------------------------------------------------------------

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Bring `rows` into row echelon form with positive pivots (Hermite style).
// Returns the list of (row, pivot column) pairs.
std::vector<std::pair<int, int>> echelonize(std::vector<std::vector<Int>>& rows) {
  std::vector<std::pair<int, int>> pivots;
  if (rows.empty()) return pivots;
  int n = static_cast<int>(rows.size());
  int m = static_cast<int>(rows[0].size());
  int top = 0;
  for (int col = 0; col < m && top < n; ++col) {
    // Eliminate within the column by repeated gcd steps.
    while (true) {
      int best = -1;
      for (int i = top; i < n; ++i)
        if (rows[i][col] != 0 &&
            (best == -1 || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == -1) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (int i = top + 1; i < n; ++i) {
        if (rows[i][col] == 0) continue;
        Int q = floor_div(rows[i][col], rows[top][col]);
        for (int j = 0; j < m; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (int j = 0; j < m; ++j) rows[top][j] = -rows[top][j];
      pivots.emplace_back(top, col);
      ++top;
    }
  }
  return pivots;
}

}  // namespace

Pic0Class Geometry::pic0_reduce(const Divisor& D, Level level) const {
  if (div_degree(D) != 0)
    throw Error(Errc::NonZeroDegree, "pic0_reduce requires a degree-zero divisor");
  if (!divides(D.base, level))
    throw Error(Errc::NotATower, "divisor base does not divide the ambient level");
  const CurveModel& C = curves.at(D.curve);
  int m = static_cast<int>(C.catalog.size());

  Divisor Dl = div_res(D, level);
  std::vector<Int> v(m, 0);
  for (auto& [pt, c] : Dl.coeff) v[pt] = c;

  std::vector<std::vector<Int>> rows;
  for (const Relation& R : C.relations) {
    if (!divides(R.level, level)) continue;
    Divisor rd;
    rd.curve = D.curve;
    rd.base = R.level;
    rd.coeff = R.coeff;
    Divisor rl = div_res(rd, level);
    std::vector<Int> row(m, 0);
    for (auto& [pt, c] : rl.coeff) row[pt] = c;
    rows.push_back(std::move(row));
  }
  auto pivots = echelonize(rows);
  for (auto& [r, c] : pivots) {
    Int q = floor_div(v[c], rows[r][c]);
    if (q != 0)
      for (int j = 0; j < m; ++j) v[j] -= q * rows[r][j];
  }
  return Pic0Class{D.curve, level, std::move(v)};
}

bool Pic0Class::is_zero() const {
  return std::all_of(vec.begin(), vec.end(), [](Int x) { return x == 0; });
}

bool Geometry::pic0_equal(const Divisor& A, const Divisor& B, Level level) const {
  Divisor diff = div_add(div_res(A, level), div_scale(-1, div_res(B, level)));
  return pic0_reduce(diff, level).is_zero();
}

Pic0Class Geometry::iota(int curve, int point, Level level) const {
  const CurveModel& C = curves.at(curve);
  if (!divides(C.catalog.at(point).min_level, level))
    throw Error(Errc::LevelMismatch, "point not defined at the requested level");
  Divisor D = point_divisor(curve, point, level);
  Int deg = div_degree(D);
  D.coeff[C.base_point] -= deg;
  if (D.coeff[C.base_point] == 0) D.coeff.erase(C.base_point);
  return pic0_reduce(D, level);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

ValidationReport Geometry::validate_models(const std::vector<Level>& level_pool) const {
  ValidationReport rep;
  for (size_t ci = 0; ci < curves.size(); ++ci) {
    const CurveModel& C = curves[ci];
    if (C.catalog.empty()) {
      rep.violations.push_back("curve " + C.name + ": empty catalog");
      continue;
    }
    if (C.catalog.at(C.base_point).min_level != 1)
      rep.violations.push_back("curve " + C.name + ": base point is not rational");
    for (size_t ri = 0; ri < C.relations.size(); ++ri) {
      const Relation& R = C.relations[ri];
      Divisor rd;
      rd.curve = static_cast<int>(ci);
      rd.base = R.level;
      rd.coeff = R.coeff;
      if (div_degree(rd) != 0)
        rep.violations.push_back("curve " + C.name + ": relation " + std::to_string(ri) +
                                 " has nonzero degree");
      // Trace stability: the trace of a relation must reduce to zero against
      // the relations available at the lower level.
      for (Level e : level_pool) {
        if (!divides(e, R.level)) continue;
        try {
          Pic0Class cls = pic0_reduce(div_tr(rd, e), e);
          if (!cls.is_zero())
            rep.violations.push_back("curve " + C.name + ": relation " + std::to_string(ri) +
                                     " is not trace-stable at level " + std::to_string(e));
        } catch (const Error& err) {
          rep.violations.push_back("curve " + C.name + ": relation " + std::to_string(ri) + ": " +
                                   err.what());
        }
      }
    }
    for (auto& [a, b] : C.involution) {
      auto other = C.involution.find(b);
      if (other == C.involution.end() || other->second != a)
        rep.violations.push_back("curve " + C.name + ": involution is not an involution");
      else if (C.catalog.at(a).min_level != C.catalog.at(b).min_level)
        rep.violations.push_back("curve " + C.name + ": involution does not preserve levels");
    }
  }

  // Tr o res = [n:m] on abelian generators for every configured tower.
  auto check_pair = [&](Level m, Level n) {
    int rank_m = ab.group(m).rank();
    for (int g = 0; g < rank_m; ++g) {
      AbElem gen = ab.zero(m);
      gen.v[g] = 1;
      AbElem round;
      try {
        round = ab.tr(ab.res(gen, n), m);
      } catch (const Error& err) {
        rep.violations.push_back(std::string("ab model: ") + err.what());
        return;
      }
      AbElem want = ab.scale(n / m, gen);
      if (round.v != want.v)
        rep.violations.push_back("ab model: Tr o res != [" + std::to_string(n) + ":" +
                                 std::to_string(m) + "] on generator " + std::to_string(g));
    }
  };
  if (ab.kind == AbModel::Kind::Constant) {
    for (Level m : level_pool)
      for (Level n : level_pool)
        if (divides(m, n)) check_pair(m, n);
  } else {
    for (auto& [key, unused] : ab.res_table) {
      (void)unused;
      if (ab.tr_table.count({key.second, key.first})) check_pair(key.first, key.second);
    }
  }
  return rep;
}

}  // namespace kfilt
