#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kfilt/ext_lattice.hpp"

namespace kfilt {

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

struct PointName {
  std::string id;
  Level min_level = 1;  // smallest level at which the point is defined
};

// A formal divisor on one curve.  Terms are stored against point indices
// into the curve catalog.  The canonical level of a term over base b is
// lcm(min_level, b); its degree contribution is coeff * lcm(min_level,b)/b.
struct Divisor {
  int curve = 0;
  Level base = 1;
  std::map<int, Int> coeff;  // point index -> multiplicity
};

struct Relation {
  Level level = 1;  // level at which the divisor is declared principal
  std::map<int, Int> coeff;
};

struct CurveModel {
  std::string name;
  std::vector<PointName> catalog;
  int base_point = 0;  // index into catalog; must have min_level 1
  std::vector<Relation> relations;
  std::map<int, int> involution;  // optional; must be an involution of the catalog
  std::optional<int> weierstrass;

  int point_index(const std::string& id) const;
};

// ---------------------------------------------------------------------------
// Abelian model
// ---------------------------------------------------------------------------

struct AbGroup {
  std::vector<Int> torsion;  // orders of torsion generators (each >= 2)
  int free_rank = 0;
  int rank() const { return static_cast<int>(torsion.size()) + free_rank; }
};

// A point of the abelian model, given at a level, as coordinates in the
// generator basis of the group at that level.
struct AbElem {
  Level level = 1;
  std::vector<Int> v;
};

struct AbModel {
  enum class Kind { Constant, Table };
  Kind kind = Kind::Constant;
  int model_dimension = 1;

  // Constant kind: the same group at every level, res = identity and
  // Tr_{n/m} = multiplication by n/m.
  AbGroup constant_group;

  // Table kind: explicit groups and explicit res/Tr matrices (column-major
  // over generators: column j holds the image of generator j).
  std::map<Level, AbGroup> table_groups;
  std::map<std::pair<Level, Level>, std::vector<std::vector<Int>>> res_table;  // (m,n): A(m)->A(n)
  std::map<std::pair<Level, Level>, std::vector<std::vector<Int>>> tr_table;   // (n,m): A(n)->A(m)

  const AbGroup& group(Level l) const;
  AbElem zero(Level l) const { return AbElem{l, std::vector<Int>(group(l).rank(), 0)}; }
  AbElem normalize(AbElem e) const;
  AbElem add(const AbElem& a, const AbElem& b) const;
  AbElem neg(const AbElem& a) const;
  AbElem scale(Int c, const AbElem& a) const;
  AbElem res(const AbElem& a, Level to) const;
  AbElem tr(const AbElem& a, Level to) const;
  // Minimal-level form of an element: constant-kind elements all descend
  // to the ground level; table-kind elements stay where they were given.
  AbElem descend(const AbElem& a) const;
  bool is_zero(const AbElem& a) const;
};

// ---------------------------------------------------------------------------
// Geometry = the full scenario model: curves plus abelian model
// ---------------------------------------------------------------------------

struct Pic0Class {
  int curve = 0;
  Level level = 1;
  std::vector<Int> vec;  // canonical reduced coordinates over the catalog
  bool is_zero() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct Geometry {
  std::vector<CurveModel> curves;
  AbModel ab;
  // Optional tabulated map point -> A(1) used when an abelian coordinate is
  // produced from a curve point (the genus-2 scenario identifies A with the
  // Jacobian presentation).
  std::map<std::pair<int, int>, std::vector<Int>> ab_point;  // (curve, point) -> coords

  int d() const { return static_cast<int>(curves.size()); }

  Int div_degree(const Divisor& D) const;
  Divisor div_res(const Divisor& D, Level to) const;
  Divisor div_tr(const Divisor& D, Level to) const;
  Divisor div_add(const Divisor& A, const Divisor& B) const;
  Divisor div_scale(Int c, const Divisor& D) const;

  Pic0Class pic0_reduce(const Divisor& D, Level level) const;
  bool pic0_equal(const Divisor& A, const Divisor& B, Level level) const;
  Pic0Class iota(int curve, int point, Level level) const;

  ValidationReport validate_models(const std::vector<Level>& level_pool) const;
};

// Convenience constructor for single-point divisors.
Divisor point_divisor(int curve, int point, Level base, Int coeff = 1);

}  // namespace kfilt
