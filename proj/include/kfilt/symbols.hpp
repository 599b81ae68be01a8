#pragma once

#include <map>
#include <vector>

#include "kfilt/models.hpp"

namespace kfilt {

// Factor tag used for atoms living on the abelian variety; curve factors
// use their curve index.
constexpr int kFactorA = 1 << 20;

// An atom is a named generator of one factor: for a curve factor it is the
// class [y] - [p_i] of a catalog point, for the abelian factor it is one
// generator of the group.  torsion_order is the generator's order (0 for
// free generators); it annihilates any symbol containing the atom.
struct Atom {
  int factor = 0;
  int gen = 0;
  Level min_level = 1;
  Int torsion_order = 0;

  bool operator<(const Atom& o) const {
    if (factor != o.factor) return factor < o.factor;
    if (gen != o.gen) return gen < o.gen;
    return min_level < o.min_level;
  }
  bool operator==(const Atom& o) const {
    return factor == o.factor && gen == o.gen && min_level == o.min_level;
  }
};

// A formal integer combination of atoms occupying one symbol slot.
struct SlotEntry {
  std::vector<std::pair<Atom, Int>> terms;
};

// A pure symbol: one atom per slot, sorted (the canonical representative
// of the symmetric-group coinvariant), at a definite level.  Stored
// symbols are always at their minimal level: a symbol at level E with
// atoms defined over E0 | E equals [E:E0] times the symbol at E0 (trace
// of a fully restricted symbol), and we apply that collapse eagerly.
struct PureSymbol {
  Level level = 1;
  std::vector<Atom> atoms;

  bool operator<(const PureSymbol& o) const {
    if (level != o.level) return level < o.level;
    return atoms < o.atoms;
  }
  bool operator==(const PureSymbol& o) const { return level == o.level && atoms == o.atoms; }
};

struct SymbolSum {
  Level base = 1;  // nominal base field marker
  std::map<PureSymbol, Int> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SymbolSum& o) const { return base == o.base && terms == o.terms; }
};

// Smallest positive integer known to annihilate a symbol with these atoms
// (gcd of the finite atom orders); 0 if none.
Int symbol_annihilator(const std::vector<Atom>& atoms);

// Insert coeff * {atoms}_level into S, collapsing the level and reducing
// the coefficient by the annihilator.
void sym_add_term(SymbolSum& S, Level level, std::vector<Atom> atoms, Int coeff);

SymbolSum sym_zero(Level base = 1);
SymbolSum sym_add(const SymbolSum& A, const SymbolSum& B);
SymbolSum sym_scale(Int c, const SymbolSum& S);

// Full multilinear expansion of a list of slot entries at one level.
SymbolSum sym_normalize(Level level, const std::vector<SlotEntry>& slots, Level base = 1);

// Expansion of r copies of a single slot entry, using multinomial
// coefficients instead of enumerating all r-tuples.
SymbolSum sym_normalize_power(Level level, const SlotEntry& slot, int r, Level base = 1);

// Drop every pure symbol holding two or more atoms on the same curve
// factor (repetitions on A are kept).
SymbolSum underline_quotient(const SymbolSum& S);

// Composition with the projection: symbols keep their levels, the nominal
// base marker moves down, and the stored minimal levels re-collapse.
SymbolSum sym_trace(const SymbolSum& S, Level to_base);

// Restriction to a larger base: each symbol at level E contributes
// gcd(E,L)/base copies at level lcm(E,L).
SymbolSum sym_res(const SymbolSum& S, Level to);

struct WrRow {
  Level residue_level = 1;
  Int ord = 0;
  std::vector<SlotEntry> slots;
};

// The relation element attached to a tabulated function: sum over places
// of ord * (normalized specialized symbol).  Callers treat its span as
// zero in the true symbol group.
SymbolSum wr_element(const std::vector<WrRow>& rows);

// Apply verified generator identities atom -> sign * atom.
SymbolSum rewrite_atoms(const SymbolSum& S, const std::map<Atom, std::pair<Atom, Int>>& rules);

std::string to_string(const Geometry& g, const SymbolSum& S);

}  // namespace kfilt
