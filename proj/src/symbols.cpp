#include "kfilt/symbols.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

namespace kfilt {

Int symbol_annihilator(const std::vector<Atom>& atoms) {
  Int g = 0;
  for (const Atom& a : atoms)
    if (a.torsion_order > 0) g = std::gcd(g, a.torsion_order);
  return g;
}

static Int reduce_coeff(Int c, Int ann) {
  if (ann <= 0) return c;
  return ((c % ann) + ann) % ann;
}

void sym_add_term(SymbolSum& S, Level level, std::vector<Atom> atoms, Int coeff) {
  if (coeff == 0) return;
  if (!divides(S.base, level))
    throw Error(Errc::LevelMismatch, "symbol level is not over the nominal base");
  Level e0 = S.base;
  for (const Atom& a : atoms) {
    if (!divides(a.min_level, level))
      throw Error(Errc::LevelMismatch, "atom is not defined at the symbol level");
    e0 = lcm_level(e0, a.min_level);
  }
  coeff *= level / e0;
  std::sort(atoms.begin(), atoms.end());
  Int ann = symbol_annihilator(atoms);
  coeff = reduce_coeff(coeff, ann);
  if (coeff == 0) return;
  PureSymbol key{e0, std::move(atoms)};
  auto it = S.terms.find(key);
  if (it == S.terms.end()) {
    S.terms.emplace(std::move(key), coeff);
  } else {
    it->second = reduce_coeff(it->second + coeff, ann);
    if (it->second == 0) S.terms.erase(it);
  }
}

SymbolSum sym_zero(Level base) {
  SymbolSum S;
  S.base = base;
  return S;
}

SymbolSum sym_add(const SymbolSum& A, const SymbolSum& B) {
  if (A.base != B.base) throw Error(Errc::BaseMismatch, "symbol addition across bases");
  SymbolSum out = A;
  for (auto& [p, c] : B.terms) sym_add_term(out, p.level, p.atoms, c);
  return out;
}

SymbolSum sym_scale(Int c, const SymbolSum& S) {
  SymbolSum out = sym_zero(S.base);
  for (auto& [p, k] : S.terms) sym_add_term(out, p.level, p.atoms, c * k);
  return out;
}

SymbolSum sym_normalize(Level level, const std::vector<SlotEntry>& slots, Level base) {
  SymbolSum out = sym_zero(base);
  std::vector<Atom> chosen;
  chosen.reserve(slots.size());
  std::function<void(size_t, Int)> walk = [&](size_t i, Int coeff) {
    if (i == slots.size()) {
      sym_add_term(out, level, chosen, coeff);
      return;
    }
    for (auto& [atom, c] : slots[i].terms) {
      if (c == 0) continue;
      chosen.push_back(atom);
      walk(i + 1, coeff * c);
      chosen.pop_back();
    }
  };
  walk(0, 1);
  return out;
}

static Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

SymbolSum sym_normalize_power(Level level, const SlotEntry& slot, int r, Level base) {
  SymbolSum out = sym_zero(base);
  std::vector<std::pair<Atom, Int>> entries;
  for (auto& t : slot.terms)
    if (t.second != 0) entries.push_back(t);
  if (r == 0) {
    sym_add_term(out, level, {}, 1);
    return out;
  }
  if (entries.empty()) return out;
  // Enumerate multiplicity vectors m with sum r; each contributes the
  // multinomial coefficient times the product of entry coefficients.
  std::vector<int> m(entries.size(), 0);
  std::vector<Atom> atoms;
  Int rfact = factorial(r);
  std::function<void(size_t, int, Int)> walk = [&](size_t i, int left, Int coeff) {
    if (i + 1 == entries.size()) {
      Int c = coeff;
      for (int k = 0; k < left; ++k) c *= entries[i].second;
      c = c * rfact;
      Int denom = factorial(left);
      for (size_t j = 0; j + 1 < entries.size(); ++j) denom *= factorial(m[j]);
      c /= denom;
      std::vector<Atom> atoms2 = atoms;
      for (int k = 0; k < left; ++k) atoms2.push_back(entries[i].first);
      sym_add_term(out, level, std::move(atoms2), c);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      m[i] = take;
      Int c = coeff;
      for (int k = 0; k < take; ++k) c *= entries[i].second;
      size_t before = atoms.size();
      for (int k = 0; k < take; ++k) atoms.push_back(entries[i].first);
      walk(i + 1, left - take, c);
      atoms.resize(before);
    }
    m[i] = 0;
  };
  walk(0, r, 1);
  return out;
}

SymbolSum underline_quotient(const SymbolSum& S) {
  SymbolSum out = sym_zero(S.base);
  for (auto& [p, c] : S.terms) {
    bool repeated = false;
    for (size_t i = 0; i + 1 < p.atoms.size() && !repeated; ++i)
      if (p.atoms[i].factor != kFactorA && p.atoms[i].factor == p.atoms[i + 1].factor)
        repeated = true;
    if (!repeated) sym_add_term(out, p.level, p.atoms, c);
  }
  return out;
}

SymbolSum sym_trace(const SymbolSum& S, Level to_base) {
  if (!divides(to_base, S.base))
    throw Error(Errc::NotATower, "symbol trace: target base does not divide the nominal base");
  SymbolSum out = sym_zero(to_base);
  for (auto& [p, c] : S.terms) sym_add_term(out, p.level, p.atoms, c);
  return out;
}

SymbolSum sym_res(const SymbolSum& S, Level to) {
  if (!divides(S.base, to))
    throw Error(Errc::NotATower, "symbol restriction: nominal base does not divide target");
  SymbolSum out = sym_zero(to);
  for (auto& [p, c] : S.terms) {
    TensorComponent tc = tensor_decompose(p.level, to, S.base);
    sym_add_term(out, tc.level, p.atoms, c * tc.multiplicity);
  }
  return out;
}

SymbolSum wr_element(const std::vector<WrRow>& rows) {
  Int deg = 0;
  for (const WrRow& r : rows) deg += r.ord * rel_degree(r.residue_level, 1);
  if (deg != 0)
    throw Error(Errc::DegreeCheckFailed,
                "relation table has nonzero total degree " + std::to_string(deg));
  SymbolSum out = sym_zero(1);
  for (const WrRow& r : rows)
    out = sym_add(out, sym_scale(r.ord, sym_normalize(r.residue_level, r.slots, 1)));
  return out;
}

SymbolSum rewrite_atoms(const SymbolSum& S, const std::map<Atom, std::pair<Atom, Int>>& rules) {
  SymbolSum out = sym_zero(S.base);
  for (auto& [p, c] : S.terms) {
    Int sign = 1;
    std::vector<Atom> atoms = p.atoms;
    for (Atom& a : atoms) {
      auto it = rules.find(a);
      if (it != rules.end()) {
        sign *= it->second.second;
        a = it->second.first;
      }
    }
    sym_add_term(out, p.level, std::move(atoms), sign * c);
  }
  return out;
}

std::string to_string(const Geometry& g, const SymbolSum& S) {
  if (S.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, c] : S.terms) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int ac = c >= 0 ? c : -c;
    if (ac != 1) os << ac << "*";
    os << "{";
    for (size_t i = 0; i < p.atoms.size(); ++i) {
      const Atom& a = p.atoms[i];
      if (i) os << ", ";
      if (a.factor == kFactorA)
        os << "A:" << (a.gen < static_cast<int>(g.ab.group(a.min_level).rank()) ? "" : "?")
           << "e" << a.gen;
      else
        os << g.curves.at(a.factor).name << ":" << g.curves.at(a.factor).catalog.at(a.gen).id;
    }
    os << "}@" << p.level;
  }
  return os.str();
}

}  // namespace kfilt
