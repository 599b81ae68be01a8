#pragma once

#include <random>

#include "kfilt/filtration.hpp"

namespace kfilt {

using Rng = std::mt19937_64;

// The built-in random-suite geometry: d curves, each with a rational base
// point p, a second rational point q1, and points w2, w3 of levels 2 and 3,
// together with a constant rank-2 abelian model of dimension 1.
Geometry make_suite_geometry(int d);

// Levels used by the random suites; closed under gcd and lcm except for
// the top pair (12 never arises because data stay at one level).
const std::vector<Level>& suite_levels();

// A datum at a random level from the pool whose divisor supports are all
// defined at that level (so every support contributes a single closed
// point).
SymbolDatum random_datum(const Geometry& g, int r, Rng& rng,
                         const std::vector<Level>& pool = suite_levels());

// A degree-balanced random datum draws each divisor as a Jacobian element,
// so degree zero holds by construction.
Divisor random_pic0_divisor(const Geometry& g, int curve, Level level, Rng& rng);

AbElem random_ab_elem(const Geometry& g, Rng& rng);

// A random zero-cycle over the ground level with small support.
ZeroCycle random_cycle(const Geometry& g, Rng& rng);

}  // namespace kfilt
