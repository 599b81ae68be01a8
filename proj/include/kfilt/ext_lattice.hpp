#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kfilt {

// Levels name nodes of the extension lattice: level n is "the" degree-n
// extension of the ground field (level 1).  Level m sits inside level l
// exactly when m divides l, composita are lcms, and the decomposition of
// a tensor product of two extensions over a common subfield is gcd/lcm
// bookkeeping.  All invariants checked by this library are generic in
// this lattice.
using Level = std::int64_t;
using Int = std::int64_t;

enum class Errc {
  NotATower,
  LevelMismatch,
  NonZeroDegree,
  DegreeCheckFailed,
  MixedSupport,
  BaseMismatch,
  WrongDimension,
  BaseNotGround,
  ParseError,
  ValidationError,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

Level gcd_level(Level a, Level b);
Level lcm_level(Level a, Level b);
bool divides(Level m, Level l);

// [E_l : E_m] for a tower m | l.
Int rel_degree(Level l, Level m);

// E_l tensor E_m over E_base splits into `multiplicity` copies of E_level.
struct TensorComponent {
  Level level;
  Int multiplicity;
};

TensorComponent tensor_decompose(Level l, Level m, Level base);

}  // namespace kfilt
