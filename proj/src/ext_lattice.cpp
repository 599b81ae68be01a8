#include "kfilt/ext_lattice.hpp"

#include <numeric>

namespace kfilt {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotATower: return "NotATower";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::NonZeroDegree: return "NonZeroDegree";
    case Errc::DegreeCheckFailed: return "DegreeCheckFailed";
    case Errc::MixedSupport: return "MixedSupport";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::BaseNotGround: return "BaseNotGround";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

Level gcd_level(Level a, Level b) { return std::gcd(a, b); }

Level lcm_level(Level a, Level b) { return std::lcm(a, b); }

bool divides(Level m, Level l) { return m >= 1 && l >= 1 && l % m == 0; }

Int rel_degree(Level l, Level m) {
  if (!divides(m, l))
    throw Error(Errc::NotATower,
                "level " + std::to_string(m) + " does not divide " + std::to_string(l));
  return l / m;
}

TensorComponent tensor_decompose(Level l, Level m, Level base) {
  if (!divides(base, l) || !divides(base, m))
    throw Error(Errc::NotATower, "base " + std::to_string(base) + " must divide both " +
                                     std::to_string(l) + " and " + std::to_string(m));
  return TensorComponent{lcm_level(l, m), gcd_level(l, m) / base};
}

}  // namespace kfilt
