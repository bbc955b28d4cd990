#pragma once

#include "stripcert/realroots.hpp"

#include <optional>
#include <vector>

namespace stripcert {

/// A root in [0, 1]: exact when rational, else a witness plus a rational
/// point inside its (refined) isolating interval.
struct RootOn01 {
  RootWitness witness;
  std::optional<Rational> exact;
  Rational approx;
  int multiplicity = 1;

  const Rational &point() const { return exact ? *exact : approx; }
};

/// Distinct roots of p in [0, 1], ascending. Irrational roots are refined
/// until their interval is narrower than `width`.
std::vector<RootOn01> roots_on_01(const UPoly &p, const Rational &width);

struct RatioMinimum {
  Rational at;    // exact minimiser or an approximation of it
  Rational value; // num(at) / den(at)
  bool exact = true;
};

/// Minimum over [0,1] of num/den, where den >= 0 and num >= 0 and the
/// quotient blows up at uncancelled zeros of den. Critical points come from
/// the roots of num' den - num den'.
std::optional<RatioMinimum> minimize_ratio_01(const UPoly &num, const UPoly &den,
                                              const Rational &width);

} // namespace stripcert
