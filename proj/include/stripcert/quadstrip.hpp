#pragma once

#include "stripcert/interval_extremes.hpp"
#include "stripcert/sos.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace stripcert {

/// f2 Y^2 + f1 YZ + f0 Z^2 with degree caps deg f2 <= d, deg f1 <= (d+e)/2,
/// deg f0 <= e.
struct QuadForm {
  UPoly f2, f1, f0;
  int d = 0, e = 0;
};

/// The form of f (deg_Y f <= 2) homogenized to degree 2, caps d = e = deg_X f.
QuadForm quad_form(const RatPoly &f);

/// f1^2 - 4 f2 f0
UPoly discriminant(const QuadForm &q);

bool within_caps(const QuadForm &q);

/// f2 >= 0, f0 >= 0 and discriminant <= 0 on [0,1].
bool membership_check(const QuadForm &q);

/// The form is positive on [0,1] x (R^2 \ 0).
bool strictly_positive(const QuadForm &q);

/// A point (x, y) with x in [0,1] and f2 y^2 + f1 y + f0 < 0 there.
std::optional<std::array<Rational, 2>> non_membership_witness(const QuadForm &q);

/// r(X) (p(X) Y + q(X) Z)^2
struct RayTerm {
  UPoly r, p, q;
};

struct StripZero {
  enum class Kind { Ratio, AtInfinity, WholeFiber };
  Kind kind;
  RootOn01 x;
  // y/z at the zero, exact when x is rational; meaningful for Kind::Ratio
  std::optional<Rational> ratio;
  double ratio_approx = 0;
};

struct StripZeros {
  std::vector<StripZero> zeros;
  // the discriminant vanishes identically, so every fibre has a zero
  bool non_isolated = false;
};

StripZeros find_strip_zeros(const QuadForm &q);

struct RayDecomposition {
  std::vector<RayTerm> rays;
  bool exact = true;
};

/// Decomposition of a member of the cone into terms r (pY + qZ)^2 with
/// r >= 0 on [0,1], deg r + 2 deg p <= d and deg r + 2 deg q <= e.
RayDecomposition extract_rays(const QuadForm &q, Mode mode = Mode::Auto);

QuadForm sum_rays(const std::vector<RayTerm> &rays, int d, int e);

/// deg r + 2 deg p <= d, deg r + 2 deg q <= e and r >= 0 on [0,1].
bool within_caps(const RayTerm &t, int d, int e);

/// The generator conditions: gcd(p, q) = 1, all deg r roots of r lie in
/// [0,1], and deg r = min(d - 2 deg p, e - 2 deg q).
bool is_extreme_term(const RayTerm &t, int d, int e);

Certificate assemble_quadratic(const RatPoly &f, const RayDecomposition &rays,
                               Mode mode = Mode::Auto);

/// One "r | p | q" line per term.
std::string ray_dump(const std::vector<RayTerm> &rays);

} // namespace stripcert
