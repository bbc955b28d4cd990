#pragma once

#include "stripcert/rat_poly.hpp"
#include "stripcert/realroots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stripcert {

/// Coefficients b_j(Y, Z) of W^j X^(N+d-j) in (W+X)^N F.
struct PolyaExpansion {
  int N = 0;
  int d = 0;
  int m = 0;
  std::vector<RatPoly> b; // size N+d+1, each a form of degree m in Y, Z

  // Expansion for N+1 via b_{j,N+1} = b_{j,N} + b_{j-1,N}.
  PolyaExpansion next() const;
  // b_j(Y, 1)
  UPoly dehomogenized(int j) const;
};

struct BjCheck {
  bool ok = true;
  int failing_j = -1;
  RatPoly failing; // b_j(Y, Z) at the least failing index
};

struct TraceRow {
  int N;
  bool ok;
  int failing_j; // -1 when ok
};

struct PolyaSearch {
  bool found = false;
  int N = -1;
  PolyaExpansion expansion; // valid only when found
  std::vector<TraceRow> trace;
};

struct FBulletBound {
  enum class Method { IntervalSubdivision, UserSupplied };
  Rational lower;
  Method method = Method::UserSupplied;
  int depth = 0;
};

struct BoundaryZero {
  int side; // 0 or 1
  RootWitness root;
};

struct HypothesisReport {
  bool fully_mic = false;
  bool m_even = false;
  std::vector<BoundaryZero> boundary_zeros;
  // f(0, Y) or f(1, Y) vanishes identically
  bool boundary_line_vanishes = false;
  bool interior_positive_sampled = false;
  bool dfdX_nonzero_at_zeros = true;
};

constexpr int kDefaultNMax = 512;
constexpr int kDefaultDepthCap = 24;

PolyaExpansion expand(const RatPoly &f, int N);

BjCheck all_bj_nonneg(const PolyaExpansion &e);

PolyaSearch find_N_incremental(const RatPoly &f, int N_max = kDefaultNMax);

/// (d-1) d (d+1) (m+1) ||f|| / (2 lower)
Rational polya_threshold(const RatPoly &f, const Rational &lower);

/// d^3 (m+1) ||f|| / lower
Rational degree_bound_positive(const RatPoly &f, const Rational &lower);

int bound_N_positive(const RatPoly &f, const FBulletBound &fb);

/// Certified lower bound for min f-bar over [0,1] x unit circle, or nullopt
/// when the subdivision cannot drive it positive within the limits.
std::optional<FBulletBound> certify_f_bullet(const RatPoly &f, int depth_cap = kDefaultDepthCap,
                                             long box_budget = 200000);

HypothesisReport check_hypotheses(const RatPoly &f);

// Effective Polya with a margin eps in [0,1): the degree threshold
// (d-1) d ||g|| / (2 (1-eps) lambda) and the coefficient lower bound
// N! (N+d)^d / (j! (N+d-j)!) * eps * lambda. Reporting helpers only.
Rational polya_eps_threshold(int d, const Rational &norm_g, const Rational &lambda,
                             const Rational &eps);
Rational polya_eps_coefficient_bound(int N, int d, int j, const Rational &eps,
                                     const Rational &lambda);

std::string trace_csv(const std::vector<TraceRow> &trace);

} // namespace stripcert
