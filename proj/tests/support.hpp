#pragma once

#include "stripcert/rat_poly.hpp"
#include "stripcert/quadstrip.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace stripcert;

inline Rational rand_rational(std::mt19937 &rng, int num = 5, int den = 4) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

inline int rand_int(std::mt19937 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Dense random polynomial in X, Y with small integer coefficients.
inline RatPoly rand_poly(std::mt19937 &rng, int dx, int dy, int range = 4) {
  RatPoly f;
  for (int j = 0; j <= dx; ++j)
    for (int i = 0; i <= dy; ++i)
      f.add_term({0, j, i, 0}, Rational(rand_int(rng, -range, range)));
  return f;
}

inline UPoly upoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c)
    v.emplace_back(x);
  return UPoly(v);
}

inline RatPoly in_x(const UPoly &p) { return RatPoly::from_univariate(p, Var::X); }

// r(X) (p Y + q)^2 with r built from factors that keep it >= 0 on [0,1].
struct RaySum {
  RatPoly f;
  int n = 0;
};

inline RaySum random_ray_sum(std::mt19937 &rng) {
  RaySum out;
  out.n = rand_int(rng, 1, 3);
  const int nt = rand_int(rng, 1, 3);
  for (int k = 0; k < nt; ++k) {
    const int dp = rand_int(rng, 0, out.n / 2), dq = rand_int(rng, 0, out.n / 2);
    const int dr = out.n - 2 * std::max(dp, dq);
    UPoly r = UPoly::constant(Rational(rand_int(rng, 1, 5)));
    for (int i = 0; i < dr; ++i) {
      switch (rand_int(rng, 0, 2)) {
      case 0: r *= upoly({0, 1}); break;
      case 1: r *= upoly({1, -1}); break;
      default: r *= upoly({rand_int(rng, 3, 6), -rand_int(rng, 0, 3)}); break;
      }
    }
    std::vector<Rational> pc, qc;
    for (int i = 0; i <= dp; ++i)
      pc.emplace_back(rand_int(rng, -3, 3));
    for (int i = 0; i <= dq; ++i)
      qc.emplace_back(rand_int(rng, -3, 3));
    RatPoly lin = in_x(UPoly(pc)) * RatPoly::var(Var::Y) + in_x(UPoly(qc));
    out.f += in_x(r) * lin * lin;
  }
  return out;
}

} // namespace testing_support
