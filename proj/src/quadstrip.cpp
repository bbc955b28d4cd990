#include "stripcert/quadstrip.hpp"
#include "stripcert/error.hpp"

#include <sstream>

namespace stripcert {

namespace {

using Rays = std::vector<RayTerm>;

const UPoly kOne = UPoly::constant(Rational(1));
const UPoly kX = UPoly::monomial(1);
const UPoly kOmx{Rational(1), Rational(-1)};

UPoly cst(const Rational &c) { return UPoly::constant(c); }

Rational pow2(int k) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(v) : Rational(1) / Rational(v);
}

struct Form {
  UPoly f2, f1, f0;
};

UPoly disc(const Form &F) { return F.f1 * F.f1 - F.f2 * F.f0 * Rational(4); }

// Y -> Y + b Z
Form shift(const Form &F, const UPoly &b) {
  return {F.f2, F.f1 + b * F.f2 * Rational(2), F.f0 + b * F.f1 + b * b * F.f2};
}

void unshift(Rays &rays, const UPoly &b) {
  for (auto &t : rays)
    t.q = t.q - b * t.p;
}

struct Ctx {
  bool snap = false;
  int calls = 0;
  Rational width;
};

constexpr int kMaxCalls = 20000;

// Part of a common factor that keeps one sign on [0,1], made positive there.
UPoly definite_part(const UPoly &c) {
  UPoly out = kOne;
  for (const auto &[fac, m] : squarefree_decompose(c).factors) {
    int inside = count_roots_in(fac, Rational(0), Rational(1)) - (fac(Rational(1)) == 0 ? 1 : 0);
    out *= fac.pow(inside > 0 ? m - m % 2 : m);
  }
  if (out.degree() <= 0)
    return kOne;
  if (out(gap_samples(out, Rational(0), Rational(1)).front()) < 0)
    out = -out;
  return out;
}

Rays rec(Form F, int d, int e, Ctx &c, std::optional<Rational> hint);

// Turns the near-zero at x into an exact one by dropping a tiny remainder.
Rays snap_at(const Form &F, int d, int e, Ctx &c, Rational x) {
  // a zero this close to an edge sits on it
  if (x < pow2(-48))
    x = 0;
  else if (x > 1 - pow2(-48))
    x = 1;
  const bool interior = x > 0 && x < 1;
  const Rational f2v = F.f2(x), f1v = F.f1(x), f0v = F.f0(x);
  const UPoly lin = UPoly::linear_root(x), sq = lin * lin;
  auto localize = [&](const UPoly &p) {
    return interior ? p - divmod(p, sq).remainder : p - cst(p(x));
  };
  if (f2v > 0 && f2v * pow2(40) >= abs(f0v) + abs(f1v)) {
    UPoly b = cst(-f1v / (2 * f2v));
    Form h = shift(F, b);
    h.f0 = localize(h.f0);
    Rays r = rec(h, d, e, c, std::nullopt);
    unshift(r, b);
    return r;
  }
  // the near-zero points along Z = 0
  Form h = F;
  h.f2 = localize(F.f2);
  h.f1 = F.f1 - cst(f1v);
  return rec(h, d, e, c, std::nullopt);
}

Rays rec(Form F, int d, int e, Ctx &c, std::optional<Rational> hint) {
  if (++c.calls > kMaxCalls)
    throw Error(ErrorCode::InternalInvariant, "ray extraction exceeded its step limit");
  Rays out;
  const bool no2 = F.f2.is_zero(), no0 = F.f0.is_zero();
  if (no2 || no0 || F.f1.is_zero()) {
    if ((no2 || no0) && !F.f1.is_zero() && !c.snap)
      throw Error(ErrorCode::InternalInvariant, "form left the cone");
    if (!no2)
      out.push_back({F.f2, kOne, {}});
    if (!no0)
      out.push_back({F.f0, {}, kOne});
    return out;
  }
  if (d > e) {
    Rays r = rec({F.f0, F.f1, F.f2}, e, d, c, hint);
    for (auto &t : r)
      std::swap(t.p, t.q);
    return r;
  }
  if (d == 0) {
    const Rational a = F.f2[0];
    if (a <= 0) {
      if (!c.snap)
        throw Error(ErrorCode::InternalInvariant, "form left the cone");
      out.push_back({F.f0, {}, kOne});
      return out;
    }
    const Rational half = Rational(1) / (2 * a), quarter = Rational(1) / (4 * a);
    out.push_back({cst(a), kOne, F.f1 * half});
    UPoly psi = F.f0 - F.f1 * F.f1 * quarter;
    if (!psi.is_zero())
      out.push_back({psi, {}, kOne});
    return out;
  }

  const UPoly D = disc(F);
  if (D.is_zero()) {
    // f = m (s Y + t Z)^2
    UPoly t = F.f1 * Rational(1, 2);
    UPoly k = gcd(F.f2, t);
    UPoly s = exact_div(F.f2, k);
    out.push_back({exact_div(k, s), s, exact_div(t, k)});
    return out;
  }

  if (UPoly g = gcd(gcd(F.f2, F.f1), F.f0); g.degree() > 0) {
    UPoly cp = definite_part(g);
    if (cp.degree() > 0) {
      const int k = cp.degree();
      Form G{exact_div(F.f2, cp), exact_div(F.f1, cp), exact_div(F.f0, cp)};
      Rays r = rec(G, d - k, e - k, c, hint);
      for (auto &t : r)
        t.r = t.r * cp;
      return r;
    }
  }
  if (UPoly g = gcd(square_root_part(F.f2), F.f1); g.degree() > 0) {
    Form G{exact_div(F.f2, g * g), exact_div(F.f1, g), F.f0};
    Rays r = rec(G, d - 2 * g.degree(), e, c, hint);
    for (auto &t : r)
      t.p = t.p * g;
    return r;
  }
  if (UPoly g = gcd(square_root_part(F.f0), F.f1); g.degree() > 0) {
    Form G{F.f2, exact_div(F.f1, g), exact_div(F.f0, g * g)};
    Rays r = rec(G, d, e - 2 * g.degree(), c, hint);
    for (auto &t : r)
      t.q = t.q * g;
    return r;
  }

  if (c.snap && hint && D(*hint) == 0)
    return snap_at(F, d, e, c, *hint);

  // zeros inside (0,1): move the double root of y/z to 0, then f0 loses a square
  for (const auto &z : roots_on_01(D, c.width)) {
    const Rational &x = z.point();
    if (x <= 0 || x >= 1)
      continue;
    if (z.exact) {
      const Rational f2v = F.f2(x);
      if (f2v > 0) {
        UPoly b = cst(-F.f1(x) / (2 * f2v));
        Form h = shift(F, b);
        UPoly lin = UPoly::linear_root(x);
        if (divmod(h.f0, lin * lin).remainder.is_zero()) {
          Rays r = rec(h, d, e, c, std::nullopt);
          unshift(r, b);
          return r;
        }
      }
      if (!c.snap)
        throw Error(ErrorCode::InternalInvariant, "zero at X = " + to_string(x) + " does not reduce");
      return snap_at(F, d, e, c, x);
    }
    if (!c.snap)
      throw Error(ErrorCode::IrrationalZero,
                  "the form vanishes at an irrational point X ~ " + std::to_string(x.get_d()));
    return snap_at(F, d, e, c, x);
  }

  // zeros on the boundary lines
  struct End {
    int kind; // 0 none, 1 along Z = 0, 2 at y/z = beta
    Rational beta;
  };
  auto end_at = [&](const Rational &x) -> End {
    if (D(x) != 0)
      return {0, Rational(0)};
    const Rational f2v = F.f2(x);
    if (f2v == 0)
      return {1, Rational(0)};
    return {2, -F.f1(x) / (2 * f2v)};
  };
  const End z0 = end_at(Rational(0)), z1 = end_at(Rational(1));
  if (z0.kind == 2 && z1.kind == 2 && z0.beta != z1.beta) {
    const Rational b0 = z0.beta, b1 = z1.beta;
    if (d == e) {
      // f(X, b0 Y + b1 Z, Y + Z)
      Form h{F.f2 * Rational(b0 * b0) + F.f1 * b0 + F.f0,
             F.f2 * Rational(2 * b0 * b1) + F.f1 * Rational(b0 + b1) + F.f0 * Rational(2),
             F.f2 * Rational(b1 * b1) + F.f1 * b1 + F.f0};
      Rays r = rec(h, d, e, c, std::nullopt);
      const Rational k = b0 - b1, w = Rational(1) / (k * k);
      for (auto &t : r) {
        UPoly p = t.p - t.q, q = t.p * Rational(-b1) + t.q * b0;
        t = {t.r * w, p, q};
      }
      return r;
    }
    UPoly ell{b0, Rational(b1 - b0)};
    Rays r = rec(shift(F, ell), d, e, c, std::nullopt);
    unshift(r, ell);
    return r;
  }
  for (const End *z : {&z0, &z1}) {
    if (z->kind == 2 && z->beta != 0) {
      UPoly b = cst(z->beta);
      Rays r = rec(shift(F, b), d, e, c, std::nullopt);
      unshift(r, b);
      return r;
    }
  }

  // Peel a multiple of a square that vanishes at the existing zeros; the
  // largest admissible multiple creates a new one.
  const bool inf0 = z0.kind == 1, inf1 = z1.kind == 1;
  const bool flat0 = z0.kind == 2, flat1 = z1.kind == 2;
  const bool peel_z = (!flat0 && !flat1) || inf0 || inf1;
  UPoly t = kOne;
  if (peel_z) {
    if (flat0)
      t *= kX;
    if (flat1)
      t *= kOmx;
  }
  const UPoly num = -D, den = (peel_z ? F.f2 : F.f0) * t * Rational(4);
  auto m = minimize_ratio_01(num, den, c.width);
  if (!m)
    throw Error(ErrorCode::InternalInvariant, "no peeling constant");
  auto peel = [&](const Rational &amount, std::optional<Rational> next) {
    Form G = F;
    UPoly a = t * amount;
    if (peel_z)
      G.f0 = G.f0 - a;
    else
      G.f2 = G.f2 - a;
    Rays r = rec(G, d, e, c, next);
    r.push_back(peel_z ? RayTerm{a, {}, kOne} : RayTerm{a, kOne, {}});
    return r;
  };
  if (m->exact) {
    if (m->value <= 0) {
      if (!c.snap)
        throw Error(ErrorCode::InternalInvariant, "peeling constant is not positive");
      return snap_at(F, d, e, c, m->at);
    }
    if (!c.snap && !is_nonneg_on_01(num - den * m->value))
      throw Error(ErrorCode::InternalInvariant, "peeling constant is not admissible");
    return peel(m->value, std::nullopt);
  }
  if (!c.snap)
    throw Error(ErrorCode::IrrationalZero, "peeling constant attained at an irrational point X ~ " +
                                               std::to_string(m->at.get_d()));
  if (m->value <= 0)
    return snap_at(F, d, e, c, m->at);
  return peel(m->value, m->at);
}

int root_count_01(const UPoly &r) {
  int n = 0;
  for (const auto &z : roots_on_01(r, pow2(-32)))
    n += z.multiplicity;
  return n;
}

int cap_degree(const RayTerm &t, int d, int e) {
  int delta = std::max(d, e) + 1;
  if (!t.p.is_zero())
    delta = std::min(delta, d - 2 * t.p.degree());
  if (!t.q.is_zero())
    delta = std::min(delta, e - 2 * t.q.degree());
  return delta;
}

// gcd(p, q) = 1, p monic (or q when p = 0); extreme splitting on request.
Rays tidy(const Rays &rays, int d, int e, bool extremalize) {
  Rays out;
  for (RayTerm t : rays) {
    if (t.r.is_zero() || (t.p.is_zero() && t.q.is_zero()))
      continue;
    UPoly k = t.p.is_zero() ? monic(t.q) : t.q.is_zero() ? monic(t.p) : gcd(t.p, t.q);
    if (k.degree() > 0) {
      t.p = exact_div(t.p, k);
      t.q = exact_div(t.q, k);
      t.r = t.r * k * k;
    }
    const Rational lam = t.p.is_zero() ? t.q.lead() : t.p.lead();
    const Rational inv = Rational(1) / lam;
    t.p *= inv;
    t.q *= inv;
    t.r *= lam * lam;
    const int delta = cap_degree(t, d, e);
    if (extremalize && !is_extreme_term(t, d, e) && t.r.degree() <= delta && delta >= 0) {
      std::vector<Rational> b = bernstein_coefficients(t.r, delta);
      if (std::all_of(b.begin(), b.end(), [](const Rational &v) { return v >= 0; })) {
        for (int j = 0; j <= delta; ++j)
          if (b[static_cast<std::size_t>(j)] != 0)
            out.push_back({bernstein_basis(delta, j) * b[static_cast<std::size_t>(j)], t.p, t.q});
        continue;
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

void repair(Rays &rays) {
  for (auto &t : rays) {
    if (is_nonneg_on_01(t.r))
      continue;
    const Rational s = max_abs_coeff(t.r);
    for (int k = 100; k >= -8; k -= 4) {
      UPoly lifted = t.r + cst(s * pow2(-k));
      if (is_nonneg_on_01(lifted)) {
        t.r = lifted;
        break;
      }
    }
  }
}

Rays snap_decompose(const QuadForm &q, const Rational &width) {
  Ctx c;
  c.snap = true;
  c.width = width;
  Rays r = rec({q.f2, q.f1, q.f0}, q.d, q.e, c, std::nullopt);
  repair(r);
  return tidy(r, q.d, q.e, false);
}

// eps (Y^2 + Z^2) + small errors, written exactly as degree-n Bernstein rays.
std::optional<Rays> absorb(const UPoly &E2, const UPoly &E1, const UPoly &E0, int n) {
  if (E2.degree() > n || E1.degree() > n || E0.degree() > n)
    return std::nullopt;
  Rays out;
  UPoly L2 = E2, L0 = E0;
  std::vector<Rational> b = bernstein_coefficients(E1, n);
  for (int k = 0; k <= n; ++k) {
    const Rational &bk = b[static_cast<std::size_t>(k)];
    if (bk == 0)
      continue;
    UPoly base = bernstein_basis(n, k) * Rational(abs(bk) / 2);
    out.push_back({base, kOne, cst(Rational(sign(bk)))});
    L2 -= base;
    L0 -= base;
  }
  for (const auto &[L, y] : {std::pair{L2, true}, std::pair{L0, false}}) {
    std::vector<Rational> c = bernstein_coefficients(L, n);
    for (int k = 0; k <= n; ++k) {
      const Rational &ck = c[static_cast<std::size_t>(k)];
      if (ck < 0)
        return std::nullopt;
      if (ck > 0)
        out.push_back(y ? RayTerm{bernstein_basis(n, k) * ck, kOne, {}}
                        : RayTerm{bernstein_basis(n, k) * ck, {}, kOne});
    }
  }
  return out;
}

// Exact decomposition of a strictly positive form: decompose
// f - eps (Y^2 + Z^2) approximately and absorb what is left.
std::optional<Rays> reserve(const QuadForm &q) {
  const int n = q.d;
  Rational scale = std::max({max_abs_coeff(q.f2), max_abs_coeff(q.f1), max_abs_coeff(q.f0)});
  int attempts = 0;
  for (int k = 3; k <= 60 && attempts < 3; ++k) {
    const Rational eps = scale * pow2(-k);
    QuadForm g{q.f2 - cst(eps), q.f1, q.f0 - cst(eps), q.d, q.e};
    if (!strictly_positive(g))
      continue;
    ++attempts;
    Rays r;
    try {
      // only needs to beat eps, and coarse roots keep the data small
      r = snap_decompose(g, pow2(-(2 * k + 12)));
    } catch (const Error &) {
      continue;
    }
    bool ok = true;
    for (const auto &t : r)
      ok = ok && within_caps(t, q.d, q.e);
    if (!ok)
      continue;
    QuadForm s = sum_rays(r, q.d, q.e);
    auto extra = absorb(q.f2 - s.f2, q.f1 - s.f1, q.f0 - s.f0, n);
    if (!extra)
      continue;
    r.insert(r.end(), extra->begin(), extra->end());
    Rays t = tidy(r, q.d, q.e, true);
    QuadForm check = sum_rays(t, q.d, q.e);
    if (check.f2 == q.f2 && check.f1 == q.f1 && check.f0 == q.f0)
      return t;
  }
  return std::nullopt;
}

bool same_form(const QuadForm &a, const QuadForm &b) {
  return a.f2 == b.f2 && a.f1 == b.f1 && a.f0 == b.f0;
}

} // namespace

QuadForm quad_form(const RatPoly &f) {
  if (!f.uses_only(kXY))
    throw Error(ErrorCode::InvalidTarget, "expected a polynomial in X, Y");
  if (f.degree(Var::Y) > 2)
    throw Error(ErrorCode::InvalidTarget, "the quadratic pipeline needs deg_Y f <= 2");
  QuadForm q;
  q.f2 = f.coeff_in(Var::Y, 2).to_univariate(Var::X);
  q.f1 = f.coeff_in(Var::Y, 1).to_univariate(Var::X);
  q.f0 = f.coeff_in(Var::Y, 0).to_univariate(Var::X);
  q.d = q.e = std::max(f.degree(Var::X), 0);
  return q;
}

UPoly discriminant(const QuadForm &q) { return disc({q.f2, q.f1, q.f0}); }

bool within_caps(const QuadForm &q) {
  return q.f2.degree() <= q.d && q.f0.degree() <= q.e && 2 * q.f1.degree() <= q.d + q.e;
}

bool membership_check(const QuadForm &q) {
  return is_nonneg_on_01(q.f2) && is_nonneg_on_01(q.f0) && is_nonneg_on_01(-discriminant(q));
}

bool strictly_positive(const QuadForm &q) {
  return is_positive_on_01(q.f2) && is_positive_on_01(-discriminant(q));
}

std::optional<std::array<Rational, 2>> non_membership_witness(const QuadForm &q) {
  if (auto x = negative_witness_01(q.f2)) {
    const Rational a = q.f2(*x);
    Rational y = (abs(q.f1(*x)) + abs(q.f0(*x))) / abs(a) + 1;
    return std::array<Rational, 2>{*x, y};
  }
  if (auto x = negative_witness_01(q.f0))
    return std::array<Rational, 2>{*x, Rational(0)};
  if (auto x = negative_witness_01(-discriminant(q))) {
    const Rational a = q.f2(*x);
    if (a > 0)
      return std::array<Rational, 2>{*x, Rational(-q.f1(*x) / (2 * a))};
    return std::array<Rational, 2>{*x, Rational(-(q.f0(*x) + 1) / q.f1(*x))};
  }
  return std::nullopt;
}

StripZeros find_strip_zeros(const QuadForm &q) {
  StripZeros out;
  const UPoly D = discriminant(q);
  if (D.is_zero()) {
    out.non_isolated = true;
    return out;
  }
  for (auto &z : roots_on_01(D, pow2(-64))) {
    StripZero s;
    const Rational &x = z.point();
    bool f2_zero, f0_zero;
    if (z.exact) {
      f2_zero = q.f2(x) == 0;
      f0_zero = q.f0(x) == 0;
    } else {
      auto shares = [&](const UPoly &p) {
        if (p.is_zero())
          return true;
        UPoly g = gcd(z.witness.defining, p);
        return g.degree() > 0 && count_roots_in(g, z.witness.lo, z.witness.hi) > 0;
      };
      f2_zero = shares(q.f2);
      f0_zero = shares(q.f0);
    }
    if (f2_zero && f0_zero) {
      s.kind = StripZero::Kind::WholeFiber;
    } else if (f2_zero) {
      s.kind = StripZero::Kind::AtInfinity;
    } else {
      s.kind = StripZero::Kind::Ratio;
      Rational ratio = -q.f1(x) / (2 * q.f2(x));
      if (z.exact)
        s.ratio = ratio;
      s.ratio_approx = ratio.get_d();
    }
    s.x = std::move(z);
    out.zeros.push_back(std::move(s));
  }
  return out;
}

QuadForm sum_rays(const std::vector<RayTerm> &rays, int d, int e) {
  QuadForm s;
  s.d = d;
  s.e = e;
  for (const auto &t : rays) {
    s.f2 += t.r * t.p * t.p;
    s.f1 += t.r * t.p * t.q * Rational(2);
    s.f0 += t.r * t.q * t.q;
  }
  return s;
}

bool within_caps(const RayTerm &t, int d, int e) {
  if (!t.p.is_zero() && t.r.degree() + 2 * t.p.degree() > d)
    return false;
  if (!t.q.is_zero() && t.r.degree() + 2 * t.q.degree() > e)
    return false;
  return is_nonneg_on_01(t.r);
}

bool is_extreme_term(const RayTerm &t, int d, int e) {
  if (t.r.is_zero() || (t.p.is_zero() && t.q.is_zero()))
    return false;
  if (t.p.is_zero() ? t.q.degree() != 0 : t.q.is_zero() ? t.p.degree() != 0
                                                         : gcd(t.p, t.q).degree() != 0)
    return false;
  if (t.r.degree() != cap_degree(t, d, e))
    return false;
  return t.r.degree() == 0 || root_count_01(t.r) == t.r.degree();
}

RayDecomposition extract_rays(const QuadForm &q, Mode mode) {
  if ((q.d - q.e) % 2 != 0)
    throw Error(ErrorCode::ParityMismatch, "degree caps " + std::to_string(q.d) + ", " +
                                               std::to_string(q.e) + " differ in parity");
  if (!within_caps(q))
    throw Error(ErrorCode::InvalidBound, "coefficients exceed the degree caps");
  if (!membership_check(q)) {
    std::string msg = "the form is negative somewhere on the strip";
    if (auto w = non_membership_witness(q))
      msg += " (at X = " + to_string((*w)[0]) + ", Y = " + to_string((*w)[1]) + ")";
    throw Error(ErrorCode::NotNonnegative, msg);
  }
  if (mode != Mode::Numeric) {
    try {
      Ctx c;
      c.width = pow2(-64);
      Rays r = tidy(rec({q.f2, q.f1, q.f0}, q.d, q.e, c, std::nullopt), q.d, q.e, true);
      if (!same_form(sum_rays(r, q.d, q.e), q))
        throw Error(ErrorCode::InternalInvariant, "ray terms do not add up");
      return {std::move(r), true};
    } catch (const Error &err) {
      if (err.code() != ErrorCode::IrrationalZero && err.code() != ErrorCode::InternalInvariant)
        throw;
    }
    if (q.d == q.e && strictly_positive(q))
      if (auto r = reserve(q))
        return {std::move(*r), true};
    if (mode == Mode::Exact)
      throw Error(ErrorCode::IrrationalZero,
                  "no decomposition with rational data found; the strip zeros are irrational");
  }
  return {snap_decompose(q, pow2(-100)), false};
}

Certificate assemble_quadratic(const RatPoly &f, const RayDecomposition &rays, Mode mode) {
  Certificate c;
  c.f = f;
  c.pipeline = Pipeline::Quadratic;
  bool exact = rays.exact && mode != Mode::Numeric;
  const RatPoly x = RatPoly::var(Var::X), omx = RatPoly(1) - x;
  for (const auto &t : rays.rays) {
    Lukacs01 l = lukacs_01(t.r, mode);
    exact = exact && l.exact;
    RatPoly lin = RatPoly::from_univariate(t.p, Var::X) * RatPoly::var(Var::Y) +
                  RatPoly::from_univariate(t.q, Var::X);
    auto add = [&](std::vector<WeightedSquare> &dst, const USquare &s, const RatPoly &mult) {
      dst.push_back({s.weight, RatPoly::from_univariate(s.poly, Var::X) * mult * lin});
    };
    // u X = u X^2 + u X(1-X), v (1-X) = v (1-X)^2 + v X(1-X)
    for (const auto &s : l.t)
      add(c.sigma0, s, RatPoly(1));
    for (const auto &s : l.u) {
      add(c.sigma0, s, x);
      add(c.sigma1, s, RatPoly(1));
    }
    for (const auto &s : l.v) {
      add(c.sigma0, s, omx);
      add(c.sigma1, s, RatPoly(1));
    }
    for (const auto &s : l.w)
      add(c.sigma1, s, RatPoly(1));
  }
  c.mode = exact ? CertMode::Exact : CertMode::Numeric;
  finalize(c);
  return c;
}

std::string ray_dump(const std::vector<RayTerm> &rays) {
  std::ostringstream os;
  for (const auto &t : rays)
    os << to_string(t.r) << " | " << to_string(t.p) << " | " << to_string(t.q) << '\n';
  return os.str();
}

} // namespace stripcert
