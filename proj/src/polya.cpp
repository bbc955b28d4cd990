#include "stripcert/polya.hpp"
#include "stripcert/error.hpp"

#include <cmath>
#include <deque>
#include <sstream>

namespace stripcert {

namespace {

void require_xy(const RatPoly &f) {
  if (f.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial");
  if (!f.uses_only(kXY))
    throw Error(ErrorCode::InvalidTarget, "expected a polynomial in X, Y");
}

UPoly leading_y_coefficient(const RatPoly &f) {
  return f.coeff_in(Var::Y, f.degree(Var::Y)).to_univariate(Var::X);
}

bool no_root_in_01(const UPoly &p) {
  if (p.is_zero())
    return false;
  if (p(Rational(0)) == 0 || p(Rational(1)) == 0)
    return false;
  return p.degree() <= 0 || count_roots_in(p, Rational(0), Rational(1)) == 0;
}

UPoly line(const RatPoly &f, int side) {
  return f.substitute(Var::X, RatPoly(Rational(side))).to_univariate(Var::Y);
}

} // namespace

PolyaExpansion PolyaExpansion::next() const {
  PolyaExpansion e;
  e.N = N + 1;
  e.d = d;
  e.m = m;
  e.b.resize(b.size() + 1);
  for (std::size_t j = 0; j < e.b.size(); ++j) {
    if (j < b.size())
      e.b[j] = b[j];
    if (j >= 1)
      e.b[j] += b[j - 1];
  }
  return e;
}

UPoly PolyaExpansion::dehomogenized(int j) const {
  return b[static_cast<std::size_t>(j)].substitute(Var::Z, RatPoly(1)).to_univariate(Var::Y);
}

PolyaExpansion expand(const RatPoly &f, int N) {
  require_xy(f);
  if (N < 0)
    throw Error(ErrorCode::InvalidBound, "N must be nonnegative");
  RatPoly F = lift_F(f);
  PolyaExpansion e;
  e.d = f.degree(Var::X);
  e.m = f.degree(Var::Y);
  e.b.resize(static_cast<std::size_t>(e.d) + 1);
  for (const auto &[mono, c] : F.terms())
    e.b[static_cast<std::size_t>(mono[0])].add_term({0, 0, mono[2], mono[3]}, c);
  for (int k = 0; k < N; ++k)
    e = e.next();
  return e;
}

BjCheck all_bj_nonneg(const PolyaExpansion &e) {
  if (e.m % 2 != 0)
    throw Error(ErrorCode::OddDegreeY, "deg_Y f = " + std::to_string(e.m) + " is odd");
  BjCheck out;
  for (int j = 0; j < static_cast<int>(e.b.size()); ++j) {
    if (!is_nonneg_on_R(e.dehomogenized(j))) {
      out.ok = false;
      out.failing_j = j;
      out.failing = e.b[static_cast<std::size_t>(j)];
      return out;
    }
  }
  return out;
}

PolyaSearch find_N_incremental(const RatPoly &f, int N_max) {
  require_xy(f);
  if (N_max < 0)
    throw Error(ErrorCode::InvalidBound, "N_max must be nonnegative");
  if (f.degree(Var::Y) % 2 != 0)
    throw Error(ErrorCode::OddDegreeY, "deg_Y f is odd");
  PolyaSearch s;
  PolyaExpansion e = expand(f, 0);
  for (int N = 0; N <= N_max; ++N) {
    if (N > 0)
      e = e.next();
    BjCheck c = all_bj_nonneg(e);
    s.trace.push_back({N, c.ok, c.failing_j});
    if (c.ok) {
      s.found = true;
      s.N = N;
      s.expansion = std::move(e);
      return s;
    }
  }
  return s;
}

Rational polya_threshold(const RatPoly &f, const Rational &lower) {
  const long d = f.degree(Var::X), m = f.degree(Var::Y);
  return Rational((d - 1) * d * (d + 1) * (m + 1)) * inf_norm(f) / (2 * lower);
}

Rational degree_bound_positive(const RatPoly &f, const Rational &lower) {
  const long d = f.degree(Var::X), m = f.degree(Var::Y);
  return Rational(d * d * d * (m + 1)) * inf_norm(f) / lower;
}

int bound_N_positive(const RatPoly &f, const FBulletBound &fb) {
  require_xy(f);
  const int d = f.degree(Var::X);
  if (d < 2)
    throw Error(ErrorCode::DegreeTooSmall, "deg_X f = " + std::to_string(d) + " < 2");
  if (fb.lower <= 0)
    throw Error(ErrorCode::NotPositive, "f-bullet lower bound must be positive");
  if (!no_root_in_01(leading_y_coefficient(f)))
    throw Error(ErrorCode::HypothesisViolated, "f is not fully m-ic on [0,1]");
  // least N with N + d > T
  Integer t = floor(polya_threshold(f, fb.lower));
  Integer n = t - d + 1;
  if (n < 0)
    n = 0;
  if (!n.fits_sint_p())
    throw Error(ErrorCode::InvalidBound, "Polya exponent bound does not fit in an int");
  return static_cast<int>(n.get_si());
}

namespace {

using Grid = std::vector<std::vector<Rational>>; // [x power][t power]

void taylor_shift(std::vector<Rational> &a, const Rational &c) {
  const int n = static_cast<int>(a.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j)
      a[static_cast<std::size_t>(j)] += c * a[static_cast<std::size_t>(j + 1)];
}

Grid shifted(const Grid &g, const Rational &cx, const Rational &ct) {
  Grid out = g;
  const std::size_t nx = g.size(), nt = g.empty() ? 0 : g[0].size();
  for (std::size_t j = 0; j < nt; ++j) {
    std::vector<Rational> col(nx);
    for (std::size_t i = 0; i < nx; ++i)
      col[i] = out[i][j];
    taylor_shift(col, cx);
    for (std::size_t i = 0; i < nx; ++i)
      out[i][j] = col[i];
  }
  for (auto &row : out)
    taylor_shift(row, ct);
  return out;
}

struct Box {
  Rational cx, ct, hx, ht;
  int depth;
};

} // namespace

std::optional<FBulletBound> certify_f_bullet(const RatPoly &f, int depth_cap, long box_budget) {
  require_xy(f);
  const int m = f.degree(Var::Y);
  if (m % 2 != 0 || !no_root_in_01(leading_y_coefficient(f)))
    return std::nullopt;
  const int d = f.degree(Var::X);

  // P(x, t) = f-bar(x, 2t, 1 - t^2); f-bar = P / (1 + t^2)^m on the half circle z >= 0,
  // which suffices because f-bar is even in (y, z).
  RatPoly fb = homogenize_bar(f, m);
  RatPoly two_t = RatPoly::var(Var::Y) * Rational(2);
  RatPoly one_minus = RatPoly(1) - RatPoly::var(Var::Y, 2);
  RatPoly z_sub = fb.substitute(Var::Z, RatPoly::var(Var::W));
  RatPoly P = z_sub.substitute(Var::Y, two_t).substitute(Var::W, one_minus);

  const int nt = 2 * m;
  Grid grid(static_cast<std::size_t>(d) + 1, std::vector<Rational>(static_cast<std::size_t>(nt) + 1));
  for (const auto &[mono, c] : P.terms())
    grid[static_cast<std::size_t>(mono[1])][static_cast<std::size_t>(mono[2])] = c;

  const Rational gap(1, 8);
  std::deque<Box> queue;
  queue.push_back({Rational(1, 2), Rational(0), Rational(1, 2), Rational(1), 0});
  std::optional<Rational> upper, lower;
  int max_depth = 0;
  long processed = 0;

  while (!queue.empty()) {
    Box b = queue.front();
    queue.pop_front();
    if (++processed > box_budget)
      return std::nullopt;
    max_depth = std::max(max_depth, b.depth);

    Grid c = shifted(grid, b.cx, b.ct);
    Rational lb = c[0][0];
    Rational hxp = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Rational htp = 1;
      for (std::size_t j = 0; j < c[i].size(); ++j) {
        if (i + j > 0)
          lb -= abs(c[i][j]) * hxp * htp;
        htp *= b.ht;
      }
      hxp *= b.hx;
    }
    Rational tmax = abs(b.ct) + b.ht;
    Rational den_max = 1, den_c = 1, bt = 1 + tmax * tmax, ct = 1 + b.ct * b.ct;
    for (int k = 0; k < m; ++k) {
      den_max *= bt;
      den_c *= ct;
    }
    Rational value = c[0][0] / den_c;
    if (!upper || value < *upper)
      upper = value;

    if (lb > 0) {
      Rational box_lb = lb / den_max;
      if (box_lb >= (1 - gap) * *upper) {
        if (!lower || box_lb < *lower)
          lower = box_lb;
        continue;
      }
    }
    if (*upper <= 0 || b.depth >= depth_cap)
      return std::nullopt;
    Rational qx = b.hx / 2, qt = b.ht / 2;
    for (int sx : {-1, 1})
      for (int st : {-1, 1})
        queue.push_back({b.cx + sx * qx, b.ct + st * qt, qx, qt, b.depth + 1});
  }
  if (!lower || *lower <= 0)
    return std::nullopt;
  FBulletBound out;
  out.lower = *lower;
  out.method = FBulletBound::Method::IntervalSubdivision;
  out.depth = max_depth;
  return out;
}

HypothesisReport check_hypotheses(const RatPoly &f) {
  require_xy(f);
  HypothesisReport r;
  const int m = f.degree(Var::Y);
  r.m_even = m % 2 == 0;
  r.fully_mic = no_root_in_01(leading_y_coefficient(f));

  RatPoly dfdx = f.diff(Var::X);
  for (int side : {0, 1}) {
    UPoly g = line(f, side);
    if (g.is_zero()) {
      r.boundary_line_vanishes = true;
      r.dfdX_nonzero_at_zeros = false;
      continue;
    }
    UPoly dg = line(dfdx, side);
    for (auto &w : isolate_real_roots(g)) {
      bool vanishes = dg.is_zero();
      if (!vanishes) {
        UPoly common = gcd(w.defining, dg);
        vanishes = common.degree() > 0 && count_roots_in(common, w.lo, w.hi) > 0;
      }
      if (vanishes)
        r.dfdX_nonzero_at_zeros = false;
      r.boundary_zeros.push_back({side, std::move(w)});
    }
  }

  // sampled, not certified
  RatPoly fb = homogenize_bar(f, std::max(m, 0));
  bool positive = true;
  const double pi = std::acos(-1.0);
  for (int i = 1; i < 32 && positive; ++i) {
    double x = i / 32.0;
    for (int k = 0; k < 128; ++k) {
      double th = pi * k / 128.0;
      if (fb.eval_double({0.0, x, std::cos(th), std::sin(th)}) <= 0) {
        positive = false;
        break;
      }
    }
  }
  r.interior_positive_sampled = positive;
  return r;
}

Rational polya_eps_threshold(int d, const Rational &norm_g, const Rational &lambda,
                             const Rational &eps) {
  if (lambda <= 0 || eps < 0 || eps >= 1)
    throw Error(ErrorCode::InvalidBound, "need lambda > 0 and 0 <= eps < 1");
  return Rational(static_cast<long>(d - 1) * d) * norm_g / (2 * (1 - eps) * lambda);
}

Rational polya_eps_coefficient_bound(int N, int d, int j, const Rational &eps,
                                     const Rational &lambda) {
  if (j < 0 || j > N + d)
    throw Error(ErrorCode::InvalidBound, "index out of range");
  Integer nf, jf, rest, pw;
  mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(N));
  mpz_fac_ui(jf.get_mpz_t(), static_cast<unsigned long>(j));
  mpz_fac_ui(rest.get_mpz_t(), static_cast<unsigned long>(N + d - j));
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(N + d), static_cast<unsigned long>(d));
  Rational r{Integer(nf * pw), Integer(jf * rest)};
  r.canonicalize();
  return r * eps * lambda;
}

std::string trace_csv(const std::vector<TraceRow> &trace) {
  std::ostringstream os;
  os << "N,status,failing_j\n";
  for (const auto &row : trace) {
    os << row.N << ',' << (row.ok ? "ok" : "fail") << ',';
    if (!row.ok)
      os << row.failing_j;
    os << '\n';
  }
  return os.str();
}

} // namespace stripcert
