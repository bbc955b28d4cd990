#include "stripcert/sos.hpp"
#include "stripcert/error.hpp"
#include "stripcert/numeric_roots.hpp"
#include "stripcert/realroots.hpp"

#include <algorithm>
#include <sstream>

namespace stripcert {

std::string_view to_string(Mode m) {
  switch (m) {
  case Mode::Exact: return "exact";
  case Mode::Numeric: return "numeric";
  case Mode::Auto: return "auto";
  }
  return "auto";
}

std::string_view to_string(CertMode m) { return m == CertMode::Exact ? "exact" : "numeric"; }

std::string_view to_string(Pipeline p) {
  switch (p) {
  case Pipeline::Polya: return "polya";
  case Pipeline::Quadratic: return "quadratic";
  case Pipeline::DegX0: return "degx0";
  case Pipeline::DegX1: return "degx1";
  }
  return "polya";
}

std::optional<Mode> parse_mode(std::string_view s) {
  for (Mode m : {Mode::Exact, Mode::Numeric, Mode::Auto})
    if (to_string(m) == s)
      return m;
  return std::nullopt;
}

std::optional<CertMode> parse_cert_mode(std::string_view s) {
  if (s == "exact")
    return CertMode::Exact;
  if (s == "numeric")
    return CertMode::Numeric;
  return std::nullopt;
}

std::optional<Pipeline> parse_pipeline(std::string_view s) {
  for (Pipeline p : {Pipeline::Polya, Pipeline::Quadratic, Pipeline::DegX0, Pipeline::DegX1})
    if (to_string(p) == s)
      return p;
  return std::nullopt;
}

UPoly sum_of(const std::vector<USquare> &squares) {
  UPoly s;
  for (const auto &q : squares)
    s += q.poly * q.poly * q.weight;
  return s;
}

UPoly recombine(const Lukacs01 &l) {
  const UPoly x = UPoly::monomial(1), omx{Rational(1), Rational(-1)};
  return sum_of(l.t) + x * sum_of(l.u) + omx * sum_of(l.v) + x * omx * sum_of(l.w);
}

namespace {

using Squares = std::vector<USquare>;

// p = g^2 h with h free of real roots when p >= 0 on R.
struct SquareSplit {
  UPoly g, h;
};

SquareSplit split_square(const UPoly &p) {
  SquarefreeDecomposition sd = squarefree_decompose(p);
  UPoly g = UPoly::constant(1), h = UPoly::constant(sd.content);
  for (const auto &[factor, mult] : sd.factors) {
    g *= factor.pow(mult / 2);
    if (mult % 2)
      h *= factor;
  }
  return {g, h};
}

Squares scaled(Squares s, const UPoly &g) {
  for (auto &q : s)
    q.poly = q.poly * g;
  return s;
}

using CPoly = std::vector<Complex>;

// Monic product of (Y - z) over the k roots with the largest imaginary part.
std::optional<CPoly> upper_half_factor(const UPoly &h) {
  const int k = h.degree() / 2;
  std::vector<Complex> roots = complex_roots(h);
  std::sort(roots.begin(), roots.end(),
            [](const Complex &a, const Complex &b) { return a.imag() > b.imag(); });
  CPoly q{Complex(1)};
  for (int i = 0; i < k; ++i) {
    if (!(roots[static_cast<std::size_t>(i)].imag() > 0))
      return std::nullopt;
    CPoly next(q.size() + 1, Complex(0));
    for (std::size_t a = 0; a < q.size(); ++a) {
      next[a + 1] += q[a];
      next[a] -= q[a] * roots[static_cast<std::size_t>(i)];
    }
    q = std::move(next);
  }
  return q;
}

std::pair<UPoly, UPoly> real_imag(const CPoly &q) {
  std::vector<Rational> re, im;
  for (const auto &c : q) {
    re.push_back(from_long_double(c.real()));
    im.push_back(from_long_double(c.imag()));
  }
  return {UPoly(std::move(re)), UPoly(std::move(im))};
}

std::optional<Squares> exact_sos(const UPoly &p, int depth);

// h = lc q^2 + rem with q monic and deg rem < deg q.
std::optional<Squares> by_completion(const UPoly &h, int depth) {
  const int k = h.degree() / 2;
  const Rational lc = h.lead();
  std::vector<Rational> q(static_cast<std::size_t>(k) + 1);
  q[static_cast<std::size_t>(k)] = 1;
  for (int i = 1; i <= k; ++i) {
    Rational target = h[2 * k - i] / lc;
    for (int a = 1; a < i; ++a)
      target -= q[static_cast<std::size_t>(k - a)] * q[static_cast<std::size_t>(k - i + a)];
    q[static_cast<std::size_t>(k - i)] = target / 2;
  }
  UPoly qp(std::move(q));
  UPoly rem = h - qp * qp * lc;
  Squares out{{lc, qp}};
  if (rem.is_zero())
    return out;
  if (depth > 8 || !is_nonneg_on_R(rem))
    return std::nullopt;
  auto more = exact_sos(rem, depth + 1);
  if (!more)
    return std::nullopt;
  out.insert(out.end(), more->begin(), more->end());
  return out;
}

// Clears odd coefficients with (|c|/2)(Y^(i+1) +- Y^i)^2, then the even
// coefficients must be nonnegative.
std::optional<Squares> absorb(const UPoly &R, Squares out) {
  const int n = std::max(R.degree(), 0);
  std::vector<Rational> r(static_cast<std::size_t>(n) + 2);
  for (int i = 0; i <= R.degree(); ++i)
    r[static_cast<std::size_t>(i)] = R[i];
  for (int i = 0; 2 * i + 1 <= n; ++i) {
    const Rational c = r[static_cast<std::size_t>(2 * i + 1)];
    if (c == 0)
      continue;
    const Rational half = abs(c) / 2;
    out.push_back({half, UPoly::monomial(i + 1) + UPoly::monomial(i, Rational(sign(c)))});
    r[static_cast<std::size_t>(2 * i)] -= half;
    r[static_cast<std::size_t>(2 * i + 2)] -= half;
    r[static_cast<std::size_t>(2 * i + 1)] = 0;
  }
  for (int i = 0; 2 * i <= n + 1; ++i) {
    const Rational &c = r[static_cast<std::size_t>(2 * i)];
    if (c < 0)
      return std::nullopt;
    if (c > 0)
      out.push_back({c, UPoly::monomial(i)});
  }
  return out;
}

// Strictly positive h: perturb by eps * sum Y^(2i), factor numerically,
// round, and absorb the exact remainder.
std::optional<Squares> by_rounding(const UPoly &h) {
  const int k = h.degree() / 2;
  const Rational lc = h.lead();
  UPoly t;
  for (int i = 0; i <= k; ++i)
    t += UPoly::monomial(2 * i);
  int tries = 0;
  Rational eps = lc;
  for (int j = 1; j <= 80 && tries < 8; ++j) {
    eps /= 2;
    UPoly he = h - t * eps;
    if (!is_positive_on_R(he))
      continue;
    ++tries;
    auto q = upper_half_factor(he);
    if (!q)
      continue;
    auto [s1, s2] = real_imag(*q);
    const Rational w = lc - eps;
    Squares out;
    out.push_back({w, s1});
    if (!s2.is_zero())
      out.push_back({w, s2});
    UPoly R = h - sum_of(out);
    if (R.degree() > 2 * k)
      continue;
    auto done = absorb(R, std::move(out));
    if (done && sum_of(*done) == h)
      return done;
  }
  return std::nullopt;
}

std::optional<Squares> exact_positive(const UPoly &h, int depth) {
  if (h.degree() <= 0)
    return Squares{{h[0], UPoly::constant(1)}};
  if (auto r = by_completion(h, depth))
    return r;
  return by_rounding(h);
}

std::optional<Squares> exact_sos(const UPoly &p, int depth) {
  if (p.is_zero())
    return Squares{};
  SquareSplit s = split_square(p);
  auto pos = exact_positive(s.h, depth);
  if (!pos)
    return std::nullopt;
  return scaled(std::move(*pos), s.g);
}

UnivariateSos numeric_sos(const UPoly &p) {
  if (p.is_zero())
    return {{}, true};
  SquareSplit s = split_square(p);
  if (s.h.degree() <= 0)
    return {scaled({{s.h[0], UPoly::constant(1)}}, s.g), true};
  auto q = upper_half_factor(s.h);
  if (!q)
    throw Error(ErrorCode::InternalInvariant, "root finder placed a root on the real axis");
  auto [s1, s2] = real_imag(*q);
  Squares out{{s.h.lead(), s1}};
  if (!s2.is_zero())
    out.push_back({s.h.lead(), s2});
  return {scaled(std::move(out), s.g), false};
}

} // namespace

UnivariateSos sos_univariate(const UPoly &p, Mode mode) {
  if (!is_nonneg_on_R(p)) {
    std::string msg = "polynomial " + to_string(p, 'Y') + " is negative somewhere on R";
    if (auto w = negative_witness(p))
      msg += " (at Y = " + to_string(*w) + ")";
    throw Error(ErrorCode::NotNonnegative, msg);
  }
  if (mode != Mode::Numeric) {
    if (auto s = exact_sos(p, 0))
      return {std::move(*s), true};
    if (mode == Mode::Exact)
      throw Error(ErrorCode::ExactUnavailable,
                  "no exact rational SOS found for " + to_string(p, 'Y'));
  }
  return numeric_sos(p);
}

// Positive part h on [0,1]: substitute X = S/(1+S), write P(s^2) as a sum of
// squares in s, split each square into even and odd parts and map back.
Lukacs01 lukacs_01(const UPoly &r, Mode mode) {
  Lukacs01 out;
  if (r.is_zero())
    return out;
  if (!is_nonneg_on_01(r)) {
    std::string msg = "polynomial " + to_string(r) + " is negative somewhere on [0,1]";
    if (auto w = negative_witness_01(r))
      msg += " (at X = " + to_string(*w) + ")";
    throw Error(ErrorCode::NotNonnegativeOn01, msg);
  }
  const UPoly x = UPoly::monomial(1), omx{Rational(1), Rational(-1)};
  UPoly rest = r;
  int a = 0, b = 0;
  while (rest(Rational(0)) == 0) {
    rest = exact_div(rest, x);
    ++a;
  }
  while (rest(Rational(1)) == 0) {
    rest = exact_div(rest, omx);
    ++b;
  }
  SquareSplit s = split_square(rest);

  struct Piece {
    Rational w;
    UPoly q;
    int alpha, beta; // extra X^alpha (1-X)^beta
  };
  std::vector<Piece> pieces;
  const int D = s.h.degree();
  if (D <= 0) {
    pieces.push_back({s.h[0], UPoly::constant(1), 0, 0});
  } else {
    UPoly P, one_plus{Rational(1), Rational(1)};
    for (int k = 0; k <= D; ++k)
      P += UPoly::monomial(k, s.h[k]) * one_plus.pow(D - k);
    UnivariateSos inner = sos_univariate(P.compose(UPoly::monomial(2)), mode);
    out.exact = inner.exact;
    const int ae = D / 2, bo = (D - 1) / 2;
    for (const auto &sq : inner.squares) {
      UPoly E, O;
      for (int i = 0; i <= sq.poly.degree(); ++i) {
        const int l = i / 2;
        if (i % 2 == 0)
          E += endpoint_power(l, ae - l) * sq.poly[i];
        else
          O += endpoint_power(l, bo - l) * sq.poly[i];
      }
      if (!E.is_zero())
        pieces.push_back({sq.weight, E, 0, D - 2 * ae});
      if (!O.is_zero())
        pieces.push_back({sq.weight, O, 1, D - 1 - 2 * bo});
    }
  }
  for (const auto &pc : pieces) {
    const int A = pc.alpha + a, B = pc.beta + b;
    USquare sq{pc.w, pc.q * s.g * endpoint_power(A / 2, B / 2)};
    auto &dest = (A % 2 == 0) ? (B % 2 == 0 ? out.t : out.v) : (B % 2 == 0 ? out.u : out.w);
    dest.push_back(std::move(sq));
  }
  if (out.exact && recombine(out) != r)
    throw Error(ErrorCode::InternalInvariant, "interval decomposition does not recombine");
  return out;
}

namespace {

RatPoly in_y(const UPoly &q) { return RatPoly::from_univariate(q, Var::Y); }
RatPoly in_x(const UPoly &q) { return RatPoly::from_univariate(q, Var::X); }

void push_scaled(std::vector<WeightedSquare> &dst, const UnivariateSos &s, const RatPoly &mult) {
  for (const auto &q : s.squares)
    dst.push_back({q.weight, in_y(q.poly) * mult});
}

int square_degree(const WeightedSquare &s) {
  return s.poly.is_zero() ? -1 : 2 * s.poly.total_degree();
}

} // namespace

Certificate assemble_from_polya(const RatPoly &f, const PolyaExpansion &e,
                                const std::vector<UnivariateSos> &sos) {
  if (sos.size() != e.b.size())
    throw Error(ErrorCode::InternalInvariant, "one SOS list per Polya coefficient required");
  Certificate c;
  c.f = f;
  c.pipeline = Pipeline::Polya;
  c.N = e.N;
  bool exact = true;
  const int n = e.N + e.d;
  for (int j = 0; j <= n; ++j) {
    const UnivariateSos &s = sos[static_cast<std::size_t>(j)];
    exact = exact && s.exact;
    if (n % 2 == 0) {
      if (j % 2 == 0)
        push_scaled(c.sigma0, s, in_x(endpoint_power((n - j) / 2, j / 2)));
      else
        push_scaled(c.sigma1, s, in_x(endpoint_power((n - j - 1) / 2, (j - 1) / 2)));
    } else if (j % 2 == 0) {
      // X = X^2 + X(1-X)
      push_scaled(c.sigma0, s, in_x(endpoint_power((n - j + 1) / 2, j / 2)));
      push_scaled(c.sigma1, s, in_x(endpoint_power((n - j - 1) / 2, j / 2)));
    } else {
      // 1-X = (1-X)^2 + X(1-X)
      push_scaled(c.sigma0, s, in_x(endpoint_power((n - j) / 2, (j + 1) / 2)));
      push_scaled(c.sigma1, s, in_x(endpoint_power((n - j) / 2, (j - 1) / 2)));
    }
  }
  c.mode = exact ? CertMode::Exact : CertMode::Numeric;
  finalize(c);
  return c;
}

Certificate assemble_degx1(const RatPoly &f, Mode mode) {
  if (!f.uses_only(kXY) || f.degree(Var::X) > 1)
    throw Error(ErrorCode::InvalidTarget, "expected deg_X f <= 1");
  auto line = [&](int side) {
    return f.substitute(Var::X, RatPoly(Rational(side))).to_univariate(Var::Y);
  };
  UnivariateSos s1 = sos_univariate(line(1), mode), s0 = sos_univariate(line(0), mode);
  Certificate c;
  c.f = f;
  c.pipeline = Pipeline::DegX1;
  const RatPoly x = RatPoly::var(Var::X), omx = RatPoly(1) - x;
  // f = f(1,Y) X + f(0,Y) (1-X), X = X^2 + X(1-X), 1-X = (1-X)^2 + X(1-X)
  push_scaled(c.sigma0, s1, x);
  push_scaled(c.sigma0, s0, omx);
  push_scaled(c.sigma1, s1, RatPoly(1));
  push_scaled(c.sigma1, s0, RatPoly(1));
  c.mode = (s1.exact && s0.exact && mode != Mode::Numeric) ? CertMode::Exact : CertMode::Numeric;
  finalize(c);
  return c;
}

Certificate assemble_degx0(const RatPoly &f, Mode mode) {
  if (!f.uses_only(kXY) || f.degree(Var::X) > 0)
    throw Error(ErrorCode::InvalidTarget, "expected a polynomial in Y only");
  UnivariateSos s = sos_univariate(f.to_univariate(Var::Y), mode);
  Certificate c;
  c.f = f;
  c.pipeline = Pipeline::DegX0;
  push_scaled(c.sigma0, s, RatPoly(1));
  c.mode = (s.exact && mode != Mode::Numeric) ? CertMode::Exact : CertMode::Numeric;
  finalize(c);
  return c;
}

RatPoly defect(const Certificate &c) {
  RatPoly s0, s1;
  for (const auto &s : c.sigma0)
    s0 += s.poly * s.poly * s.weight;
  for (const auto &s : c.sigma1)
    s1 += s.poly * s.poly * s.weight;
  const RatPoly x = RatPoly::var(Var::X);
  return c.f - s0 - s1 * (x - x * x);
}

std::optional<int> degree_bound(const Certificate &c) {
  const int d = std::max(c.f.degree(Var::X), 0), m = std::max(c.f.degree(Var::Y), 0);
  switch (c.pipeline) {
  case Pipeline::Polya:
    if (!c.N)
      return std::nullopt;
    return *c.N + d + m + 1;
  case Pipeline::Quadratic: return d + 3;
  case Pipeline::DegX1: return m + 2;
  case Pipeline::DegX0: return m;
  }
  return std::nullopt;
}

namespace {

std::array<int, 2> compute_degrees(const Certificate &c) {
  std::array<int, 2> d{-1, -1};
  for (const auto &s : c.sigma0)
    d[0] = std::max(d[0], square_degree(s));
  for (const auto &s : c.sigma1)
    if (!s.poly.is_zero())
      d[1] = std::max(d[1], square_degree(s) + 2);
  return d;
}

} // namespace

void finalize(Certificate &c) {
  if (c.mode == CertMode::Numeric) {
    // numeric data is stored as the doubles it will be written out as
    auto round = [](std::vector<WeightedSquare> &v) {
      for (auto &s : v) {
        s.weight = from_double(to_double(s.weight));
        RatPoly p;
        for (const auto &[m, a] : s.poly.terms())
          p.add_term(m, from_double(to_double(a)));
        s.poly = p;
      }
      std::erase_if(v, [](const WeightedSquare &s) { return s.weight <= 0 || s.poly.is_zero(); });
    };
    round(c.sigma0);
    round(c.sigma1);
  }
  c.degrees = compute_degrees(c);
  c.residual = defect(c).max_abs_coeff().get_d();
}

VerificationReport verify(const Certificate &c, double tol) {
  VerificationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
    rep.ok = rep.ok && ok;
  };

  bool vars_ok = c.f.uses_only(kXY);
  for (const auto *list : {&c.sigma0, &c.sigma1})
    for (const auto &s : *list)
      vars_ok = vars_ok && s.poly.uses_only(kXY);
  add("variables", vars_ok, vars_ok ? "X, Y only" : "a polynomial uses variables other than X, Y");

  RatPoly def = defect(c);
  rep.residual = def.max_abs_coeff().get_d();
  if (c.mode == CertMode::Exact) {
    add("identity", def.is_zero(),
        def.is_zero() ? "exact defect is zero"
                      : "defect has " + std::to_string(def.size()) + " nonzero terms");
  } else {
    const double scale = std::max(1.0, inf_norm(c.f).get_d());
    std::ostringstream os;
    os.precision(3);
    os << "residual " << rep.residual << ", allowed " << tol * scale;
    add("identity", rep.residual <= tol * scale, os.str());
  }

  std::string bad;
  int idx = 0;
  for (const auto *list : {&c.sigma0, &c.sigma1}) {
    const char *nm = list == &c.sigma0 ? "sigma0" : "sigma1";
    idx = 0;
    for (const auto &s : *list) {
      if (s.weight <= 0 && bad.empty())
        bad = std::string(nm) + "[" + std::to_string(idx) + "] has weight " + to_string(s.weight);
      ++idx;
    }
  }
  add("weights_positive", bad.empty(), bad.empty() ? "all weights > 0" : bad);

  std::array<int, 2> deg = compute_degrees(c);
  std::optional<int> bound = degree_bound(c);
  const bool within = bound && deg[0] <= *bound && deg[1] <= *bound;
  add("degree_bound", within,
      bound ? "degrees (" + std::to_string(deg[0]) + ", " + std::to_string(deg[1]) + ") vs bound " +
                  std::to_string(*bound)
            : "no bound: Polya exponent missing");
  add("degrees_field", deg == c.degrees,
      "recorded (" + std::to_string(c.degrees[0]) + ", " + std::to_string(c.degrees[1]) + ")");
  return rep;
}

} // namespace stripcert
