#include "stripcert/pipeline.hpp"
#include "stripcert/quadstrip.hpp"

#include <cstdlib>
#include <sstream>

namespace stripcert {

namespace {

CertifyResult failure(ErrorCode code, std::string msg) {
  CertifyResult r;
  r.code = code;
  r.message = std::move(msg);
  return r;
}

CertifyResult success(Certificate c) {
  CertifyResult r;
  r.certificate = std::move(c);
  return r;
}

std::string point_text(const std::array<Rational, 2> &p) {
  return "(X, Y) = (" + to_string(p[0]) + ", " + to_string(p[1]) + ")";
}

Certificate run_degx01(const RatPoly &f, Mode mode) {
  return f.degree(Var::X) <= 0 ? assemble_degx0(f, mode) : assemble_degx1(f, mode);
}

Certificate run_quadratic(const RatPoly &f, Mode mode) {
  return assemble_quadratic(f, extract_rays(quad_form(f), mode), mode);
}

CertifyResult run_polya(const RatPoly &f, const RunConfig &cfg, bool gated) {
  const int m = f.degree(Var::Y);
  if (m % 2 != 0) {
    std::string msg = "deg_Y f = " + std::to_string(m) + " is odd, so f takes negative values";
    if (auto p = strip_negative_point(f))
      msg += " (at " + point_text(*p) + ")";
    return failure(ErrorCode::NotNonnegative, msg);
  }
  if (auto p = strip_negative_point(f))
    return failure(ErrorCode::NotNonnegative, "f < 0 at " + point_text(*p));
  HypothesisReport hyp = check_hypotheses(f);
  if (gated && !hyp.fully_mic) {
    CertifyResult r = failure(ErrorCode::HypothesisViolated,
                              "the leading Y coefficient vanishes on [0,1]; " + describe(hyp));
    r.hypotheses = hyp;
    return r;
  }
  PolyaSearch s = find_N_incremental(f, cfg.n_max);
  if (!s.found) {
    std::string msg = "no N <= " + std::to_string(cfg.n_max) + " makes every b_j nonnegative";
    if (!s.trace.empty())
      msg += " (at N = " + std::to_string(s.trace.back().N) + ", j = " +
             std::to_string(s.trace.back().failing_j) + " fails)";
    CertifyResult r = failure(ErrorCode::PolyaNotFound, msg);
    r.trace = std::move(s.trace);
    r.hypotheses = hyp;
    return r;
  }
  std::vector<UnivariateSos> sos;
  for (int j = 0; j < static_cast<int>(s.expansion.b.size()); ++j)
    sos.push_back(sos_univariate(s.expansion.dehomogenized(j), cfg.mode));
  CertifyResult r;
  r.certificate = assemble_from_polya(f, s.expansion, sos);
  if (cfg.mode == Mode::Numeric && r.certificate->mode == CertMode::Exact) {
    r.certificate->mode = CertMode::Numeric;
    finalize(*r.certificate);
  }
  r.trace = std::move(s.trace);
  r.hypotheses = hyp;
  return r;
}

} // namespace

std::optional<Route> parse_route(std::string_view s) {
  if (s == "auto")
    return Route::Auto;
  if (s == "polya")
    return Route::Polya;
  if (s == "quadratic")
    return Route::Quadratic;
  if (s == "degx01")
    return Route::DegX01;
  return std::nullopt;
}

int default_n_max() {
  if (const char *env = std::getenv("STRIPCERT_MAX_N")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 1'000'000)
      return static_cast<int>(v);
  }
  return kDefaultNMax;
}

std::optional<std::array<Rational, 2>> strip_negative_point(const RatPoly &f) {
  for (int den : {2, 4, 8, 16}) {
    for (int i = 0; i <= den; ++i) {
      const Rational x(i, den);
      if (den > 2 && i % 2 == 0)
        continue;
      UPoly g = f.substitute(Var::X, RatPoly(x)).to_univariate(Var::Y);
      if (auto y = negative_witness(g))
        return std::array<Rational, 2>{x, *y};
    }
  }
  return std::nullopt;
}

CertifyResult certify(const RatPoly &f, const RunConfig &cfg) {
  if (!f.uses_only(kXY))
    return failure(ErrorCode::InvalidTarget, "f must be a polynomial in X and Y");
  const int dx = f.degree(Var::X), dy = f.degree(Var::Y);
  try {
    switch (cfg.route) {
    case Route::DegX01:
      if (dx > 1)
        return failure(ErrorCode::InvalidTarget, "the degx01 pipeline needs deg_X f <= 1");
      return success(run_degx01(f, cfg.mode));
    case Route::Quadratic:
      if (dy > 2)
        return failure(ErrorCode::InvalidTarget, "the quadratic pipeline needs deg_Y f <= 2");
      return success(run_quadratic(f, cfg.mode));
    case Route::Polya:
      return run_polya(f, cfg, false);
    case Route::Auto:
      break;
    }
    if (dx <= 1)
      return success(run_degx01(f, cfg.mode));
    if (dy <= 2)
      return success(run_quadratic(f, cfg.mode));
    return run_polya(f, cfg, true);
  } catch (const Error &e) {
    std::string msg = e.what();
    if (e.code() == ErrorCode::NotNonnegative)
      if (auto p = strip_negative_point(f))
        msg += "; f < 0 at " + point_text(*p);
    return failure(e.code(), msg);
  }
}

std::string describe(const HypothesisReport &r) {
  std::ostringstream os;
  os << "fully m-ic: " << (r.fully_mic ? "yes" : "no") << "; m even: " << (r.m_even ? "yes" : "no")
     << "; boundary zeros: " << r.boundary_zeros.size();
  for (const auto &z : r.boundary_zeros)
    os << " [X = " << z.side << ", Y ~ " << Rational((z.root.lo + z.root.hi) / 2).get_d() << "]";
  if (r.boundary_line_vanishes)
    os << "; a boundary line vanishes identically";
  os << "; df/dX nonzero at boundary zeros: " << (r.dfdX_nonzero_at_zeros ? "yes" : "no")
     << "; interior positive (sampled): " << (r.interior_positive_sampled ? "yes" : "no");
  return os.str();
}

std::vector<BoundLine> bounds(const RatPoly &f, std::optional<Rational> f_bullet, int depth_cap) {
  std::vector<BoundLine> out;
  const int dx = f.degree(Var::X), dy = f.degree(Var::Y);

  BoundLine quad;
  quad.name = "quadratic certificate degree (deg_X f + 3)";
  if (dy <= 2) {
    quad.applicable = true;
    quad.value = std::to_string(std::max(dx, 0) + 3);
  } else {
    quad.reason = "deg_Y f = " + std::to_string(dy) + " > 2";
  }
  out.push_back(quad);

  BoundLine fb, deg, thr;
  fb.name = "f-bullet lower bound";
  deg.name = "certificate degree d^3 (m+1) ||f|| / f-bullet";
  thr.name = "Polya exponent N";
  std::string blocked;
  if (dy < 0 || dy % 2 != 0)
    blocked = "deg_Y f must be even and nonnegative";
  else if (dx < 2)
    blocked = "deg_X f = " + std::to_string(dx) + " < 2";
  else if (!check_hypotheses(f).fully_mic)
    blocked = "f is not fully m-ic (leading Y coefficient vanishes on [0,1])";

  std::optional<FBulletBound> lower;
  if (blocked.empty()) {
    if (f_bullet) {
      if (*f_bullet <= 0)
        blocked = "supplied f-bullet bound is not positive";
      else
        lower = FBulletBound{*f_bullet, FBulletBound::Method::UserSupplied, 0};
    } else {
      lower = certify_f_bullet(f, depth_cap);
      if (!lower)
        blocked = check_hypotheses(f).boundary_zeros.empty()
                      ? "f-bullet > 0 could not be certified within the subdivision depth"
                      : "f-bullet > 0 fails (f vanishes on a boundary line)";
    }
  }
  if (lower) {
    fb.applicable = deg.applicable = thr.applicable = true;
    fb.value = to_string(lower->lower) + (lower->method == FBulletBound::Method::UserSupplied
                                              ? " (supplied)"
                                              : " (certified, depth " +
                                                    std::to_string(lower->depth) + ")");
    const Rational db = degree_bound_positive(f, lower->lower);
    deg.value = to_string(db);
    if (db.get_den() != 1)
      deg.value += " (~ " + std::to_string(to_double(db)) + ")";
    thr.value = std::to_string(bound_N_positive(f, *lower));
  } else {
    fb.reason = deg.reason = thr.reason = blocked;
  }
  out.push_back(fb);
  out.push_back(deg);
  out.push_back(thr);
  return out;
}

} // namespace stripcert
