#include "stripcert/error.hpp"
#include "stripcert/poly_text.hpp"
#include "stripcert/polya.hpp"
#include "stripcert/sos.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace stripcert;
using namespace testing_support;

namespace {

const RatPoly X = RatPoly::var(Var::X), Y = RatPoly::var(Var::Y);

RatPoly total(const std::vector<WeightedSquare> &v) {
  RatPoly s;
  for (const auto &w : v)
    s += w.poly * w.poly * w.weight;
  return s;
}

void check_sos(const UPoly &p, const UnivariateSos &s) {
  for (const auto &q : s.squares) {
    CHECK(q.weight > 0);
    CHECK(2 * q.poly.degree() <= p.degree());
  }
  if (s.exact)
    CHECK(sum_of(s.squares) == p);
  else
    CHECK(max_abs_coeff(sum_of(s.squares) - p).get_d() <= 1e-8 * std::max(1.0, max_abs_coeff(p).get_d()));
}

void check_lukacs(const UPoly &r, const Lukacs01 &l) {
  const int n = r.degree();
  for (const auto &s : l.t)
    CHECK(2 * s.poly.degree() <= n);
  for (const auto &s : l.u)
    CHECK(2 * s.poly.degree() + 1 <= n);
  for (const auto &s : l.v)
    CHECK(2 * s.poly.degree() + 1 <= n);
  for (const auto &s : l.w)
    CHECK(2 * s.poly.degree() + 2 <= n);
  if (l.exact)
    CHECK(recombine(l) == r);
  else
    CHECK(max_abs_coeff(recombine(l) - r).get_d() <= 1e-8 * std::max(1.0, max_abs_coeff(r).get_d()));
}

} // namespace

TEST_CASE("univariate sums of squares") {
  for (const UPoly &p : {upoly({2, 0, -2, 0, 1}), upoly({0, 0, 1}), upoly({1, 0, 3, 0, 0, 0, 1}),
                         upoly({1, 1, 0, 0, 1}), upoly({1, -2, 2}), upoly({4}),
                         UPoly::linear_root(Rational(1, 3)).pow(2) * upoly({1, 0, 1}) * Rational(3),
                         upoly({2, 0, 1}).pow(3)}) {
    UnivariateSos s = sos_univariate(p, Mode::Auto);
    check_sos(p, s);
    CHECK(s.exact);
  }
  UnivariateSos s = sos_univariate(upoly({2, 0, -2, 0, 1}), Mode::Exact);
  CHECK(sum_of(s.squares) == upoly({2, 0, -2, 0, 1}));
  CHECK(sos_univariate(UPoly(), Mode::Auto).squares.empty());
}

TEST_CASE("forced numeric splitting stays within tolerance") {
  UPoly p = upoly({1, 0, 3, 0, 0, 0, 1});
  UnivariateSos s = sos_univariate(p, Mode::Numeric);
  CHECK_FALSE(s.exact);
  check_sos(p, s);
  UPoly q = upoly({7, -3, 1, 5, 2}) * upoly({7, -3, 1, 5, 2}) + upoly({1, 0, 1});
  check_sos(q, sos_univariate(q, Mode::Numeric));
}

TEST_CASE("negative input is rejected with a witness") {
  try {
    sos_univariate(upoly({-1, 0, 1}), Mode::Auto);
    FAIL("accepted a negative polynomial");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotNonnegative);
    CHECK(std::string(e.what()).find("at Y =") != std::string::npos);
  }
  CHECK_THROWS_AS(lukacs_01(upoly({-1, 3}), Mode::Auto), Error);
}

TEST_CASE("Lukacs decomposition on [0,1]") {
  Lukacs01 x = lukacs_01(upoly({0, 1}), Mode::Auto);
  check_lukacs(upoly({0, 1}), x);
  CHECK(x.exact);
  Lukacs01 b = lukacs_01(upoly({0, 1, -1}), Mode::Auto);
  CHECK(b.t.empty());
  CHECK(b.u.empty());
  CHECK(b.v.empty());
  REQUIRE(b.w.size() == 1);
  CHECK(b.w[0].poly.degree() == 0);
  for (const UPoly &r :
       {upoly({1, -2, 2}), upoly({1, 0, 0, 1}), UPoly::linear_root(Rational(1, 2)).pow(2) * upoly({1, 1}) * upoly({2, -1}),
        upoly({0, 0, 1}) * upoly({1, -1}).pow(3) * upoly({1, -1, 1}), upoly({3}), upoly({1, -1})}) {
    Lukacs01 l = lukacs_01(r, Mode::Auto);
    CHECK(l.exact);
    check_lukacs(r, l);
  }
  // root-pairing oracle: (X - 1/2)^2 + 1/4 = 2X^2 - 2X + 1 up to scale
  UPoly r = upoly({1, -2, 2});
  check_lukacs(r, lukacs_01(r, Mode::Numeric));
}

TEST_CASE("boundary line construction") {
  RatPoly f = parse_poly("X*Y^2 + (1 - X)");
  Certificate c = assemble_degx1(f, Mode::Auto);
  CHECK(c.mode == CertMode::Exact);
  CHECK(total(c.sigma0) == X * X * Y * Y + (RatPoly(1) - X).pow(2));
  CHECK(total(c.sigma1) == Y * Y + RatPoly(1));
  CHECK(defect(c).is_zero());
  CHECK(c.degrees == std::array<int, 2>{4, 4});
  CHECK(verify(c).ok);

  Certificate g = assemble_degx1(parse_poly("X*(Y - 1)^2 + (1 - X)*(Y + 1)^2"), Mode::Auto);
  CHECK(verify(g).ok);
  CHECK(g.degrees[0] <= 4);
  CHECK(g.degrees[1] <= 4);

  Certificate h = assemble_degx0(parse_poly("Y^2"), Mode::Auto);
  REQUIRE(h.sigma0.size() == 1);
  CHECK(h.sigma1.empty());
  CHECK(h.degrees == std::array<int, 2>{2, -1});
  CHECK(verify(h).ok);

  CHECK_THROWS_AS(assemble_degx1(parse_poly("X*Y^2 - 1"), Mode::Auto), Error);
}

TEST_CASE("assembly from the Polya expansion") {
  auto build = [](const RatPoly &f) {
    PolyaSearch s = find_N_incremental(f, 20);
    REQUIRE(s.found);
    std::vector<UnivariateSos> sos;
    for (int j = 0; j < static_cast<int>(s.expansion.b.size()); ++j)
      sos.push_back(sos_univariate(s.expansion.dehomogenized(j), Mode::Auto));
    return assemble_from_polya(f, s.expansion, sos);
  };
  Certificate one = build(RatPoly(1));
  CHECK(total(one.sigma0) == RatPoly(1));
  CHECK(one.sigma1.empty());

  Certificate b = build(X - X * X);
  CHECK(b.sigma0.empty());
  CHECK(total(b.sigma1) == RatPoly(1));

  for (const char *text : {"(Y^2 - X)^2 + 1", "(X^2 - X + 3/10)*(Y^2 + 1)", "Y^4 + X*Y^2 + 1",
                           "X^3*Y^2 + (1 - X)^3 + Y^4"}) {
    RatPoly f = parse_poly(text);
    Certificate c = build(f);
    auto rep = verify(c);
    CHECK_MESSAGE(rep.ok, std::string(text));
    const int bound = *c.N + f.degree(Var::X) + f.degree(Var::Y) + 1;
    CHECK(c.degrees[0] <= bound);
    CHECK(c.degrees[1] <= bound);
  }

  PolyaExpansion e = expand(RatPoly(1), 0);
  CHECK_THROWS_AS(assemble_from_polya(RatPoly(1), e, {}), Error);
}

TEST_CASE("verification catches tampering") {
  Certificate c = assemble_degx1(parse_poly("X*Y^2 + (1 - X)"), Mode::Auto);
  VerificationReport ok = verify(c);
  CHECK(ok.ok);
  CHECK(ok.residual == 0);
  for (const auto &ch : ok.checks)
    CHECK(ch.passed);

  Certificate neg = c;
  neg.sigma0[0].weight = -neg.sigma0[0].weight;
  VerificationReport r = verify(neg);
  CHECK_FALSE(r.ok);
  bool weight_check_failed = false;
  for (const auto &ch : r.checks)
    if (ch.name == "weights_positive")
      weight_check_failed = !ch.passed;
  CHECK(weight_check_failed);

  Certificate dropped = c;
  dropped.sigma1.pop_back();
  CHECK_FALSE(verify(dropped).ok);

  Certificate wrong_degrees = c;
  wrong_degrees.degrees = {2, 4};
  CHECK_FALSE(verify(wrong_degrees).ok);

  Certificate numeric = c;
  numeric.mode = CertMode::Numeric;
  numeric.sigma1[0].weight += Rational(1, 1000000000000);
  CHECK(verify(numeric).ok); // 1e-12 is inside the tolerance
  numeric.sigma1[0].weight += Rational(1, 1000);
  CHECK_FALSE(verify(numeric).ok);
}

TEST_CASE("mode names") {
  CHECK(to_string(Pipeline::DegX1) == "degx1");
  CHECK(parse_pipeline("quadratic") == Pipeline::Quadratic);
  CHECK_FALSE(parse_pipeline("bogus"));
  CHECK(parse_mode("auto") == Mode::Auto);
  CHECK(parse_cert_mode("numeric") == CertMode::Numeric);
}
