#include "stripcert/error.hpp"
#include "stripcert/poly_text.hpp"
#include "stripcert/rat_poly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace stripcert;
using namespace testing_support;

namespace {

const RatPoly X = RatPoly::var(Var::X), Y = RatPoly::var(Var::Y), Z = RatPoly::var(Var::Z),
              W = RatPoly::var(Var::W);

ErrorCode code_of(const char *text) {
  try {
    parse_poly(text);
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

} // namespace

TEST_CASE("parse the textbook inputs") {
  RatPoly ex = parse_poly("Y^4 - 2*X*Y^2 + 2*X^2");
  CHECK(ex == (Y * Y - X).pow(2) + X * X);
  CHECK(parse_poly("1/3") == RatPoly(Rational(1, 3)));
  CHECK(parse_poly("X*(1 - X)") == X - X * X);
  CHECK(parse_poly("  ( Y^2 -X ) ^2+ 1") == (Y * Y - X).pow(2) + RatPoly(1));
  CHECK(parse_poly("-X*-Y") == X * Y);
  CHECK(parse_poly("X/2") == X * Rational(1, 2));
}

TEST_CASE("decimal literals are exact") {
  CHECK(parse_poly("0.25*X") == X * Rational(1, 4));
  CHECK(parse_poly("1.5e-3") == RatPoly(Rational(3, 2000)));
  CHECK(parse_poly("007") == RatPoly(7));
  CHECK(parse_poly("010/3") == RatPoly(Rational(10, 3)));
  CHECK(parse_rational("0.3779644730092272") == Rational("236227795630767/625000000000000"));
  CHECK(to_double(parse_rational("1.4142135623730949")) == 1.4142135623730949);
  CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
}

TEST_CASE("parse errors") {
  CHECK(code_of("X^") == ErrorCode::SyntaxError);
  CHECK(code_of("X + * Y") == ErrorCode::SyntaxError);
  CHECK(code_of("(X + Y") == ErrorCode::SyntaxError);
  CHECK(code_of("X/0") == ErrorCode::SyntaxError);
  CHECK(code_of("X/Y") == ErrorCode::SyntaxError);
  CHECK(code_of("X*T") == ErrorCode::UnknownVariable);
  CHECK(code_of("Z") == ErrorCode::UnknownVariable);
  try {
    parse_poly("X + ");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("print and parse round trip") {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    RatPoly f;
    const int terms = rand_int(rng, 0, 6);
    for (int k = 0; k < terms; ++k)
      f.add_term({0, rand_int(rng, 0, 4), rand_int(rng, 0, 4), 0}, rand_rational(rng, 9, 7));
    CHECK(parse_poly(to_string(f)) == f);
  }
  CHECK(to_string(RatPoly()) == "0");
  CHECK(to_string(X * X * Y - Y * Rational(1, 2) + RatPoly(3)) == "X^2*Y - 1/2*Y + 3");
}

TEST_CASE("ring laws and evaluation") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    RatPoly a = rand_poly(rng, 2, 2), b = rand_poly(rng, 1, 3), c = rand_poly(rng, 2, 1);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == RatPoly());
    std::array<Rational, 4> pt{0, rand_rational(rng), rand_rational(rng), 0};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("degrees, coefficients and substitution") {
  RatPoly f = parse_poly("3*X^2*Y^4 - X*Y + 5");
  CHECK(f.degree(Var::X) == 2);
  CHECK(f.degree(Var::Y) == 4);
  CHECK(f.total_degree() == 6);
  CHECK(RatPoly().degree(Var::X) == -1);
  CHECK(f.coeff_in(Var::Y, 4) == X * X * Rational(3));
  CHECK(f.substitute(Var::X, RatPoly(1)) == parse_poly("3*Y^4 - Y + 5"));
  CHECK(f.diff(Var::Y) == parse_poly("12*X^2*Y^3 - X"));
  CHECK(inf_norm(f) == 5);
}

TEST_CASE("homogenization and the double lift") {
  RatPoly f = parse_poly("(Y^2 - X)^2 + 1");
  RatPoly fb = homogenize_bar(f, 4);
  CHECK(fb == (Y * Y - X * Z * Z).pow(2) + Z.pow(4));
  int deg = 0;
  CHECK(fb.is_homogeneous_in(Var::Y, Var::Z, &deg));
  CHECK(deg == 4);

  // F(1 - X, X, Y, Z) is f-bar, and F is bihomogeneous of degree (d, m)
  std::mt19937 rng(3);
  for (int it = 0; it < 25; ++it) {
    RatPoly g = rand_poly(rng, rand_int(rng, 0, 3), 2 * rand_int(rng, 0, 2));
    if (g.is_zero())
      continue;
    RatPoly F = lift_F(g);
    const int m = g.degree(Var::Y);
    CHECK(F.substitute(Var::W, RatPoly(1) - X) == homogenize_bar(g, m));
    int dwx = -2, dyz = -2;
    CHECK(F.is_homogeneous_in(Var::W, Var::X, &dwx));
    CHECK(F.is_homogeneous_in(Var::Y, Var::Z, &dyz));
    CHECK(dwx == g.degree(Var::X));
    CHECK(dyz == m);
  }
  CHECK(lift_F(X * Y * Y) == X * Y * Y);
  CHECK(lift_F(RatPoly(1) - X) == W);
}

TEST_CASE("univariate helpers") {
  UPoly p = upoly({-1, 0, 1}); // X^2 - 1
  UPoly q = upoly({1, 1});
  CHECK(gcd(p, q) == q);
  CHECK(exact_div(p, q) == upoly({-1, 1}));
  CHECK(reflect01(upoly({0, 1})) == upoly({1, -1}));
  UPoly r = upoly({2, -3, 5, 1});
  std::vector<Rational> b = bernstein_coefficients(r, 4);
  UPoly back;
  for (int k = 0; k <= 4; ++k)
    back += bernstein_basis(4, k) * b[static_cast<std::size_t>(k)];
  CHECK(back == r);
  CHECK(endpoint_power(1, 1) == upoly({0, 1, -1}));
  CHECK(binomial(10, 3) == 120);
}
