#include "stripcert/error.hpp"
#include "stripcert/poly_text.hpp"
#include "stripcert/quadstrip.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace stripcert;
using namespace testing_support;

namespace {

bool same(const QuadForm &a, const QuadForm &b) {
  return a.f2 == b.f2 && a.f1 == b.f1 && a.f0 == b.f0;
}

Certificate run(const RatPoly &f, Mode mode = Mode::Auto) {
  return assemble_quadratic(f, extract_rays(quad_form(f), mode), mode);
}

} // namespace

TEST_CASE("forms and membership") {
  QuadForm q = quad_form(parse_poly("(X*Y - 1)^2"));
  CHECK(q.d == 2);
  CHECK(q.e == 2);
  CHECK(q.f2 == upoly({0, 0, 1}));
  CHECK(q.f1 == upoly({0, -2}));
  CHECK(q.f0 == upoly({1}));
  CHECK(discriminant(q).is_zero());
  CHECK(membership_check(q));
  CHECK_FALSE(strictly_positive(q));
  CHECK(within_caps(q));

  QuadForm bad = quad_form(parse_poly("Y^2 - 3*X*Y + 1"));
  CHECK_FALSE(membership_check(bad));
  auto w = non_membership_witness(bad);
  REQUIRE(w);
  CHECK(parse_poly("Y^2 - 3*X*Y + 1").eval({0, (*w)[0], (*w)[1], 0}) < 0);
  CHECK((*w)[0] >= 0);
  CHECK((*w)[0] <= 1);
}

TEST_CASE("strip zeros") {
  // zeros at (0, -1) and (1, 1)
  StripZeros z = find_strip_zeros(quad_form(parse_poly("X*(Y - 1)^2 + (1 - X)*(Y + 1)^2")));
  CHECK(z.zeros.size() == 2);
  CHECK(find_strip_zeros(quad_form(parse_poly("X^2*Y^2 + Y^2 + 1"))).zeros.empty());
  StripZeros a = find_strip_zeros(quad_form(parse_poly("(2*X - 1)^2*Y^2 + (Y - 1)^2*X*(1-X)")));
  CHECK_FALSE(a.non_isolated);
  CHECK_FALSE(a.zeros.empty());
  StripZeros n = find_strip_zeros(quad_form(parse_poly("(X*Y - 1)^2")));
  CHECK(n.non_isolated);
}

TEST_CASE("handcrafted inputs") {
  for (const char *text :
       {"X*(1 - X)", "(X*Y - 1)^2", "X*(1 - X)*Y^2 + 1", "X*Y^2 + (1 - X)", "Y^2 + 1",
        "(2*X^2 - 2*X + 1)*Y^2 + (X - 1/3)*Y + X^2 + 1", "((X^2 - 1/2)*Y - 1)^2 + X*(Y - X)^2",
        "(X - 1/2)^2*Y^2 + 1", "X^3*(1-X)*Y^2 + (1-X)*(Y-2)^2", "Y^2 - 2*X*Y + X^2 + X*(1-X)"}) {
    RatPoly f = parse_poly(text);
    QuadForm q = quad_form(f);
    RayDecomposition rd = extract_rays(q);
    CHECK_MESSAGE(rd.exact, std::string(text));
    CHECK(same(sum_rays(rd.rays, q.d, q.e), q));
    for (const auto &t : rd.rays)
      CHECK(within_caps(t, q.d, q.e));
    Certificate c = assemble_quadratic(f, rd);
    CHECK_MESSAGE(verify(c).ok, std::string(text));
    const int bound = std::max(f.degree(Var::X), 0) + 3;
    CHECK(c.degrees[0] <= bound);
    CHECK(c.degrees[1] <= bound);
  }
}

TEST_CASE("the degree-one example") {
  Certificate c = run(parse_poly("X*(1 - X)"));
  CHECK(c.sigma0.empty());
  REQUIRE(c.sigma1.size() == 1);
  CHECK(c.sigma1[0].poly == RatPoly(1));
  CHECK(c.sigma1[0].weight == 1);
}

TEST_CASE("random ray sums") {
  std::mt19937 rng(17);
  int exact = 0;
  for (int it = 0; it < 40; ++it) {
    RaySum s = random_ray_sum(rng);
    if (s.f.is_zero())
      continue;
    Certificate c = run(s.f);
    exact += c.mode == CertMode::Exact;
    CHECK_MESSAGE(verify(c).ok, to_string(s.f));
    const int bound = std::max(s.f.degree(Var::X), 0) + 3;
    CHECK(c.degrees[0] <= bound);
    CHECK(c.degrees[1] <= bound);
  }
  CHECK(exact > 20);
}

TEST_CASE("forced numeric mode") {
  std::mt19937 rng(23);
  for (int it = 0; it < 15; ++it) {
    RaySum s = random_ray_sum(rng);
    if (s.f.is_zero())
      continue;
    Certificate c = run(s.f, Mode::Numeric);
    CHECK(c.mode == CertMode::Numeric);
    CHECK_MESSAGE(verify(c).ok, to_string(s.f));
  }
}

TEST_CASE("generator conditions") {
  // r = X, p = 1, q = 0 with d = e = 1: deg r = min(1 - 0, ...) = 1
  CHECK(is_extreme_term({upoly({0, 1}), upoly({1}), UPoly()}, 1, 1));
  CHECK_FALSE(is_extreme_term({upoly({1}), upoly({1}), UPoly()}, 1, 1));
  CHECK_FALSE(is_extreme_term({upoly({0, 1}), upoly({1, 1}), upoly({1, 1})}, 3, 3));
  CHECK(within_caps({upoly({0, 1}), upoly({1}), upoly({2})}, 1, 1));
  CHECK_FALSE(within_caps({upoly({-1, 1}), upoly({1}), UPoly()}, 1, 1));

  // exact decompositions of rational-zero inputs use generators
  QuadForm q = quad_form(parse_poly("(X*Y - 1)^2 + X*(1 - X)"));
  RayDecomposition rd = extract_rays(q, Mode::Exact);
  for (const auto &t : rd.rays)
    CHECK_MESSAGE(is_extreme_term(t, q.d, q.e), ray_dump({t}));
}

TEST_CASE("errors") {
  QuadForm q{upoly({1}), upoly({0}), upoly({1}), 1, 0};
  try {
    extract_rays(q);
    FAIL("parity accepted");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::ParityMismatch);
  }
  QuadForm over{upoly({0, 0, 1}), UPoly(), upoly({1}), 0, 0};
  CHECK_THROWS_AS(extract_rays(over), Error);
  try {
    extract_rays(quad_form(parse_poly("Y^2 - 3*X*Y + 1")));
    FAIL("negative form accepted");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotNonnegative);
    CHECK(std::string(e.what()).find("at X =") != std::string::npos);
  }
}

TEST_CASE("ray dump format") {
  CHECK(ray_dump({{upoly({0, 1}), upoly({1}), upoly({-2})}}) == "X | 1 | -2\n");
}
