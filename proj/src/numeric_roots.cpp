#include "stripcert/numeric_roots.hpp"
#include "stripcert/error.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <cmath>

namespace stripcert {

namespace {

long double to_ld(const Rational &q) {
  // double head plus double tail keeps the full long double mantissa
  mpf_class v(q, 192);
  double head = v.get_d();
  mpf_class tail = v - mpf_class(head, 192);
  return static_cast<long double>(head) + static_cast<long double>(tail.get_d());
}

} // namespace

Rational from_long_double(long double v) {
  if (!std::isfinite(v))
    throw Error(ErrorCode::InternalInvariant, "non-finite value");
  if (v == 0)
    return 0;
  int exp = 0;
  long double mant = std::frexp(v, &exp);
  // 64-bit mantissa: scale to an integer exactly
  long double scaled = std::ldexp(mant, 64);
  bool neg = scaled < 0;
  if (neg)
    scaled = -scaled;
  unsigned long long hi = static_cast<unsigned long long>(scaled);
  Integer n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(hi), 0, 0, &hi);
  if (neg)
    n = -n;
  Rational r(n);
  int shift = exp - 64;
  if (shift >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(shift));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-shift));
  return r;
}

std::vector<Complex> complex_roots(const UPoly &p) {
  if (p.degree() < 1)
    return {};
  const int n = p.degree();
  // normalise to a monic polynomial before going to floating point
  UPoly mp = monic(p);
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(k)] = to_ld(mp[k]);

  std::vector<Complex> roots;
  if (n == 1) {
    roots.emplace_back(-c[0], 0.0L);
  } else {
    Eigen::VectorXd coeffs(n + 1);
    for (int k = 0; k <= n; ++k)
      coeffs[k] = static_cast<double>(c[static_cast<std::size_t>(k)]);
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(coeffs);
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
      const auto &z = solver.roots()[i];
      roots.emplace_back(z.real(), z.imag());
    }
  }

  auto eval = [&](Complex z, Complex &dv) {
    Complex v = 0;
    dv = 0;
    for (int k = n; k >= 0; --k) {
      dv = dv * z + v;
      v = v * z + c[static_cast<std::size_t>(k)];
    }
    return v;
  };
  for (auto &z : roots) {
    for (int it = 0; it < 60; ++it) {
      Complex dv;
      Complex v = eval(z, dv);
      if (std::abs(dv) == 0)
        break;
      Complex step = v / dv;
      Complex next = z - step;
      Complex dn;
      if (std::abs(eval(next, dn)) > std::abs(v) && it > 3)
        break;
      z = next;
      if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(z)))
        break;
    }
  }
  return roots;
}

} // namespace stripcert
