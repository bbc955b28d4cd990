#include "stripcert/dense_poly.hpp"

#include <string>

namespace stripcert {

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

UPoly primitive_part(const UPoly &p) {
  if (p.is_zero())
    return p;
  Integer l = 1, g = 0;
  for (const auto &c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto &c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return p * Rational(l, g);
}

UPoly exact_div(const UPoly &a, const UPoly &b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero())
    throw Error(ErrorCode::InternalInvariant, "inexact polynomial division");
  return qr.quotient;
}

UPoly reflect01(const UPoly &p) { return p.compose(UPoly{Rational(1), Rational(-1)}); }

Rational max_abs_coeff(const UPoly &p) {
  Rational m = 0;
  for (const auto &c : p.coeffs())
    if (abs(c) > m)
      m = abs(c);
  return m;
}

std::vector<Rational> bernstein_coefficients(const UPoly &p, int n) {
  if (p.degree() > n)
    throw Error(ErrorCode::InternalInvariant, "Bernstein degree below polynomial degree");
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 0; i <= std::min(k, p.degree()); ++i) {
      Rational w(binomial(k, i), binomial(n, i));
      w.canonicalize();
      acc += w * p[i];
    }
    b[static_cast<std::size_t>(k)] = acc;
  }
  return b;
}

UPoly endpoint_power(int a, int b) {
  return UPoly::monomial(a) * UPoly{Rational(1), Rational(-1)}.pow(b);
}

UPoly bernstein_basis(int n, int k) { return endpoint_power(k, n - k) * Rational(binomial(n, k)); }

std::string to_string(const UPoly &p, char var) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational &c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0)
      continue;
    Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    bool unit = (a == 1) && k > 0;
    if (!unit)
      out += a.get_str();
    if (k > 0) {
      if (!unit)
        out += "*";
      out += var;
      if (k > 1)
        out += "^" + std::to_string(k);
    }
  }
  return out;
}

} // namespace stripcert
