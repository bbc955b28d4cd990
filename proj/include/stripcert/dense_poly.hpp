#pragma once

#include "stripcert/error.hpp"
#include "stripcert/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace stripcert {

/// Dense univariate polynomial, coefficients stored from the constant term
/// upwards. Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient vector and degree -1.
template <typename Scalar> class DensePoly {
public:
  using scalar_type = Scalar;

  DensePoly() = default;
  DensePoly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
  explicit DensePoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly constant(const Scalar &v) { return DensePoly({v}); }
  static DensePoly monomial(int k, const Scalar &v = Scalar(1)) {
    std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, Scalar(0));
    c.back() = v;
    return DensePoly(std::move(c));
  }
  // X - a
  static DensePoly linear_root(const Scalar &a) { return DensePoly({-a, Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of X^k, zero outside the stored range.
  Scalar operator[](int k) const {
    if (k < 0 || k > degree())
      return Scalar(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const Scalar &lead() const { return c_.back(); }
  const std::vector<Scalar> &coeffs() const { return c_; }

  Scalar operator()(const Scalar &x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return DensePoly(std::move(d));
  }

  DensePoly &operator+=(const DensePoly &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      c_[k] += o.c_[k];
    trim();
    return *this;
  }
  DensePoly &operator-=(const DensePoly &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  DensePoly &operator*=(const Scalar &s) {
    for (auto &v : c_)
      v *= s;
    trim();
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly &b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly &b) { return a -= b; }
  friend DensePoly operator-(DensePoly a) {
    for (auto &v : a.c_)
      v = -v;
    return a;
  }
  friend DensePoly operator*(DensePoly a, const Scalar &s) { return a *= s; }
  friend DensePoly operator*(const Scalar &s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly &a, const DensePoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return DensePoly(std::move(r));
  }
  DensePoly &operator*=(const DensePoly &o) { return *this = *this * o; }

  friend bool operator==(const DensePoly &a, const DensePoly &b) { return a.c_ == b.c_; }

  // p(x)^k
  DensePoly pow(int k) const {
    DensePoly r = constant(Scalar(1)), base = *this;
    while (k > 0) {
      if (k & 1)
        r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  // p(q(X)) by Horner.
  DensePoly compose(const DensePoly &q) const {
    DensePoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * q + constant(*it);
    return acc;
  }

  // Drops coefficients with |c| <= tol (numeric scalars only make sense here).
  DensePoly chopped(const Scalar &tol) const {
    std::vector<Scalar> c = c_;
    for (auto &v : c)
      if (v <= tol && -v <= tol)
        v = Scalar(0);
    return DensePoly(std::move(c));
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0))
      c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using UPoly = DensePoly<Rational>;
using NPoly = DensePoly<double>;

template <typename Scalar> struct DivMod {
  DensePoly<Scalar> quotient, remainder;
};

/// Long division a = q*b + r with deg r < deg b.
template <typename Scalar>
DivMod<Scalar> divmod(const DensePoly<Scalar> &a, const DensePoly<Scalar> &b) {
  if (b.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db)
    return {DensePoly<Scalar>{}, a};
  std::vector<Scalar> quo(static_cast<std::size_t>(da - db + 1), Scalar(0));
  for (int k = da; k >= db; --k) {
    Scalar coef = rem[static_cast<std::size_t>(k)] / b.lead();
    quo[static_cast<std::size_t>(k - db)] = coef;
    if (coef == Scalar(0))
      continue;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] -= coef * b[i];
    rem[static_cast<std::size_t>(k)] = Scalar(0);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {DensePoly<Scalar>(std::move(quo)), DensePoly<Scalar>(std::move(rem))};
}

template <typename Scalar> DensePoly<Scalar> monic(const DensePoly<Scalar> &p) {
  if (p.is_zero())
    return p;
  return p * (Scalar(1) / p.lead());
}

template <typename Scalar> DensePoly<Scalar> convert(const DensePoly<Rational> &p);

template <> inline DensePoly<Rational> convert<Rational>(const DensePoly<Rational> &p) { return p; }

template <> inline DensePoly<double> convert<double>(const DensePoly<Rational> &p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto &v : p.coeffs())
    c.push_back(v.get_d());
  return DensePoly<double>(std::move(c));
}

inline UPoly exact(const NPoly &p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (double v : p.coeffs())
    c.push_back(from_double(v));
  return UPoly(std::move(c));
}

// Exact-only helpers.

/// Monic gcd by the Euclidean algorithm.
UPoly gcd(UPoly a, UPoly b);

/// Positive rational multiple with coprime integer coefficients.
UPoly primitive_part(const UPoly &p);

/// Exact quotient; throws InternalInvariant if b does not divide a.
UPoly exact_div(const UPoly &a, const UPoly &b);

/// p(1 - X)
UPoly reflect01(const UPoly &p);

/// Maximum absolute coefficient.
Rational max_abs_coeff(const UPoly &p);

/// Coefficients in the degree-n Bernstein basis C(n,k) X^k (1-X)^{n-k};
/// requires n >= deg p.
std::vector<Rational> bernstein_coefficients(const UPoly &p, int n);

/// C(n,k) X^k (1-X)^{n-k}
UPoly bernstein_basis(int n, int k);

/// X^a (1-X)^b
UPoly endpoint_power(int a, int b);

std::string to_string(const UPoly &p, char var = 'X');

} // namespace stripcert
