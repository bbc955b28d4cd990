#pragma once

#include "stripcert/dense_poly.hpp"
#include "stripcert/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace stripcert {

enum class Var { W = 0, X = 1, Y = 2, Z = 3 };

char var_name(Var v);

using Monomial = std::array<int, 4>;

// Graded-lex, descending, with W > X > Y > Z. Iterating a TermMap visits
// terms in canonical printing order.
struct MonomialOrder {
  bool operator()(const Monomial &a, const Monomial &b) const {
    int da = a[0] + a[1] + a[2] + a[3];
    int db = b[0] + b[1] + b[2] + b[3];
    if (da != db)
      return da > db;
    return a > b;
  }
};

struct DegreeProfile {
  bool zero = true;
  int total = -1;
  std::array<int, 4> per_var{-1, -1, -1, -1};

  int deg(Var v) const { return per_var[static_cast<int>(v)]; }
  int deg_X() const { return deg(Var::X); }
  int deg_Y() const { return deg(Var::Y); }
};

/// Sparse polynomial in W, X, Y, Z with exact rational coefficients.
/// Zero coefficients are never stored.
class RatPoly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  RatPoly() = default;
  RatPoly(const Rational &c);
  RatPoly(long c) : RatPoly(Rational(c)) {}

  static RatPoly var(Var v, int power = 1);
  static RatPoly term(const Monomial &m, const Rational &c);
  static RatPoly from_univariate(const UPoly &p, Var v);

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(const Monomial &m) const;
  Rational constant_term() const { return coeff({0, 0, 0, 0}); }
  std::size_t size() const { return terms_.size(); }

  RatPoly &operator+=(const RatPoly &o);
  RatPoly &operator-=(const RatPoly &o);
  RatPoly &operator*=(const Rational &s);
  RatPoly &operator*=(const RatPoly &o) { return *this = *this * o; }
  // Adds c*m in place.
  void add_term(const Monomial &m, const Rational &c);

  friend RatPoly operator+(RatPoly a, const RatPoly &b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly &b) { return a -= b; }
  friend RatPoly operator-(const RatPoly &a);
  friend RatPoly operator*(const RatPoly &a, const RatPoly &b);
  friend RatPoly operator*(RatPoly a, const Rational &s) { return a *= s; }
  friend RatPoly operator*(const Rational &s, RatPoly a) { return a *= s; }
  friend bool operator==(const RatPoly &a, const RatPoly &b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RatPoly &a, const RatPoly &b) { return !(a == b); }

  RatPoly pow(int k) const;

  // Point is indexed by Var.
  Rational eval(const std::array<Rational, 4> &point) const;
  double eval_double(const std::array<double, 4> &point) const;

  RatPoly substitute(Var v, const RatPoly &value) const;
  RatPoly diff(Var v) const;

  int degree(Var v) const;
  int total_degree() const;
  DegreeProfile profile() const;
  // Bitmask of variables that occur, bit i for Var(i).
  unsigned varset() const;
  bool uses_only(unsigned mask) const { return (varset() & ~mask) == 0; }

  // Coefficient of v^k, as a polynomial in the remaining variables.
  RatPoly coeff_in(Var v, int k) const;

  // Requires that only v occurs.
  UPoly to_univariate(Var v) const;

  // True iff every term has the same combined degree in a and b; the
  // common degree is written to *deg (-1 for the zero polynomial).
  bool is_homogeneous_in(Var a, Var b, int *deg = nullptr) const;

  Rational max_abs_coeff() const;

private:
  TermMap terms_;
};

constexpr unsigned var_bit(Var v) { return 1u << static_cast<int>(v); }
constexpr unsigned kXY = var_bit(Var::X) | var_bit(Var::Y);
constexpr unsigned kXYZ = kXY | var_bit(Var::Z);
constexpr unsigned kWXYZ = kXYZ | var_bit(Var::W);

std::string to_string(const RatPoly &p);

// Sum of a_ji X^j Y^i Z^(target_m - i).
RatPoly homogenize_bar(const RatPoly &f, int target_m);

// Sum of a_ji X^j (W+X)^(d-j) Y^i Z^(m-i).
RatPoly lift_F(const RatPoly &f);

Rational inf_norm(const RatPoly &f);

// max_j |coeff of W^j X^(d-j)| / C(d,j) for g homogeneous in (W, X).
Rational polya_norm(const RatPoly &g);

} // namespace stripcert
