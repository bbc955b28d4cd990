#include "stripcert/rat_poly.hpp"
#include "stripcert/error.hpp"

#include <vector>

namespace stripcert {

char var_name(Var v) {
  static constexpr char names[] = {'W', 'X', 'Y', 'Z'};
  return names[static_cast<int>(v)];
}

RatPoly::RatPoly(const Rational &c) {
  if (c != 0)
    terms_.emplace(Monomial{0, 0, 0, 0}, c);
}

RatPoly RatPoly::var(Var v, int power) {
  Monomial m{0, 0, 0, 0};
  m[static_cast<int>(v)] = power;
  return term(m, Rational(1));
}

RatPoly RatPoly::term(const Monomial &m, const Rational &c) {
  RatPoly p;
  if (c != 0)
    p.terms_.emplace(m, c);
  return p;
}

RatPoly RatPoly::from_univariate(const UPoly &p, Var v) {
  RatPoly r;
  for (int k = 0; k <= p.degree(); ++k) {
    Monomial m{0, 0, 0, 0};
    m[static_cast<int>(v)] = k;
    r.add_term(m, p[k]);
  }
  return r;
}

bool RatPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0, 0});
}

Rational RatPoly::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RatPoly::add_term(const Monomial &m, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

RatPoly &RatPoly::operator+=(const RatPoly &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

RatPoly &RatPoly::operator-=(const RatPoly &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

RatPoly &RatPoly::operator*=(const Rational &s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &kv : terms_)
    kv.second *= s;
  return *this;
}

RatPoly operator-(const RatPoly &a) {
  RatPoly r = a;
  for (auto &kv : r.terms_)
    kv.second = -kv.second;
  return r;
}

RatPoly operator*(const RatPoly &a, const RatPoly &b) {
  RatPoly r;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
      r.add_term(m, ca * cb);
    }
  return r;
}

RatPoly RatPoly::pow(int k) const {
  RatPoly r(1), base = *this;
  while (k > 0) {
    if (k & 1)
      r *= base;
    k >>= 1;
    if (k)
      base *= base;
  }
  return r;
}

namespace {

template <typename T> T power(const T &x, int k) {
  T r(1);
  for (int i = 0; i < k; ++i)
    r *= x;
  return r;
}

} // namespace

Rational RatPoly::eval(const std::array<Rational, 4> &point) const {
  Rational acc = 0;
  for (const auto &[m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < 4; ++v)
      if (m[v])
        t *= power(point[v], m[v]);
    acc += t;
  }
  return acc;
}

double RatPoly::eval_double(const std::array<double, 4> &point) const {
  double acc = 0;
  for (const auto &[m, c] : terms_) {
    double t = c.get_d();
    for (int v = 0; v < 4; ++v)
      if (m[v])
        t *= power(point[v], m[v]);
    acc += t;
  }
  return acc;
}

RatPoly RatPoly::substitute(Var v, const RatPoly &value) const {
  const int iv = static_cast<int>(v);
  std::vector<RatPoly> powers{RatPoly(1)};
  RatPoly r;
  for (const auto &[m, c] : terms_) {
    while (static_cast<int>(powers.size()) <= m[iv])
      powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[iv] = 0;
    r += term(rest, c) * powers[static_cast<std::size_t>(m[iv])];
  }
  return r;
}

RatPoly RatPoly::diff(Var v) const {
  const int iv = static_cast<int>(v);
  RatPoly r;
  for (const auto &[m, c] : terms_) {
    if (m[iv] == 0)
      continue;
    Monomial d = m;
    d[iv] -= 1;
    r.add_term(d, c * m[iv]);
  }
  return r;
}

int RatPoly::degree(Var v) const {
  int d = -1;
  for (const auto &kv : terms_)
    d = std::max(d, kv.first[static_cast<int>(v)]);
  return d;
}

int RatPoly::total_degree() const {
  return terms_.empty() ? -1 : [&] {
    const auto &m = terms_.begin()->first;
    return m[0] + m[1] + m[2] + m[3];
  }();
}

DegreeProfile RatPoly::profile() const {
  DegreeProfile p;
  if (terms_.empty())
    return p;
  p.zero = false;
  p.total = total_degree();
  for (int v = 0; v < 4; ++v)
    p.per_var[v] = degree(static_cast<Var>(v));
  return p;
}

unsigned RatPoly::varset() const {
  unsigned mask = 0;
  for (const auto &kv : terms_)
    for (int v = 0; v < 4; ++v)
      if (kv.first[v])
        mask |= 1u << v;
  return mask;
}

RatPoly RatPoly::coeff_in(Var v, int k) const {
  const int iv = static_cast<int>(v);
  RatPoly r;
  for (const auto &[m, c] : terms_)
    if (m[iv] == k) {
      Monomial rest = m;
      rest[iv] = 0;
      r.add_term(rest, c);
    }
  return r;
}

UPoly RatPoly::to_univariate(Var v) const {
  if (!uses_only(var_bit(v)))
    throw Error(ErrorCode::InternalInvariant,
                std::string("expected a polynomial in ") + var_name(v) + " only");
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(v), -1) + 1), Rational(0));
  for (const auto &[m, coef] : terms_)
    c[static_cast<std::size_t>(m[static_cast<int>(v)])] = coef;
  return UPoly(std::move(c));
}

bool RatPoly::is_homogeneous_in(Var a, Var b, int *deg) const {
  int d = -1;
  for (const auto &kv : terms_) {
    int k = kv.first[static_cast<int>(a)] + kv.first[static_cast<int>(b)];
    if (d < 0)
      d = k;
    else if (k != d)
      return false;
  }
  if (deg)
    *deg = d;
  return true;
}

Rational RatPoly::max_abs_coeff() const {
  Rational m = 0;
  for (const auto &kv : terms_)
    if (abs(kv.second) > m)
      m = abs(kv.second);
  return m;
}

std::string to_string(const RatPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (const auto &[m, c] : p.terms()) {
    Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    bool has_var = m[0] + m[1] + m[2] + m[3] > 0;
    bool first = true;
    if (!(a == 1 && has_var)) {
      out += a.get_str();
      first = false;
    }
    for (int v = 0; v < 4; ++v) {
      if (!m[v])
        continue;
      if (!first)
        out += "*";
      first = false;
      out += var_name(static_cast<Var>(v));
      if (m[v] > 1)
        out += "^" + std::to_string(m[v]);
    }
  }
  return out;
}

RatPoly homogenize_bar(const RatPoly &f, int target_m) {
  if (!f.uses_only(kXY))
    throw Error(ErrorCode::InvalidTarget, "homogenize_bar expects a polynomial in X, Y");
  if (target_m < f.degree(Var::Y))
    throw Error(ErrorCode::InvalidTarget, "target degree " + std::to_string(target_m) +
                                              " is below deg_Y f = " +
                                              std::to_string(f.degree(Var::Y)));
  RatPoly r;
  for (const auto &[m, c] : f.terms())
    r.add_term({0, m[1], m[2], target_m - m[2]}, c);
  return r;
}

RatPoly lift_F(const RatPoly &f) {
  if (f.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "lift_F of the zero polynomial");
  if (!f.uses_only(kXY))
    throw Error(ErrorCode::InvalidTarget, "lift_F expects a polynomial in X, Y");
  const int d = f.degree(Var::X);
  const int m = f.degree(Var::Y);
  const RatPoly wx = RatPoly::var(Var::W) + RatPoly::var(Var::X);
  std::vector<RatPoly> wx_pow{RatPoly(1)};
  for (int k = 1; k <= d; ++k)
    wx_pow.push_back(wx_pow.back() * wx);
  RatPoly r;
  for (const auto &[mono, c] : f.terms()) {
    const int j = mono[1], i = mono[2];
    r += RatPoly::term({0, j, i, m - i}, c) * wx_pow[static_cast<std::size_t>(d - j)];
  }
  return r;
}

Rational inf_norm(const RatPoly &f) { return f.max_abs_coeff(); }

Rational polya_norm(const RatPoly &g) {
  if (g.is_zero())
    return 0;
  int d = 0;
  if (!g.uses_only(var_bit(Var::W) | var_bit(Var::X)) || !g.is_homogeneous_in(Var::W, Var::X, &d))
    throw Error(ErrorCode::NotHomogeneous, "polya_norm expects a form in W, X");
  Rational best = 0;
  for (const auto &[m, c] : g.terms()) {
    Rational v = abs(c) / Rational(binomial(d, m[0]));
    if (v > best)
      best = v;
  }
  return best;
}

} // namespace stripcert
