#include "stripcert/interval_extremes.hpp"

#include <algorithm>

namespace stripcert {

std::vector<RootOn01> roots_on_01(const UPoly &p, const Rational &width) {
  std::vector<RootOn01> out;
  if (p.degree() <= 0)
    return out;
  for (auto w : isolate_roots(p, Rational(-1), Rational(1))) {
    RootOn01 r;
    r.multiplicity = w.multiplicity;
    if (auto q = exact_rational(w)) {
      if (*q < 0 || *q > 1)
        continue;
      r.exact = *q;
      r.approx = *q;
    } else {
      // irrational, so never exactly 0
      while (w.lo < 0 && w.hi > 0)
        w.bisect();
      if (w.hi <= 0)
        continue;
      w.refine_to(width);
      r.approx = (w.lo + w.hi) / 2;
    }
    r.witness = std::move(w);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const RootOn01 &a, const RootOn01 &b) { return a.point() < b.point(); });
  return out;
}

std::optional<RatioMinimum> minimize_ratio_01(const UPoly &num, const UPoly &den,
                                              const Rational &width) {
  if (den.is_zero())
    return std::nullopt;
  if (num.is_zero())
    return RatioMinimum{Rational(0), Rational(0), true};
  UPoly g = gcd(num, den);
  UPoly n = exact_div(num, g), d = exact_div(den, g);

  std::optional<RatioMinimum> best;
  auto consider = [&](const Rational &x, bool exact) {
    Rational dv = d(x);
    if (dv == 0)
      return;
    Rational v = n(x) / dv;
    if (!best || v < best->value || (v == best->value && exact && !best->exact))
      best = RatioMinimum{x, v, exact};
  };
  consider(Rational(0), true);
  consider(Rational(1), true);
  UPoly crit = n.derivative() * d - n * d.derivative();
  if (!crit.is_zero())
    for (const auto &r : roots_on_01(crit, width))
      if (r.point() > 0 && r.point() < 1)
        consider(r.point(), r.exact.has_value());
  return best;
}

} // namespace stripcert
