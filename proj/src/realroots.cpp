#include "stripcert/realroots.hpp"
#include "stripcert/error.hpp"

#include <algorithm>

namespace stripcert {

namespace {

int sign_at_neg_inf(const UPoly &p) {
  int s = sign(p.lead());
  return (p.degree() % 2 == 0) ? s : -s;
}

int count_variations(const std::vector<int> &signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++v;
    last = s;
  }
  return v;
}

void require_nonzero(const UPoly &p, const char *what) {
  if (p.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, std::string(what) + " of the zero polynomial");
}

} // namespace

SturmChain::SturmChain(const UPoly &p) {
  require_nonzero(p, "Sturm chain");
  seq_.push_back(primitive_part(p));
  UPoly d = p.derivative();
  if (d.is_zero())
    return;
  seq_.push_back(primitive_part(d));
  for (;;) {
    UPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
    if (r.is_zero())
      break;
    seq_.push_back(primitive_part(-r));
  }
}

int SturmChain::variations_at(const Rational &x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto &q : seq_)
    s.push_back(sign(q(x)));
  return count_variations(s);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto &q : seq_)
    s.push_back(sign_at_neg_inf(q));
  return count_variations(s);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto &q : seq_)
    s.push_back(sign(q.lead()));
  return count_variations(s);
}

void RootWitness::bisect() {
  Rational mid = (lo + hi) / 2;
  int sm = sign(defining(mid));
  if (sm == 0) {
    // the unique root is mid itself
    hi = mid;
    lo = (lo + mid) / 2;
    return;
  }
  if (sign(defining(lo)) * sm < 0)
    hi = mid;
  else
    lo = mid;
}

void RootWitness::refine_to(const Rational &w) {
  while (width() >= w)
    bisect();
}

SquarefreeDecomposition squarefree_decompose(const UPoly &p) {
  require_nonzero(p, "square-free decomposition");
  SquarefreeDecomposition out;
  out.content = p.lead();
  if (p.degree() == 0)
    return out;
  UPoly mp = monic(p);
  UPoly dp = mp.derivative();
  UPoly a = gcd(mp, dp);
  UPoly b = exact_div(mp, a);
  UPoly c = exact_div(dp, a);
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly ai = gcd(b, d);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
    if (ai.degree() > 0)
      out.factors.emplace_back(monic(ai), i);
    ++i;
  }
  return out;
}

UPoly squarefree_part(const UPoly &p) {
  require_nonzero(p, "square-free part");
  if (p.degree() <= 0)
    return UPoly::constant(1);
  return monic(exact_div(p, gcd(p, p.derivative())));
}

UPoly square_root_part(const UPoly &p) {
  UPoly s = UPoly::constant(1);
  if (p.is_zero() || p.degree() < 2)
    return s;
  for (const auto &[f, m] : squarefree_decompose(p).factors)
    if (m >= 2)
      s *= f.pow(m / 2);
  return s;
}

int count_roots_in(const UPoly &p, const Rational &a, const Rational &b) {
  require_nonzero(p, "root count");
  if (!(a < b))
    throw Error(ErrorCode::InvalidBound, "count_roots_in needs a < b");
  if (p.degree() == 0)
    return 0;
  return SturmChain(squarefree_part(p)).count(a, b);
}

Rational cauchy_bound(const UPoly &p) {
  require_nonzero(p, "Cauchy bound");
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p[k] / p.lead());
    if (r > m)
      m = r;
  }
  return m + 1;
}

namespace {

void isolate_rec(const SturmChain &sc, const UPoly &g, Rational lo, Rational hi, int vlo, int vhi,
                 std::vector<RootWitness> &out) {
  int n = vlo - vhi;
  if (n == 0)
    return;
  if (n == 1) {
    // keep the convention that the defining polynomial is nonzero at lo
    while (g(lo) == 0) {
      Rational mid = (lo + hi) / 2;
      if (sc.count(lo, mid) == 0)
        lo = mid;
      else
        hi = mid;
    }
    out.push_back(RootWitness{g, lo, hi, 1});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int vmid = sc.variations_at(mid);
  isolate_rec(sc, g, lo, mid, vlo, vmid, out);
  isolate_rec(sc, g, mid, hi, vmid, vhi, out);
}

// Roots of a square-free polynomial in (a, b].
std::vector<RootWitness> isolate_squarefree(const UPoly &g, const Rational &a, const Rational &b) {
  std::vector<RootWitness> out;
  if (g.degree() <= 0)
    return out;
  SturmChain sc(g);
  isolate_rec(sc, g, a, b, sc.variations_at(a), sc.variations_at(b), out);
  return out;
}

} // namespace

std::vector<RootWitness> isolate_roots(const UPoly &p, const Rational &a, const Rational &b) {
  require_nonzero(p, "root isolation");
  std::vector<RootWitness> all;
  if (p.degree() <= 0)
    return all;
  for (const auto &[f, m] : squarefree_decompose(p).factors) {
    for (auto w : isolate_squarefree(f, a, b)) {
      w.multiplicity = m;
      all.push_back(std::move(w));
    }
  }
  std::sort(all.begin(), all.end(), [](const RootWitness &x, const RootWitness &y) {
    if (x.lo != y.lo)
      return x.lo < y.lo;
    return x.hi < y.hi;
  });
  // Witnesses from different factors may overlap; refine until disjoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].hi <= all[i + 1].lo)
        continue;
      all[i].bisect();
      all[i + 1].bisect();
      changed = true;
    }
    if (changed)
      std::sort(all.begin(), all.end(),
                [](const RootWitness &x, const RootWitness &y) { return x.hi < y.hi; });
  }
  return all;
}

std::vector<RootWitness> isolate_real_roots(const UPoly &p) {
  require_nonzero(p, "root isolation");
  if (p.degree() <= 0)
    return {};
  Rational B = cauchy_bound(p);
  return isolate_roots(p, -B, B);
}

std::optional<Rational> exact_rational(RootWitness w) {
  UPoly g = primitive_part(w.defining);
  Integer L = abs(g.lead().get_num());
  if (g(w.hi) == 0)
    return w.hi;
  w.defining = g;
  w.refine_to(Rational(1, L));
  if (g(w.hi) == 0)
    return w.hi;
  Rational scaled = w.hi * Rational(L);
  Integer k = floor(scaled);
  Rational cand(k, L);
  cand.canonicalize();
  if (cand > w.lo && cand <= w.hi && g(cand) == 0)
    return cand;
  return std::nullopt;
}

std::vector<Rational> rational_roots_in(const UPoly &p, const Rational &a, const Rational &b) {
  std::vector<Rational> out;
  if (p.is_zero() || p.degree() <= 0)
    return out;
  for (const auto &w : isolate_roots(p, a, b))
    if (auto r = exact_rational(w))
      out.push_back(*r);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// A root either known exactly or strictly inside (lo, hi).
struct Block {
  UPoly g;
  Rational lo, hi;
  bool point = false;

  Rational lb() const { return point ? hi : lo; }
  Rational ub() const { return hi; }

  void refine() {
    if (point)
      return;
    Rational mid = (lo + hi) / 2;
    int sm = sign(g(mid));
    if (sm == 0) {
      point = true;
      lo = hi = mid;
      return;
    }
    if (sign(g(lo)) * sm < 0)
      hi = mid;
    else
      lo = mid;
  }
};

} // namespace

std::vector<Rational> gap_samples(const UPoly &p, const Rational &a, const Rational &b) {
  if (p.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "gap samples of the zero polynomial");
  std::vector<Block> blocks;
  if (p.degree() > 0) {
    UPoly g = squarefree_part(p);
    for (const auto &w : isolate_squarefree(g, a, b)) {
      Block bl{g, w.lo, w.hi, false};
      if (g(w.hi) == 0) {
        bl.point = true;
        bl.lo = w.hi;
      }
      if (bl.point && bl.hi == b)
        continue;
      blocks.push_back(bl);
    }
  }
  std::vector<Rational> out;
  if (blocks.empty()) {
    out.push_back((a + b) / 2);
    return out;
  }
  while (!(a < blocks.front().lb()))
    blocks.front().refine();
  while (!(blocks.back().ub() < b))
    blocks.back().refine();
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    while (!(blocks[i].ub() < blocks[i + 1].lb())) {
      blocks[i].refine();
      blocks[i + 1].refine();
    }
  }
  out.push_back((a + blocks.front().lb()) / 2);
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    out.push_back((blocks[i].ub() + blocks[i + 1].lb()) / 2);
  out.push_back((blocks.back().ub() + b) / 2);
  return out;
}

std::optional<Rational> negative_witness(const UPoly &p) {
  if (p.is_zero())
    return std::nullopt;
  if (p.degree() == 0)
    return p.lead() < 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
  Rational B = cauchy_bound(p) + 1;
  for (const auto &x : gap_samples(p, -B, B))
    if (p(x) < 0)
      return x;
  return std::nullopt;
}

std::optional<Rational> negative_witness_01(const UPoly &p) {
  if (p.is_zero())
    return std::nullopt;
  if (p(Rational(0)) < 0)
    return Rational(0);
  if (p(Rational(1)) < 0)
    return Rational(1);
  for (const auto &x : gap_samples(p, Rational(0), Rational(1)))
    if (p(x) < 0)
      return x;
  return std::nullopt;
}

bool is_nonneg_on_R(const UPoly &p) {
  if (p.is_zero())
    return true;
  if (p.degree() % 2 != 0 || p.lead() < 0)
    return false;
  if (p.degree() == 0)
    return true;
  for (const auto &[f, m] : squarefree_decompose(p).factors) {
    if (m % 2 == 0)
      continue;
    SturmChain sc(f);
    if (sc.variations_at_neg_infinity() - sc.variations_at_pos_infinity() > 0)
      return false;
  }
  return true;
}

bool is_positive_on_R(const UPoly &p) {
  if (p.is_zero() || p.degree() % 2 != 0 || p.lead() <= 0)
    return false;
  if (p.degree() == 0)
    return true;
  SturmChain sc(squarefree_part(p));
  return sc.variations_at_neg_infinity() == sc.variations_at_pos_infinity();
}

bool is_nonneg_on_01(const UPoly &p) {
  if (p.is_zero())
    return true;
  if (p(Rational(0)) < 0 || p(Rational(1)) < 0)
    return false;
  if (p.degree() == 0)
    return p.lead() > 0;
  for (const auto &[f, m] : squarefree_decompose(p).factors) {
    if (m % 2 == 0)
      continue;
    int n = SturmChain(f).count(Rational(0), Rational(1));
    if (f(Rational(1)) == 0)
      --n;
    if (n > 0)
      return false;
  }
  // no sign change inside (0,1): the sign at any non-root decides
  for (long den = 2;; ++den)
    for (long num = 1; num < den; ++num) {
      Rational x(num, den);
      x.canonicalize();
      Rational v = p(x);
      if (v != 0)
        return v > 0;
    }
}

bool is_positive_on_01(const UPoly &p) {
  if (p.is_zero() || p(Rational(0)) <= 0 || p(Rational(1)) <= 0)
    return false;
  if (p.degree() == 0)
    return true;
  return SturmChain(squarefree_part(p)).count(Rational(0), Rational(1)) == 0;
}

} // namespace stripcert
