#pragma once

#include "stripcert/dense_poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace stripcert {

/// Signed remainder sequence p, p', -rem(p, p'), ...
class SturmChain {
public:
  explicit SturmChain(const UPoly &p);

  const std::vector<UPoly> &sequence() const { return seq_; }

  int variations_at(const Rational &x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;

  // Distinct roots in (a, b]; exact when sequence().front() is square-free.
  int count(const Rational &a, const Rational &b) const {
    return variations_at(a) - variations_at(b);
  }

private:
  std::vector<UPoly> seq_;
};

/// An isolated real root: the unique root of `defining` in (lo, hi].
/// `defining` is square-free and nonzero at lo.
struct RootWitness {
  UPoly defining;
  Rational lo, hi;
  int multiplicity = 1;

  Rational width() const { return hi - lo; }
  double approx() const { return Rational((lo + hi) / 2).get_d(); }
  // Halves the interval, keeping the root inside.
  void bisect();
  void refine_to(const Rational &width);
};

struct SquarefreeDecomposition {
  Rational content;
  // Monic, square-free, pairwise coprime factors with their multiplicities.
  std::vector<std::pair<UPoly, int>> factors;
};

int count_roots_in(const UPoly &p, const Rational &a, const Rational &b);

bool is_nonneg_on_R(const UPoly &p);
bool is_positive_on_R(const UPoly &p);
bool is_nonneg_on_01(const UPoly &p);
bool is_positive_on_01(const UPoly &p);

std::vector<RootWitness> isolate_roots(const UPoly &p, const Rational &a, const Rational &b);

/// Witnesses for every real root.
std::vector<RootWitness> isolate_real_roots(const UPoly &p);

SquarefreeDecomposition squarefree_decompose(const UPoly &p);

/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly &p);

/// The largest s (monic) with s^2 dividing p.
UPoly square_root_part(const UPoly &p);

/// Returns the root if it is rational.
std::optional<Rational> exact_rational(RootWitness w);

/// All rational roots of p in (a, b], ascending, without multiplicity.
std::vector<Rational> rational_roots_in(const UPoly &p, const Rational &a, const Rational &b);

/// 1 + max |a_i / a_n|; every real root lies in (-bound, bound).
Rational cauchy_bound(const UPoly &p);

/// One rational point in each maximal open subinterval of (a, b) that
/// contains no root of p, in ascending order.
std::vector<Rational> gap_samples(const UPoly &p, const Rational &a, const Rational &b);

/// A rational point where p < 0, if there is one.
std::optional<Rational> negative_witness(const UPoly &p);
std::optional<Rational> negative_witness_01(const UPoly &p);

} // namespace stripcert
