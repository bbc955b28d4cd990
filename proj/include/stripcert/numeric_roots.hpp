#pragma once

#include "stripcert/dense_poly.hpp"

#include <complex>
#include <vector>

namespace stripcert {

using Complex = std::complex<long double>;

/// All complex roots of p (degree >= 1) from the companion matrix, each
/// polished by Newton steps on the exact coefficients in long double.
std::vector<Complex> complex_roots(const UPoly &p);

/// Exact rational value of a finite long double.
Rational from_long_double(long double v);

} // namespace stripcert
