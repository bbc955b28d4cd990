#pragma once

#include "stripcert/polya.hpp"
#include "stripcert/rat_poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stripcert {

// Requested arithmetic. Auto tries exact first and falls back to numeric.
enum class Mode { Exact, Numeric, Auto };
// What a finished certificate actually is.
enum class CertMode { Exact, Numeric };
enum class Pipeline { Polya, Quadratic, DegX0, DegX1 };

std::string_view to_string(Mode m);
std::string_view to_string(CertMode m);
std::string_view to_string(Pipeline p);
std::optional<Mode> parse_mode(std::string_view s);
std::optional<CertMode> parse_cert_mode(std::string_view s);
std::optional<Pipeline> parse_pipeline(std::string_view s);

/// weight * poly^2 with poly univariate.
struct USquare {
  Rational weight;
  UPoly poly;
};

struct UnivariateSos {
  std::vector<USquare> squares;
  bool exact = true;
};

UPoly sum_of(const std::vector<USquare> &squares);

/// weight * poly^2, poly in X and Y. Numeric certificates keep their float
/// data as the exact dyadic rationals they stand for.
struct WeightedSquare {
  Rational weight;
  RatPoly poly;
};

struct Certificate {
  RatPoly f;
  std::vector<WeightedSquare> sigma0, sigma1;
  Pipeline pipeline = Pipeline::Polya;
  std::optional<int> N;
  CertMode mode = CertMode::Exact;
  // (deg sigma0, deg sigma1*X(1-X)); -1 for an empty sum.
  std::array<int, 2> degrees{-1, -1};
  double residual = 0;
};

/// r = t + u X + v (1-X) + w X(1-X), each of t, u, v, w a sum of squares.
struct Lukacs01 {
  std::vector<USquare> t, u, v, w;
  bool exact = true;
};

UPoly recombine(const Lukacs01 &l);

UnivariateSos sos_univariate(const UPoly &p, Mode mode = Mode::Auto);

Lukacs01 lukacs_01(const UPoly &r, Mode mode = Mode::Auto);

Certificate assemble_from_polya(const RatPoly &f, const PolyaExpansion &e,
                                const std::vector<UnivariateSos> &sos);
Certificate assemble_degx1(const RatPoly &f, Mode mode = Mode::Auto);
Certificate assemble_degx0(const RatPoly &f, Mode mode = Mode::Auto);

/// f - sum sigma0 - (sum sigma1) X(1-X)
RatPoly defect(const Certificate &c);

/// Degree the pipeline promises, or nullopt if it cannot be determined.
std::optional<int> degree_bound(const Certificate &c);

/// Fills in degrees and residual from the squares.
void finalize(Certificate &c);

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool ok = true;
  double residual = 0;
};

VerificationReport verify(const Certificate &c, double tol = 1e-8);

} // namespace stripcert
