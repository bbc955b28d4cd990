#pragma once

#include "stripcert/error.hpp"
#include "stripcert/polya.hpp"
#include "stripcert/sos.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stripcert {

enum class Route { Auto, Polya, Quadratic, DegX01 };

std::optional<Route> parse_route(std::string_view s);

struct RunConfig {
  Mode mode = Mode::Auto;
  Route route = Route::Auto;
  int n_max = kDefaultNMax;
  double tol = 1e-8;
  int depth_cap = kDefaultDepthCap;
  bool trace = false;
};

/// STRIPCERT_MAX_N if set and valid, else kDefaultNMax.
int default_n_max();

struct CertifyResult {
  std::optional<Certificate> certificate;
  // set when there is no certificate
  ErrorCode code = ErrorCode::InternalInvariant;
  std::string message;
  std::vector<TraceRow> trace; // Polya runs only
  std::optional<HypothesisReport> hypotheses;

  bool ok() const { return certificate.has_value(); }
};

/// deg_X f <= 1 goes to the boundary-line construction, deg_Y f <= 2 to ray
/// extraction and everything else to the Polya search.
CertifyResult certify(const RatPoly &f, const RunConfig &cfg = {});

/// A point of the strip where f < 0, from exact sampling of vertical lines.
std::optional<std::array<Rational, 2>> strip_negative_point(const RatPoly &f);

struct BoundLine {
  std::string name;
  bool applicable = false;
  std::string value;  // when applicable
  std::string reason; // when not
};

/// Theoretical degree and exponent bounds for f. A supplied f-bullet lower
/// bound is taken on trust; otherwise one is certified by subdivision.
std::vector<BoundLine> bounds(const RatPoly &f, std::optional<Rational> f_bullet = std::nullopt,
                              int depth_cap = kDefaultDepthCap);

std::string describe(const HypothesisReport &r);

} // namespace stripcert
