#include "stripcert/certificate_io.hpp"
#include "stripcert/error.hpp"
#include "stripcert/poly_text.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace stripcert {

using nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json squares_json(const std::vector<WeightedSquare> &v, bool numeric) {
  ordered_json out = ordered_json::array();
  for (const auto &s : v) {
    ordered_json e;
    if (numeric)
      e["weight"] = to_double(s.weight);
    else
      e["weight"] = to_string(s.weight);
    e["poly"] = numeric ? to_float_string(s.poly) : to_string(s.poly);
    out.push_back(std::move(e));
  }
  return out;
}

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorCode::FormatError, what); }

RatPoly poly_field(const ordered_json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_string())
    bad(std::string("missing polynomial field \"") + key + "\"");
  try {
    return parse_poly(j[key].get<std::string>());
  } catch (const Error &e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

Rational number_field(const ordered_json &j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error &e) {
      bad(std::string("bad weight: ") + e.what());
    }
  }
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v))
      bad("non-finite weight");
    return from_double(v);
  }
  bad("weight must be a string or a number");
}

// Decimal text of a double reads back as a decimal rational; snap it to the
// double it was printed from.
RatPoly to_doubles(const RatPoly &p) {
  RatPoly out;
  for (const auto &[m, a] : p.terms())
    out.add_term(m, from_double(to_double(a)));
  return out;
}

std::vector<WeightedSquare> squares_field(const ordered_json &j, const char *key, bool numeric) {
  if (!j.contains(key) || !j[key].is_array())
    bad(std::string("missing array \"") + key + "\"");
  std::vector<WeightedSquare> out;
  for (const auto &e : j[key]) {
    if (!e.is_object() || !e.contains("weight"))
      bad(std::string("malformed entry in \"") + key + "\"");
    RatPoly p = poly_field(e, "poly");
    out.push_back({number_field(e["weight"]), numeric ? to_doubles(p) : p});
  }
  return out;
}

} // namespace

std::string to_float_string(const RatPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (const auto &[m, c] : p.terms()) {
    const double a = std::fabs(to_double(c));
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool has_var = m[0] + m[1] + m[2] + m[3] > 0;
    bool first = true;
    if (!(a == 1 && has_var)) {
      out += format_double(a);
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

std::string certificate_json(const Certificate &c) {
  const bool numeric = c.mode == CertMode::Numeric;
  ordered_json j;
  j["f"] = to_string(c.f);
  j["pipeline"] = std::string(to_string(c.pipeline));
  j["mode"] = std::string(to_string(c.mode));
  j["N"] = c.N ? ordered_json(*c.N) : ordered_json(nullptr);
  j["sigma0"] = squares_json(c.sigma0, numeric);
  j["sigma1"] = squares_json(c.sigma1, numeric);
  j["degrees"] = {c.degrees[0], c.degrees[1]};
  if (numeric)
    j["residual"] = c.residual;
  else
    j["residual"] = "0";
  return j.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception &e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object())
    bad("certificate must be a JSON object");
  Certificate c;
  c.f = poly_field(j, "f");

  auto str = [&](const char *key) {
    if (!j.contains(key) || !j[key].is_string())
      bad(std::string("missing string field \"") + key + "\"");
    return j[key].get<std::string>();
  };
  auto p = parse_pipeline(str("pipeline"));
  auto m = parse_cert_mode(str("mode"));
  if (!p)
    bad("unknown pipeline \"" + str("pipeline") + "\"");
  if (!m)
    bad("unknown mode \"" + str("mode") + "\"");
  c.pipeline = *p;
  c.mode = *m;

  if (j.contains("N") && !j["N"].is_null()) {
    if (!j["N"].is_number_integer())
      bad("\"N\" must be an integer or null");
    c.N = j["N"].get<int>();
  }
  const bool numeric = c.mode == CertMode::Numeric;
  c.sigma0 = squares_field(j, "sigma0", numeric);
  c.sigma1 = squares_field(j, "sigma1", numeric);

  if (!j.contains("degrees") || !j["degrees"].is_array() || j["degrees"].size() != 2 ||
      !j["degrees"][0].is_number_integer() || !j["degrees"][1].is_number_integer())
    bad("\"degrees\" must be a pair of integers");
  c.degrees = {j["degrees"][0].get<int>(), j["degrees"][1].get<int>()};

  if (!j.contains("residual"))
    bad("missing \"residual\"");
  const auto &r = j["residual"];
  if (r.is_number())
    c.residual = r.get<double>();
  else if (r.is_string())
    c.residual = number_field(r).get_d();
  else
    bad("\"residual\" must be \"0\" or a number");
  return c;
}

std::string report_json(const VerificationReport &r) {
  ordered_json j;
  j["ok"] = r.ok;
  j["residual"] = r.residual;
  ordered_json checks = ordered_json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

} // namespace stripcert
