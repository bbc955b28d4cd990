// stripcert: certificates of nonnegativity on the strip [0,1] x R.
#include "stripcert/certificate_io.hpp"
#include "stripcert/pipeline.hpp"
#include "stripcert/poly_text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace stripcert;
using nlohmann::ordered_json;

namespace {

int exit_code(ErrorCode c) {
  switch (c) {
  case ErrorCode::SyntaxError:
  case ErrorCode::UnknownVariable:
  case ErrorCode::FormatError:
  case ErrorCode::InvalidTarget:
  case ErrorCode::InvalidBound:
    return 2;
  default:
    return 1;
  }
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::FormatError, "cannot write " + path);
  out << text;
}

ordered_json trace_json(const std::vector<TraceRow> &trace) {
  ordered_json a = ordered_json::array();
  for (const auto &t : trace)
    a.push_back({{"N", t.N}, {"ok", t.ok},
                 {"failing_j", t.failing_j < 0 ? ordered_json(nullptr) : ordered_json(t.failing_j)}});
  return a;
}

void print_summary(const Certificate &c) {
  std::cout << "pipeline: " << to_string(c.pipeline) << "\n"
            << "mode:     " << to_string(c.mode) << "\n";
  if (c.N)
    std::cout << "N:        " << *c.N << "\n";
  std::cout << "degrees:  " << c.degrees[0] << ", " << c.degrees[1] << "\n"
            << "residual: " << c.residual << "\n";
  auto dump = [&](const char *name, const std::vector<WeightedSquare> &v) {
    std::cout << name << " (" << v.size() << " squares)";
    if (v.empty())
      std::cout << " = 0";
    std::cout << "\n";
    for (const auto &s : v)
      std::cout << "  " << (c.mode == CertMode::Exact ? to_string(s.weight) : std::to_string(s.weight.get_d()))
                << " * (" << (c.mode == CertMode::Exact ? to_string(s.poly) : to_float_string(s.poly))
                << ")^2\n";
  };
  dump("sigma0", c.sigma0);
  dump("sigma1", c.sigma1);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Certificates f = sigma0 + sigma1 X(1-X) for polynomials nonnegative on [0,1] x R"};
  app.require_subcommand(1);

  std::string poly, mode_s = "auto", route_s = "auto", trace_path, out_path, file, fbullet_s;
  int n_max = default_n_max(), depth = kDefaultDepthCap;
  double tol = 1e-8;
  bool json = false;

  auto *cert = app.add_subcommand("certify", "build a certificate for f");
  cert->add_option("poly", poly, "polynomial in X and Y")->required();
  cert->add_option("--mode", mode_s, "exact, numeric or auto")
      ->check(CLI::IsMember({"exact", "numeric", "auto"}));
  cert->add_option("--pipeline", route_s, "auto, polya, quadratic or degx01")
      ->check(CLI::IsMember({"auto", "polya", "quadratic", "degx01"}));
  cert->add_option("--max-N", n_max, "largest Polya exponent to try")->check(CLI::NonNegativeNumber);
  cert->add_option("--tol", tol, "verification tolerance for numeric certificates")
      ->check(CLI::PositiveNumber);
  cert->add_option("--depth", depth, "subdivision depth cap")->check(CLI::NonNegativeNumber);
  cert->add_flag("--json", json, "print the certificate as JSON");
  cert->add_option("--trace-csv", trace_path, "write the Polya search trace as CSV");
  cert->add_option("-o,--output", out_path, "write the certificate JSON to a file");

  auto *ver = app.add_subcommand("verify", "check a certificate file");
  ver->add_option("file", file, "certificate JSON")->required();
  ver->add_option("--tol", tol, "tolerance for numeric certificates")->check(CLI::PositiveNumber);
  ver->add_flag("--json", json, "print the report as JSON");

  auto *bnd = app.add_subcommand("bounds", "report theoretical degree bounds for f");
  bnd->add_option("poly", poly, "polynomial in X and Y")->required();
  bnd->add_option("--f-bullet", fbullet_s, "trusted lower bound for f-bullet, e.g. 1/5");
  bnd->add_option("--depth", depth, "subdivision depth cap")->check(CLI::NonNegativeNumber);
  bnd->add_flag("--json", json, "print the report as JSON");

  auto *trc = app.add_subcommand("trace", "run the Polya search and print its trace");
  trc->add_option("poly", poly, "polynomial in X and Y")->required();
  trc->add_option("--max-N", n_max, "largest Polya exponent to try")->check(CLI::NonNegativeNumber);
  trc->add_option("--trace-csv", trace_path, "write the CSV to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ver) {
      std::ifstream in(file);
      if (!in)
        throw Error(ErrorCode::FormatError, "cannot read " + file);
      std::stringstream ss;
      ss << in.rdbuf();
      Certificate c = parse_certificate(ss.str());
      VerificationReport rep = verify(c, tol);
      if (json) {
        std::cout << report_json(rep);
      } else {
        for (const auto &ch : rep.checks)
          std::cout << (ch.passed ? "pass " : "FAIL ") << ch.name << ": " << ch.detail << "\n";
        std::cout << (rep.ok ? "verified" : "not verified") << "\n";
      }
      return rep.ok ? 0 : 1;
    }

    RatPoly f = parse_poly(poly);

    if (*bnd) {
      std::optional<Rational> fb;
      if (!fbullet_s.empty())
        fb = parse_rational(fbullet_s);
      auto lines = bounds(f, fb, depth);
      if (json) {
        ordered_json a = ordered_json::array();
        for (const auto &l : lines)
          a.push_back({{"name", l.name}, {"applicable", l.applicable},
                       {"value", l.applicable ? ordered_json(l.value) : ordered_json(nullptr)},
                       {"reason", l.applicable ? ordered_json(nullptr) : ordered_json(l.reason)}});
        std::cout << a.dump(2) << "\n";
      } else {
        for (const auto &l : lines)
          std::cout << l.name << ": " << (l.applicable ? l.value : "inapplicable, " + l.reason) << "\n";
      }
      return 0;
    }

    if (*trc) {
      PolyaSearch s = find_N_incremental(f, n_max);
      std::string csv = trace_csv(s.trace);
      if (trace_path.empty())
        std::cout << csv;
      else
        write_file(trace_path, csv);
      return s.found ? 0 : 1;
    }

    RunConfig cfg;
    cfg.mode = *parse_mode(mode_s);
    cfg.route = *parse_route(route_s);
    cfg.n_max = n_max;
    cfg.tol = tol;
    cfg.depth_cap = depth;
    cfg.trace = !trace_path.empty();
    CertifyResult r = certify(f, cfg);
    if (!trace_path.empty())
      write_file(trace_path, trace_csv(r.trace));
    if (!r.ok()) {
      if (json) {
        ordered_json j{{"error", std::string(to_string(r.code))}, {"message", r.message}};
        if (!r.trace.empty())
          j["trace"] = trace_json(r.trace);
        if (r.hypotheses)
          j["hypotheses"] = describe(*r.hypotheses);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cerr << "error: " << to_string(r.code) << ": " << r.message << "\n";
      }
      return exit_code(r.code);
    }
    const Certificate &c = *r.certificate;
    VerificationReport rep = verify(c, tol);
    if (!out_path.empty())
      write_file(out_path, certificate_json(c));
    if (json)
      std::cout << certificate_json(c);
    else
      print_summary(c);
    if (!rep.ok) {
      std::cerr << "error: the certificate does not verify\n";
      return 1;
    }
    return 0;
  } catch (const Error &e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
