#include "stripcert/error.hpp"
#include "stripcert/rational.hpp"

#include <cctype>

namespace stripcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidTarget: return "InvalidTarget";
  case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
  case ErrorCode::NotHomogeneous: return "NotHomogeneous";
  case ErrorCode::OddDegreeY: return "OddDegreeY";
  case ErrorCode::InvalidBound: return "InvalidBound";
  case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
  case ErrorCode::NotPositive: return "NotPositive";
  case ErrorCode::NotNonnegative: return "NotNonnegative";
  case ErrorCode::NotNonnegativeOn01: return "NotNonnegativeOn01";
  case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  case ErrorCode::PolyaNotFound: return "PolyaNotFound";
  case ErrorCode::ParityMismatch: return "ParityMismatch";
  case ErrorCode::IrrationalZero: return "IrrationalZero";
  case ErrorCode::ExactUnavailable: return "ExactUnavailable";
  case ErrorCode::InternalInvariant: return "InternalInvariant";
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::UnknownVariable: return "UnknownVariable";
  case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string to_string(const Rational &q) { return q.get_str(); }

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::SyntaxError, "malformed number '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty())
    bad_number(text);

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      bad_number(text);
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
      throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    result = Rational(n, d);
    result.canonicalize();
  } else {
    std::string_view mant = s, expo;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mant = s.substr(0, e);
      expo = s.substr(e + 1);
      if (expo.empty())
        bad_number(text);
    }
    std::string_view ip = mant, fp;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
      ip = mant.substr(0, dot);
      fp = mant.substr(dot + 1);
    }
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      bad_number(text);
    std::string digits = std::string(ip) + std::string(fp);
    Integer n(digits.empty() ? std::string("0") : digits, 10);
    long exp10 = -static_cast<long>(fp.size());
    if (!expo.empty()) {
      bool eneg = false;
      if (expo.front() == '-' || expo.front() == '+') {
        eneg = expo.front() == '-';
        expo.remove_prefix(1);
      }
      if (!all_digits(expo) || expo.size() > 6)
        bad_number(text);
      long e = std::stol(std::string(expo));
      exp10 += eneg ? -e : e;
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0)
      result = Rational(n * scale);
    else {
      result = Rational(n, scale);
      result.canonicalize();
    }
  }
  return negative ? Rational(-result) : result;
}

} // namespace stripcert
