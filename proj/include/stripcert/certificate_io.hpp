#pragma once

#include "stripcert/sos.hpp"

#include <string>
#include <string_view>

namespace stripcert {

/// Polynomial text with float coefficients printed to 17 significant digits,
/// which reads back to the same doubles.
std::string to_float_string(const RatPoly &p);

/// The certificate as JSON. Exact certificates print weights as "p/q"
/// strings, numeric ones as floats. Output is byte-for-byte deterministic.
std::string certificate_json(const Certificate &c);

/// Throws FormatError on malformed input (bad JSON, missing fields, bad
/// polynomial text).
Certificate parse_certificate(std::string_view text);

std::string report_json(const VerificationReport &r);

} // namespace stripcert
