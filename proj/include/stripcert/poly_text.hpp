#pragma once

#include "stripcert/rat_poly.hpp"

#include <string_view>

namespace stripcert {

/// Parses the canonical text grammar: rational or decimal literals,
/// variables, + - * / ^ and parentheses. Division is only allowed by a
/// nonzero constant. Throws SyntaxError (with the byte offset in the
/// message) or UnknownVariable for a variable outside `allowed`.
RatPoly parse_poly(std::string_view text, unsigned allowed = kXY);

} // namespace stripcert
