#pragma once

#include <string>

#include "qma/scalar.hpp"

namespace qma {

/// Parse the scalar grammar: integer literals, `q`, `+ - * / ^ ( )`.
/// Throws FormatError with a character position on bad input.
Scalar parse_scalar(const std::string& text);

/// Canonical string form; parse_scalar(scalar_to_string(x)) == x.
std::string scalar_to_string(const Scalar& x);

/// Parse a plain rational ("5/2", "-3"); rejects anything involving q.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& x);

/// Exact conversion of a constant scalar; throws DomainError otherwise.
Rational scalar_to_rational(const Scalar& x);

}  // namespace qma
