#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace visgame::geom {

/// Exact rational coordinate. GMP keeps every value in canonical reduced
/// form, so equality is structural.
using Scalar = mpq_class;

/// Parses "p/q", an integer, or a decimal literal ("-1.25", "3e-2") exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

double to_double(const Scalar& value);

int sign(const Scalar& value);

/// num/den in canonical form (mpq_class(num, den) alone does not reduce).
Scalar ratio(long num, long den);

}  // namespace visgame::geom
