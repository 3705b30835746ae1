#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ospxp {

/// Arbitrary-precision rational scalar used by the exact classification path.
using Rational = boost::multiprecision::cpp_rational;

/// Rising factorial (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1.
Rational pochhammer(const Rational& x, long k);

/// Parses "p/q" or an integer string. Returns nullopt for anything else
/// (decimal input is routed to the floating-point path by callers).
std::optional<Rational> parse_rational(const std::string& s);

std::string format_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace ospxp
