#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "lapspec/errors.hpp"

namespace lapspec {

/// Arbitrary-precision integers and rationals used by the exact code paths.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

/// Exact conversion: every finite double is a dyadic rational.
Rat rational_from_double(double x);

/// Parse a decimal literal ("2", "-0.375", "1.5e-3") into an exact rational.
/// The value is stored exactly as written, not rounded through a double.
Rat rational_from_decimal(std::string_view text);

/// Plain "p/q" (or "p" when q == 1) rendering.
std::string rational_to_string(const Rat& r);

/// Total bits across numerator and denominator; used to enforce the
/// precision budget of exact characteristic polynomials.
std::size_t rational_bits(const Rat& r);

} // namespace lapspec
