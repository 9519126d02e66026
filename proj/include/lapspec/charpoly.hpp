#pragma once

#include "lapspec/matrix.hpp"
#include "lapspec/polynomial.hpp"
#include "lapspec/rational.hpp"

namespace lapspec {

/// Predicted-intermediate-width cap for the exact characteristic polynomial;
/// generous enough for every construction in this library.
inline constexpr unsigned kDefaultCharPolyBits = 1u << 22;

/// Coefficients of det(lambda I - M) in ascending order, leading coefficient
/// exactly 1, by the Faddeev-LeVerrier recurrence.  Limited to order 64:
/// beyond that the float recurrence loses too much accuracy to be useful.
Polynomial<double> char_poly(const DenseMatrix& m);

/// Exact characteristic polynomial of a rational matrix.  The matrix is
/// scaled by the common denominator to an integer matrix, the recurrence runs
/// in integer arithmetic (its trace divisions are exact), and the
/// coefficients are scaled back.  `max_bits` caps the predicted width of the
/// intermediate integers.
Polynomial<Rat> char_poly_exact(const RationalMatrix& m, unsigned max_bits = kDefaultCharPolyBits);

} // namespace lapspec
