#pragma once

#include <gmpxx.h>

#include <string>

namespace filiform {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator, which is exactly the contract every routine in this
/// library relies on. Floating point is banned from all cohomology code.
using Rational = mpq_class;

/// Parses "p/q" or "p" (arbitrary precision, optional leading '-').
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rat_from_string(const std::string& s);

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rational& q);

/// Lowest terms and positive denominator.
bool rat_is_canonical(const Rational& q);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Rational binomial(long n, long k);

}  // namespace filiform
