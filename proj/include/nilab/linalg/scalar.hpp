#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nilab::linalg {

/// Exact rational number. GMP keeps every value canonical after each
/// arithmetic operation: gcd(|p|, q) = 1, q > 0, zero is 0/1.
using Scalar = mpq_class;

/// Dense coordinate vector in K^d.
using Vector = std::vector<Scalar>;

/// "p/q", with "/q" omitted when q = 1 (e.g. "-3", "7/2").
std::string to_string(const Scalar& x);

/// Parses "p" or "p/q" (optional leading '-', decimal digits only). The
/// result is canonicalized, so "4/6" reads as 2/3. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }
inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

bool is_zero(const Vector& v);

}  // namespace nilab::linalg
