#pragma once

#include <gmpxx.h>

#include <string>

namespace bestofn {

// Exact arithmetic used by the exact DP engine and the closed forms.
// Backed by GMP; Rational is always kept in canonical (reduced) form.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Serializes as "num/den" (always with the slash, even for integers).
std::string to_fraction_string(const Rational& q);

/// Parses "3/5", "0.6", "7e-2"-free decimal, or a bare integer into an
/// exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// True when the text is a decimal literal (contains '.'), which the CLI
/// interprets as a request for float mode.
bool looks_like_decimal(const std::string& text);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace bestofn
