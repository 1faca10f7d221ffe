#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace dualcong {

using Integer = mpz_class;
// Always kept canonical: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;

/// Sentinel returned by p_adic_valuation for zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// v_p(q) = v_p(numerator) - v_p(denominator); kInfiniteValuation for q = 0.
int p_adic_valuation(const Rational& q, std::uint64_t p);
int p_adic_valuation(const Integer& n, std::uint64_t p);

/// True iff v_p(q) >= 0, i.e. p does not divide the reduced denominator.
bool is_p_integral(const Rational& q, std::uint64_t p);

/// Builds num/den in canonical form. Throws DomainViolation on den = 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Generalized binomial x(x-1)...(x-k+1)/k!; 1 for k = 0.
Rational binom_rational(const Rational& x, unsigned k);

/// Integer binomial C(n, k) for integer n (possibly negative) and k >= 0.
Integer binom_int(long n, long k);

/// (-1)^n as an integer.
inline int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

/// Parses "a", "-a", "a/b" with optional surrounding whitespace. Decimals and
/// anything else are rejected with DomainViolation.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);

}  // namespace dualcong
