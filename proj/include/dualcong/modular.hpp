#pragma once

#include <cstdint>
#include <string>

#include "dualcong/rational.hpp"

namespace dualcong {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Prime-power modulus p^e. p^e must stay below 2^62 so sums of two residues
/// never overflow and products fit in 128 bits.
class Modulus {
 public:
  /// Throws InvalidPrime if p is not prime, DomainViolation if e = 0 or p^e
  /// exceeds the supported range.
  Modulus(std::uint64_t p, unsigned e);

  std::uint64_t prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return e_; }
  std::uint64_t value() const noexcept { return pe_; }

  /// "p^e" with both parts explicit.
  std::string to_string() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t p_;
  unsigned e_;
  std::uint64_t pe_;
};

/// Element of Z/p^e, stored as the least nonnegative representative.
class Residue {
 public:
  Residue(std::int64_t value, const Modulus& modulus);
  static Residue from_unsigned(std::uint64_t value, const Modulus& modulus);

  std::uint64_t value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return modulus_; }

  /// Representative in (-p^e/2, p^e/2], for display only.
  std::int64_t signed_value() const noexcept;

  Residue operator-() const;
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);

  /// Throws NotInvertible when p divides the value.
  Residue inverse() const;
  Residue pow(std::uint64_t exponent) const;

  /// Same modulus and same value.
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Residue(std::uint64_t value, const Modulus& modulus, int /*raw*/)
      : value_(value), modulus_(modulus) {}

  std::uint64_t value_;
  Modulus modulus_;
};

/// Image of a p-integral rational in Z/p^e. Throws NotPIntegral if v_p(q) < 0.
Residue reduce_mod(const Rational& q, const Modulus& modulus);

// Raw helpers for hot loops; all arguments already reduced modulo `m`.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
/// Inverse of a modulo m for gcd(a, m) = 1; returns 0 if not invertible.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace dualcong
