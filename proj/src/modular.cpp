#include "dualcong/modular.hpp"

#include <array>

#include "dualcong/errors.hpp"

namespace dualcong {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit to keep the Bezout coefficients exact.
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return 0;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                           17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t p, unsigned e) : p_(p), e_(e), pe_(1) {
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  if (e == 0) throw DomainViolation("modulus exponent must be >= 1");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  for (unsigned i = 0; i < e; ++i) {
    if (pe_ > kLimit / p)
      throw DomainViolation("modulus " + std::to_string(p) + "^" + std::to_string(e) +
                            " exceeds 2^62");
    pe_ *= p;
  }
}

std::string Modulus::to_string() const {
  return std::to_string(p_) + "^" + std::to_string(e_);
}

Residue::Residue(std::int64_t value, const Modulus& modulus) : value_(0), modulus_(modulus) {
  const auto m = static_cast<std::int64_t>(modulus.value());
  std::int64_t r = value % m;
  if (r < 0) r += m;
  value_ = static_cast<std::uint64_t>(r);
}

Residue Residue::from_unsigned(std::uint64_t value, const Modulus& modulus) {
  return Residue(value % modulus.value(), modulus, 0);
}

std::int64_t Residue::signed_value() const noexcept {
  const std::uint64_t m = modulus_.value();
  if (value_ > m / 2) return static_cast<std::int64_t>(value_) - static_cast<std::int64_t>(m);
  return static_cast<std::int64_t>(value_);
}

namespace {
void require_same(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus()))
    throw ModulusMismatch("residues modulo " + a.modulus().to_string() + " and " +
                          b.modulus().to_string());
}
}  // namespace

Residue Residue::operator-() const {
  return Residue(value_ == 0 ? 0 : modulus_.value() - value_, modulus_, 0);
}

Residue operator+(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(add_mod(a.value_, b.value_, a.modulus_.value()), a.modulus_, 0);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same(a, b);
  return a + (-b);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(mul_mod(a.value_, b.value_, a.modulus_.value()), a.modulus_, 0);
}

Residue Residue::inverse() const {
  if (value_ % modulus_.prime() == 0)
    throw NotInvertible(std::to_string(value_) + " is not a unit modulo " +
                        modulus_.to_string());
  return Residue(inverse_mod(value_, modulus_.value()), modulus_, 0);
}

Residue Residue::pow(std::uint64_t exponent) const {
  return Residue(pow_mod(value_, exponent, modulus_.value()), modulus_, 0);
}

Residue reduce_mod(const Rational& q, const Modulus& modulus) {
  if (!is_p_integral(q, modulus.prime()))
    throw NotPIntegral(to_string(q) + " has negative " + std::to_string(modulus.prime()) +
                       "-adic valuation");
  const std::uint64_t m = modulus.value();
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), m);
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), m);
  return Residue::from_unsigned(mul_mod(num, inverse_mod(den, m), m), modulus);
}

}  // namespace dualcong
