#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dualcong/modular.hpp"
#include "dualcong/rational.hpp"

namespace dualcong {

/// x = m + p*t with m = <x>_p in [0, p-1] and t p-integral.
struct PadicPoint {
  std::uint64_t p;
  Rational x;
  std::uint64_t m;
  Rational t;
};

/// Throws NotPIntegral if v_p(x) < 0, InvalidPrime if p is not prime.
PadicPoint decompose(const Rational& x, std::uint64_t p);

/// a*_n = sum_{k<=n} C(n,k) (-1)^k a_k. An involution.
std::vector<Rational> dual_transform(std::span<const Rational> a);

/// s_n(x), evaluated through both closed forms
///   sum_k C(n,k) C(x,k) C(x+k,k)   and   sum_k C(n,k) (-1)^k C(x,k) C(-1-x,k).
/// Throws InternalFormMismatch if they disagree.
Rational s_exact(unsigned n, const Rational& x);

/// Exact sum_{n=0}^{p-1} s_n(x)^2. Reference oracle; intended for small p.
Rational sum_squares_exact(std::uint64_t p, const Rational& x);

// c[k] = C(x,k) C(x+k,k) mod p^e for 0 <= k < p.
class CoefficientTable {
 public:
  CoefficientTable(const PadicPoint& point, unsigned e);

  const Modulus& modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return values_.size(); }
  Residue at(std::size_t k) const { return Residue::from_unsigned(values_.at(k), modulus_); }
  std::span<const std::uint64_t> raw() const noexcept { return values_; }

 private:
  Modulus modulus_;
  std::vector<std::uint64_t> values_;
};

inline CoefficientTable coefficient_table(const PadicPoint& point, unsigned e) {
  return CoefficientTable(point, e);
}

/// sum_{n=0}^{p-1} s_n(x)^2 mod p^e in O(p^2) residue operations.
Residue sum_squares_mod(const PadicPoint& point, unsigned e);

}  // namespace dualcong
