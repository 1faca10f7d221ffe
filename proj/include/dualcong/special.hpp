#pragma once

#include <cstdint>
#include <filesystem>
#include <shared_mutex>
#include <vector>

#include "dualcong/rational.hpp"

namespace dualcong {

/// H_n^{(r)} = sum_{k=1}^{n} 1/k^r.
Rational harmonic(unsigned n, unsigned r = 1);

/// Legendre symbol (a | q) by Euler's criterion. q must be an odd prime.
int legendre(std::int64_t a, std::uint64_t q);

// Growable tables of Bernoulli numbers (B_1 = -1/2) and Euler (secant)
// numbers. Reads take a shared lock; extension takes the unique lock.
class SpecialCache {
 public:
  static constexpr const char* kFormatTag = "dualcong-special-cache v1";

  Rational bernoulli(unsigned n);
  Integer euler(unsigned n);

  /// Extends both tables through index n so later reads never write.
  void reserve(unsigned n);

  std::size_t bernoulli_size() const;
  std::size_t euler_size() const;

  /// Loads entries from a cache file. A missing file is not an error.
  /// Spot-checks a sample of loaded entries against recomputation from
  /// scratch and throws CacheMismatch on disagreement, IOError on bad syntax.
  void load(const std::filesystem::path& path);
  /// Writes the versioned line format `B <n> <num>/<den>` and `E <n> <int>`.
  void save(const std::filesystem::path& path) const;

 private:
  void extend_bernoulli_locked(unsigned n);
  void extend_euler_locked(unsigned n);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> bernoulli_;
  std::vector<Integer> euler_;
};

/// Process-wide cache used by the free functions below.
SpecialCache& special_cache();

Rational bernoulli(unsigned n);
/// B_n(y) = sum_k C(n,k) B_k y^{n-k}.
Rational bernoulli_poly(unsigned n, const Rational& y);
Integer euler_number(unsigned n);

// Uncached reference recurrences, used to validate cache contents.
std::vector<Rational> bernoulli_table(unsigned n);
std::vector<Integer> euler_table(unsigned n);

}  // namespace dualcong
