#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dualcong/errors.hpp"
#include "dualcong/modular.hpp"
#include "dualcong/rational.hpp"
#include "oracles.hpp"

using namespace dualcong;

TEST_CASE("p_adic_valuation examples") {
  CHECK(p_adic_valuation(Rational(49, 3), 7) == 2);
  CHECK(p_adic_valuation(Rational(0), 5) == kInfiniteValuation);
  // -7/3: numerator 7^1, denominator coprime to 7
  const Rational q(-7, 3);
  CHECK(oracle::valuation(q.get_num(), 7) - oracle::valuation(q.get_den(), 7) == 1);
  CHECK(p_adic_valuation(q, 7) == 1);
  CHECK(p_adic_valuation(Rational(5, 125), 5) == -2);
}

TEST_CASE("valuation is additive and matches trial division") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (int i = 0; i < 200; ++i) {
      Rational a = oracle::random_rational(rng, 0, 5000, 500);
      Rational b = oracle::random_rational(rng, 0, 5000, 500);
      if (a == 0 || b == 0) continue;
      CHECK(p_adic_valuation(a * b, p) == p_adic_valuation(a, p) + p_adic_valuation(b, p));
      CHECK(p_adic_valuation(a, p) ==
            oracle::valuation(a.get_num(), p) - oracle::valuation(a.get_den(), p));
    }
  }
}

TEST_CASE("reduce_mod examples") {
  const Modulus m125(5, 3);
  CHECK(oracle::residue_by_search(Rational(-5, 3), 125) == 40);
  CHECK(reduce_mod(Rational(-5, 3), m125).value() == 40);
  CHECK(reduce_mod(Rational(0), Modulus(7, 2)).value() == 0);
  CHECK_THROWS_AS(reduce_mod(Rational(1, 7), Modulus(7, 3)), NotPIntegral);
}

TEST_CASE("residue operations") {
  const Modulus m(5, 3);
  CHECK(oracle::residue_by_search(Rational(1, 3), 125) == 42);
  CHECK(Residue(3, m).inverse().value() == 42);
  CHECK((Residue(40, m) * Residue(0, m)).value() == 0);
  CHECK_THROWS_AS(Residue(5, m).inverse(), NotInvertible);
  CHECK_THROWS_AS(Residue(1, m) + Residue(1, Modulus(5, 2)), ModulusMismatch);
  CHECK_THROWS_AS(Residue(1, m) * Residue(1, Modulus(7, 3)), ModulusMismatch);
  CHECK((-Residue(1, m)).value() == 124);
  CHECK(Residue(-1, m).value() == 124);
  CHECK(Residue(124, m).signed_value() == -1);
  CHECK(Residue(2, m).pow(7).value() == 3);  // 128 mod 125
  CHECK((Residue(3, m) - Residue(7, m)).value() == 121);
}

TEST_CASE("modulus construction") {
  CHECK_THROWS_AS(Modulus(9, 2), InvalidPrime);
  CHECK_THROWS_AS(Modulus(1, 1), InvalidPrime);
  CHECK_THROWS_AS(Modulus(5, 0), DomainViolation);
  CHECK_THROWS_AS(Modulus(2147483647ULL, 3), DomainViolation);  // > 2^62
  CHECK(Modulus(4999, 4).value() == 4999ULL * 4999 * 4999 * 4999);
  CHECK(Modulus(7, 3).to_string() == "7^3");
}

TEST_CASE("is_prime agrees with trial division") {
  const auto primes = oracle::primes_up_to(5000);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    const bool expected = idx < primes.size() && primes[idx] == n;
    if (expected) ++idx;
    CHECK(is_prime(n) == expected);
  }
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {3u, 5u, 7u, 13u, 97u}) {
    for (unsigned e = 1; e <= 4; ++e) {
      const Modulus m(p, e);
      for (int i = 0; i < 100; ++i) {
        const Rational a = oracle::random_rational(rng, p);
        const Rational b = oracle::random_rational(rng, p);
        CHECK(reduce_mod(a + b, m) == reduce_mod(a, m) + reduce_mod(b, m));
        CHECK(reduce_mod(a * b, m) == reduce_mod(a, m) * reduce_mod(b, m));
        CHECK(reduce_mod(-a, m) == -reduce_mod(a, m));
      }
    }
  }
}

TEST_CASE("reduction is tower compatible") {
  std::mt19937_64 rng(13);
  for (std::uint64_t p : {2u, 3u, 5u, 11u, 31u}) {
    for (unsigned e = 2; e <= 5; ++e) {
      const Modulus hi(p, e), lo(p, e - 1);
      for (int i = 0; i < 100; ++i) {
        const Rational q = oracle::random_rational(rng, p);
        CHECK(reduce_mod(q, hi).value() % lo.value() == reduce_mod(q, lo).value());
        if (hi.value() <= 100000)
          CHECK(reduce_mod(q, hi).value() == oracle::residue_by_search(q, hi.value()));
      }
    }
  }
}

TEST_CASE("binom_rational") {
  CHECK(binom_rational(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binom_rational(Rational(17, 5), 0) == 1);
  CHECK(binom_rational(Rational(3), 5) == 0);
  CHECK(binom_rational(Rational(10), 3) == 120);
  CHECK(binom_int(-1, 2) == 1);
  CHECK(binom_int(4, -1) == 0);
  CHECK(binom_int(3, 5) == 0);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Rational x = oracle::random_rational(rng, 0, 100, 20);
    for (unsigned k = 1; k <= 20; ++k) {
      CHECK(binom_rational(x, k) == binom_rational(x - 1, k - 1) + binom_rational(x - 1, k));
      CHECK(binom_rational(x, k) == oracle::binom(x, k));
    }
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(parse_rational(" 6/4 ") == Rational(3, 2));
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("2/-4"), DomainViolation);
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("0.5"), DomainViolation);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainViolation);
  CHECK_THROWS_AS(parse_rational(""), DomainViolation);
  CHECK_THROWS_AS(parse_rational("1/"), DomainViolation);
  CHECK_THROWS_AS(parse_rational("abc"), DomainViolation);
}
