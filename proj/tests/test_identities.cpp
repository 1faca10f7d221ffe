#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dualcong/errors.hpp"
#include "dualcong/identities.hpp"
#include "oracles.hpp"

using namespace dualcong;

namespace {

void check_both(const IdentityOutcome& o, const Rational& value) {
  CHECK(o.lhs == value);
  CHECK(o.rhs == value);
  CHECK(o.equal);
}

// Triple sum evaluated pointwise at a rational y, with oracle binomials.
Rational triple_sum_at(unsigned M, const Rational& y) {
  Rational total = 0;
  for (unsigned j = 0; j <= M; ++j)
    for (unsigned k = 0; k <= M; ++k)
      for (unsigned n = 0; n <= j + k; ++n) {
        if (n < k) continue;
        Rational term = Rational(oracle::pascal(M, j) * oracle::pascal(M + j, j) *
                                 oracle::pascal(M, k) * oracle::pascal(M + k, k) *
                                 oracle::pascal(n, j) * oracle::pascal(j, n - k));
        total += term * oracle::binom(y - 1, n) / (n + 1);
      }
  return total;
}

Rational evaluate(const Polynomial& poly, const Rational& y) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * y + *it;
  return acc;
}

}  // namespace

TEST_CASE("identity_jk") {
  check_both(identity_jk(1, 1), Rational(1, 6));
  check_both(identity_jk(0, 0), 1);
  CHECK(Rational(-1, 4 * 3) == Rational(-1, 12));
  check_both(identity_jk(2, 1), Rational(-1, 12));
  for (unsigned j = 0; j <= 25; ++j)
    for (unsigned k = 0; k <= 25; ++k) CHECK(identity_jk(j, k).equal);
}

TEST_CASE("identity_Mk") {
  check_both(identity_Mk(1, 1), Rational(1, 2) - Rational(1, 3));
  for (unsigned k = 0; k <= 10; ++k) check_both(identity_Mk(0, k), Rational(1, k + 1));
  check_both(identity_Mk(2, 1), 0);
  for (unsigned M = 0; M <= 25; ++M)
    for (unsigned k = 0; k <= 25; ++k) CHECK(identity_Mk(M, k).equal);
}

TEST_CASE("identity_poly_y") {
  auto o = identity_poly_y(0);
  CHECK(o.coefficients[0] == 1);
  CHECK(o.coefficients[1] == 0);
  CHECK(o.coefficients[2] == 0);
  CHECK(o.coefficients[3] == 0);
  CHECK(o.equal);

  o = identity_poly_y(1);
  CHECK(o.coefficients[0] == Rational(-1, 3));
  CHECK(o.coefficients[2] == Rational(4, 3));
  CHECK(o.equal);

  o = identity_poly_y(2);
  CHECK(oracle::harmonic(2, 2) == Rational(5, 4));
  CHECK(o.coefficients[0] == Rational(1, 5));
  CHECK(o.coefficients[2] == -1);
  CHECK(o.equal);

  for (unsigned M = 0; M <= 12; ++M) {
    const auto r = identity_poly_y(M);
    CHECK(r.equal);
    CHECK(r.coefficients == r.targets);
  }
}

TEST_CASE("poly_y expansion matches pointwise evaluation") {
  for (unsigned M = 0; M <= 4; ++M) {
    const Polynomial poly = poly_y_expansion(M);
    CHECK(poly.size() <= 2 * M + 1);
    for (const Rational& y : {Rational(0), Rational(1), Rational(3), Rational(-2), Rational(1, 3),
                              Rational(7, 5)})
      CHECK(evaluate(poly, y) == triple_sum_at(M, y));
  }
}

TEST_CASE("gould_1_132") {
  check_both(gould_1_132(1, 3), Rational(3, 2));
  // single term C(M-1,M-1)/1 on the left, C(M,M-1)/M on the right
  for (unsigned M = 1; M <= 10; ++M) check_both(gould_1_132(M, M + 1), 1);
  check_both(gould_1_132(2, 5), Rational(13, 3));
  CHECK_THROWS_AS(gould_1_132(0, 3), DomainViolation);
  CHECK_THROWS_AS(gould_1_132(3, 3), DomainViolation);
  for (unsigned N = 2; N <= 30; ++N)
    for (unsigned M = 1; M < N; ++M) CHECK(gould_1_132(M, N).equal);
}

TEST_CASE("gould_4_2") {
  check_both(gould_4_2(1, 1, 1), Rational(1, 2));
  for (int b = 1; b <= 6; ++b)
    for (int c = 1; c <= b; ++c)
      check_both(gould_4_2(0, b, c), Rational(1) / Rational(oracle::pascal(b, b - c)));
  check_both(gould_4_2(2, 3, 2), Rational(1, 10));
  CHECK_THROWS_AS(gould_4_2(2, 1, 2), DomainViolation);
  CHECK_THROWS_AS(gould_4_2(2, 3, 0), DomainViolation);
  CHECK_THROWS_AS(gould_4_2(2, 3, -1), DomainViolation);
  for (unsigned N = 0; N <= 20; ++N)
    for (int b = 1; b <= 20; ++b)
      for (int c = 1; c <= b; ++c) CHECK(gould_4_2(N, b, c).equal);
}

TEST_CASE("chu_vandermonde") {
  check_both(chu_vandermonde(1, 1, 1), 2);
  check_both(chu_vandermonde(Rational(-1, 2), Rational(-1, 2), 2), 1);
  check_both(chu_vandermonde(Rational(7, 3), 0, 4), oracle::binom(Rational(7, 3), 4));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const Rational a = oracle::random_rational(rng, 0, 50, 12);
    const Rational b = oracle::random_rational(rng, 0, 50, 12);
    for (unsigned n = 0; n <= 15; ++n) CHECK(chu_vandermonde(a, b, n).equal);
  }
}

TEST_CASE("liu_T_identity") {
  check_both(liu_T_identity(3, 1, 1), 5);
  check_both(liu_T_identity(2, 0, 0), 2);
  check_both(liu_T_identity(2, 0, 1), 1);
  CHECK_THROWS_AS(liu_T_identity(3, 3, 0), DomainViolation);
  CHECK_THROWS_AS(liu_T_identity(3, 0, 5), DomainViolation);
  for (unsigned N = 1; N <= 25; ++N)
    for (unsigned j = 0; j < N; ++j)
      for (unsigned k = 0; k < N; ++k) {
        auto o = liu_T_identity(N, j, k);
        CHECK(o.equal);
        // left side by direct summation
        Integer direct = 0;
        for (unsigned n = 0; n < N; ++n) direct += oracle::pascal(n, j) * oracle::pascal(n, k);
        CHECK(o.lhs == Rational(direct));
      }
}

TEST_CASE("IdentityOutcome equal flag tracks equality") {
  CHECK(make_outcome(1, 1).equal);
  CHECK_FALSE(make_outcome(1, Rational(1, 2)).equal);
}
