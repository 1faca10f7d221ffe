#include "dualcong/identities.hpp"

#include <algorithm>

#include "dualcong/errors.hpp"
#include "dualcong/special.hpp"

namespace dualcong {

IdentityOutcome make_outcome(Rational lhs, Rational rhs) {
  const bool equal = lhs == rhs;
  return IdentityOutcome{std::move(lhs), std::move(rhs), equal};
}

namespace {

Rational q(const Integer& n) { return Rational(n); }

// sum_{n} w(n)/(n+1) C(n,j) C(j,n-k) over max(j,k) <= n <= j+k, where the
// product of binomials is nonzero.
template <typename Weight>
Rational liu_inner_sum(unsigned j, unsigned k, Weight weight) {
  Rational sum = 0;
  const unsigned lo = j > k ? j : k;
  for (unsigned n = lo; n <= j + k; ++n) {
    const Integer c = binom_int(n, j) * binom_int(j, static_cast<long>(n) - k);
    if (c == 0) continue;
    sum += q(c) * weight(n) / Rational(n + 1);
  }
  return sum;
}

}  // namespace

IdentityOutcome identity_jk(unsigned j, unsigned k) {
  Rational lhs = liu_inner_sum(j, k, [](unsigned n) { return Rational(sign_pow(n)); });
  Rational rhs = Rational(sign_pow(j + k)) / (Rational(j + k + 1) * q(binom_int(j + k, j)));
  return make_outcome(std::move(lhs), std::move(rhs));
}

IdentityOutcome identity_Mk(unsigned M, unsigned k) {
  Rational lhs = 0;
  for (unsigned j = 0; j <= M; ++j) {
    Rational term = q(binom_int(M, j) * binom_int(M + j, j)) /
                    (Rational(j + k + 1) * q(binom_int(j + k, j)));
    if (j % 2 == 1) lhs -= term;
    else lhs += term;
  }
  Rational rhs = q(binom_int(k, M)) / (Rational(k + 1) * q(binom_int(M + k + 1, M)));
  return make_outcome(std::move(lhs), std::move(rhs));
}

Polynomial poly_y_expansion(unsigned M) {
  // weight[n] = sum_{j,k<=M} C(M,j)C(M+j,j)C(M,k)C(M+k,k) C(n,j)C(j,n-k) / (n+1)
  std::vector<Rational> weight(2 * M + 1, Rational(0));
  for (unsigned j = 0; j <= M; ++j) {
    const Integer bj = binom_int(M, j) * binom_int(M + j, j);
    for (unsigned k = 0; k <= M; ++k) {
      const Integer bk = binom_int(M, k) * binom_int(M + k, k);
      for (unsigned n = std::max(j, k); n <= j + k; ++n) {
        const Integer c = binom_int(n, j) * binom_int(j, static_cast<long>(n) - k);
        if (c != 0) weight[n] += q(bj * bk * c) / Rational(n + 1);
      }
    }
  }

  // C(y-1,n) = prod_{i=1}^{n} (y - i) / n!, grown one factor at a time.
  Polynomial result(2 * M + 1, Rational(0));
  Polynomial falling{Rational(1)};
  Integer factorial = 1;
  for (unsigned n = 0; n <= 2 * M; ++n) {
    if (n > 0) {
      Polynomial next(falling.size() + 1, Rational(0));
      for (std::size_t d = 0; d < falling.size(); ++d) {
        next[d + 1] += falling[d];
        next[d] -= falling[d] * Rational(n);
      }
      falling = std::move(next);
      factorial *= n;
    }
    if (weight[n] == 0) continue;
    const Rational scale = weight[n] / q(factorial);
    for (std::size_t d = 0; d < falling.size(); ++d) result[d] += scale * falling[d];
  }
  return result;
}

PolyYOutcome identity_poly_y(unsigned M) {
  const Polynomial poly = poly_y_expansion(M);
  PolyYOutcome out;
  for (std::size_t d = 0; d < 4; ++d) out.coefficients[d] = d < poly.size() ? poly[d] : Rational(0);
  const Rational lead = Rational(sign_pow(M)) / Rational(2 * M + 1);
  out.targets = {lead, Rational(0), Rational(-4) * lead * harmonic(M, 2), Rational(0)};
  out.equal = out.coefficients == out.targets;
  return out;
}

IdentityOutcome gould_1_132(unsigned M, unsigned N) {
  if (M == 0 || M >= N) throw DomainViolation("gould_1_132 needs 0 < M < N");
  Rational lhs = 0, harmonic_tail = 0;
  for (unsigned k = M; k < N; ++k) {
    lhs += q(binom_int(k - 1, M - 1)) / Rational(N - k);
    harmonic_tail += Rational(1, k);
  }
  return make_outcome(std::move(lhs), q(binom_int(N - 1, M - 1)) * harmonic_tail);
}

IdentityOutcome gould_4_2(unsigned N, int b, int c) {
  if (c <= 0 || b < c) throw DomainViolation("gould_4_2 needs b >= c > 0");
  Rational lhs = 0;
  for (unsigned k = 0; k <= N; ++k) {
    Rational term = q(binom_int(N, k)) / q(binom_int(b + static_cast<long>(k), c));
    if (k % 2 == 1) lhs -= term;
    else lhs += term;
  }
  Rational rhs = Rational(c) / (Rational(static_cast<long>(N) + c) *
                                q(binom_int(static_cast<long>(N) + b, b - c)));
  return make_outcome(std::move(lhs), std::move(rhs));
}

IdentityOutcome chu_vandermonde(const Rational& a, const Rational& b, unsigned n) {
  Rational lhs = 0;
  for (unsigned j = 0; j <= n; ++j) lhs += binom_rational(a, j) * binom_rational(b, n - j);
  return make_outcome(std::move(lhs), binom_rational(a + b, n));
}

IdentityOutcome liu_T_identity(unsigned N, unsigned j, unsigned k) {
  if (N == 0 || j >= N || k >= N) throw DomainViolation("liu_T_identity needs 0 <= j,k < N");
  Rational lhs = 0;
  for (unsigned n = 0; n < N; ++n) lhs += q(binom_int(n, j) * binom_int(n, k));
  Rational rhs = Rational(N) *
                 liu_inner_sum(j, k, [N](unsigned n) { return q(binom_int(N - 1, n)); });
  return make_outcome(std::move(lhs), std::move(rhs));
}

}  // namespace dualcong
