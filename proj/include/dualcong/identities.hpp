#pragma once

#include <array>
#include <vector>

#include "dualcong/rational.hpp"

namespace dualcong {

// Both sides of an exact identity instance. `equal` iff lhs == rhs.
struct IdentityOutcome {
  Rational lhs;
  Rational rhs;
  bool equal;
};

IdentityOutcome make_outcome(Rational lhs, Rational rhs);

/// sum_{n=0}^{j+k} (-1)^n/(n+1) C(n,j) C(j,n-k) = (-1)^{j+k} / ((j+k+1) C(j+k,j)).
IdentityOutcome identity_jk(unsigned j, unsigned k);

/// sum_{j=0}^{M} (-1)^j C(M,j) C(M+j,j) / ((j+k+1) C(j+k,j))
///   = C(k,M) / ((k+1) C(M+k+1,M)).
IdentityOutcome identity_Mk(unsigned M, unsigned k);

/// Dense polynomial with exact coefficients, index = degree.
using Polynomial = std::vector<Rational>;

/// Low-order coefficients of the triple sum
///   sum_{j,k<=M} sum_{n<=j+k} 1/(n+1) C(M,j)C(M+j,j)C(M,k)C(M+k,k)C(n,j)C(j,n-k)C(y-1,n)
/// as a polynomial in y, against (-1)^M/(2M+1) (1 - 4 y^2 H_M^{(2)}).
struct PolyYOutcome {
  std::array<Rational, 4> coefficients;
  std::array<Rational, 4> targets;
  bool equal;
};
PolyYOutcome identity_poly_y(unsigned M);

/// Full expansion of the triple sum in y (degree <= 2M).
Polynomial poly_y_expansion(unsigned M);

/// sum_{k=M}^{N-1} C(k-1,M-1)/(N-k) = C(N-1,M-1) sum_{k=M}^{N-1} 1/k, 0 < M < N.
/// Throws DomainViolation otherwise.
IdentityOutcome gould_1_132(unsigned M, unsigned N);

/// sum_{k=0}^{N} (-1)^k C(N,k)/C(b+k,c) = c / ((N+c) C(N+b, b-c)), b >= c > 0.
/// Throws DomainViolation otherwise.
IdentityOutcome gould_4_2(unsigned N, int b, int c);

/// sum_{j=0}^{n} C(a,j) C(b,n-j) = C(a+b,n).
IdentityOutcome chu_vandermonde(const Rational& a, const Rational& b, unsigned n);

/// sum_{n=0}^{N-1} C(n,j)C(n,k) = N sum_{n=0}^{j+k} 1/(n+1) C(n,j)C(j,n-k)C(N-1,n),
/// for 0 <= j,k < N. Throws DomainViolation otherwise.
IdentityOutcome liu_T_identity(unsigned N, unsigned j, unsigned k);

}  // namespace dualcong
