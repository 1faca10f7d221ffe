#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualcong/modular.hpp"
#include "dualcong/rational.hpp"

namespace dualcong {

enum class CheckId {
  kBinomP1Expansion,
  kLemma21,
  kHalflineExpansion,
  kSigma1,
  kSigma2,
  kSigma3,
  kSigma5,
  kBlockDecomposition,
  kMainTheorem,
  kModP2,
  kKimotoWakayama,
  kRvRefinement,
  kParametricDual,
  kP4MinusHalf,
  kP4MinusQuarter,
  kP4MinusThird,
  kP4MinusSixth,
  kIdentities,
};

/// Stable command-line / report name, e.g. "main-theorem".
std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check_name(std::string_view name);
const std::vector<CheckId>& all_checks();

enum class CheckStatus { kPass, kFail, kSkipped, kError };
std::string_view status_name(CheckStatus status);

struct CheckReport {
  CheckId check{};
  std::uint64_t p = 0;
  std::optional<Rational> x;
  std::string extra;  // index or sequence parameters, e.g. "k=3"
  std::optional<Modulus> modulus;
  std::optional<Residue> lhs;
  std::optional<Residue> rhs;
  bool pass = false;
  CheckStatus status = CheckStatus::kFail;
  std::string detail;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::optional<std::uint64_t> seed;
};

// Arbitrary p-adic integer sequences a_0, a_1, ... for the dual congruences.
struct SequenceSpec {
  enum class Kind { kConstant, kPolynomial, kCentralBinomial, kSeededRandom };

  Kind kind = Kind::kConstant;
  std::vector<Rational> coefficients;  // constant: {c}; polynomial: c_0 + c_1 k + ...
  std::uint64_t seed = 0;

  static SequenceSpec constant(Rational c);
  static SequenceSpec polynomial(std::vector<Rational> coefficients);
  static SequenceSpec central_binomial();
  static SequenceSpec seeded_random(std::uint64_t seed);

  std::vector<Rational> terms(std::size_t count) const;
  std::string label() const;
};

// Each check returns both sides as residues; pass iff they are equal (plus
// any auxiliary assertion named in the check's documentation). Precondition
// violations are thrown as the corresponding dualcong::Error.

/// C(p-1,n) == (-1)^n (1 - p H_n) (mod p^2), 0 <= n <= p-1.
CheckReport check_binom_p1_expansion(std::uint64_t p, unsigned n);

/// p-adic expansion of C(x,k) C(x+k,k) for m = <x>_p <= (p-1)/2:
///   k <= m                          mod p^2
///   p-m <= k <= p-1                 mod p^3
///   m < k <= p-1-m, m < (p-1)/2     mod p^3
/// Throws CaseOutOfRange if m > (p-1)/2.
CheckReport check_lemma21(std::uint64_t p, const Rational& x, unsigned k);

/// Expansion mod p^3 when m = (p-1)/2, 0 <= k <= m.
CheckReport check_halfline_expansion(std::uint64_t p, const Rational& x, unsigned k);

/// sigma_1 .. sigma_9 of the (j,k) double sum, exact. Block s (1-based) is at
/// index s-1. Requires m <= (p-1)/2.
std::array<Rational, 9> sigma_blocks(std::uint64_t p, const Rational& x);

enum class SigmaBlock { kOne = 1, kTwo = 2, kThree = 3, kFive = 5 };
/// Closed form of a single sigma block mod p^3, for m < (p-1)/2.
CheckReport check_sigma_lemma(SigmaBlock which, std::uint64_t p, const Rational& x);

/// sum s_n(x)^2 == s1 + 2 s2 + 2 s3 + s5 (mod p^3), with s6 == s8 == s9 == 0
/// (mod p^3), s2 = s4 and s3 = s7 exactly. For m < (p-1)/2.
CheckReport check_block_decomposition(std::uint64_t p, const Rational& x);

/// sum_{n<p} s_n(x)^2 == (-1)^m (p + 2(x - m)) / (2x + 1) (mod p^e), default e = 3.
CheckReport check_main_theorem(std::uint64_t p, const Rational& x, unsigned e = 3);

/// Same statement mod p^2 under 2x+1 a p-unit.
CheckReport check_mod_p2(std::uint64_t p, const Rational& x, unsigned e = 2);

/// sum J2(n)^2 == (-1 | p) (mod p^3), p odd.
CheckReport check_kw(std::uint64_t p, unsigned e = 3);

/// sum_{k<p} C(-1/2,k)^2 == (-1 | p) - p^2 E_{p-3} (mod p^3), p > 3.
CheckReport check_rv_refinement(std::uint64_t p, unsigned e = 3);

/// sum C(x,k)C(-1-x,k) a_k == (-1)^m sum C(x,k)C(-1-x,k) a*_k (mod p^2).
/// For x in {-1/3, -1/4, -1/6} the sign is also checked against (p|3),
/// (-2|p), (-1|p) respectively.
CheckReport check_parametric_dual(std::uint64_t p, const Rational& x, const SequenceSpec& seq,
                                  unsigned e = 2);

enum class P4Statement { kMinusHalf = 1, kMinusQuarter = 2, kMinusThird = 3, kMinusSixth = 4 };
/// The four mod-p^4 statements at x = -1/2, -1/4, -1/3, -1/6. Only the first
/// is a theorem; the others are reported as evidence.
CheckReport check_p4_conjecture(P4Statement which, std::uint64_t p, unsigned e = 4);
/// Exact right-hand side of a mod-p^4 statement.
Rational p4_rhs(P4Statement which, std::uint64_t p);
/// True for the statements that are still open conjectures.
bool is_open_conjecture(P4Statement which);

}  // namespace dualcong
