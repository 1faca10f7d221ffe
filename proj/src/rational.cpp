#include "dualcong/rational.hpp"

#include <cctype>

#include "dualcong/errors.hpp"

namespace dualcong {

int p_adic_valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) return kInfiniteValuation;
  Integer prime;
  mpz_set_ui(prime.get_mpz_t(), p);
  Integer stripped;
  return static_cast<int>(
      mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

int p_adic_valuation(const Rational& q, std::uint64_t p) {
  if (q == 0) return kInfiniteValuation;
  return p_adic_valuation(q.get_num(), p) - p_adic_valuation(q.get_den(), p);
}

bool is_p_integral(const Rational& q, std::uint64_t p) {
  return mpz_divisible_ui_p(q.get_den_mpz_t(), p) == 0;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainViolation("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational binom_rational(const Rational& x, unsigned k) {
  Rational num = 1;
  Integer den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

Integer binom_int(long n, long k) {
  if (k < 0) return 0;
  Integer result;
  if (n >= 0) {
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
  } else {
    Integer nn = n;
    mpz_bin_ui(result.get_mpz_t(), nn.get_mpz_t(),
               static_cast<unsigned long>(k));
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> Integer {
    s = trim(s);
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw DomainViolation("malformed fraction '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw DomainViolation("malformed fraction '" + std::string(text) + "'");
    }
    std::string digits(s);
    if (digits[0] == '+') digits.erase(0, 1);
    return Integer(digits, 10);
  };

  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  Integer num = parse_int(text.substr(0, slash), true);
  Integer den = parse_int(text.substr(slash + 1), false);
  return make_rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace dualcong
