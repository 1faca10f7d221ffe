#include "dualcong/dual.hpp"

#include "dualcong/errors.hpp"

namespace dualcong {

PadicPoint decompose(const Rational& x, std::uint64_t p) {
  const Residue r = reduce_mod(x, Modulus(p, 1));
  Rational t = (x - Rational(Integer(r.value()))) / Rational(Integer(p));
  t.canonicalize();
  return PadicPoint{p, x, r.value(), std::move(t)};
}

std::vector<Rational> dual_transform(std::span<const Rational> a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational sum = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      Rational term = Rational(binom_int(static_cast<long>(n), static_cast<long>(k))) * a[k];
      if (k % 2 == 0) sum += term;
      else sum -= term;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

namespace {

// Coefficients of both closed forms for k = 0..n_max.
struct ClosedForms {
  std::vector<Rational> direct;     // C(x,k) C(x+k,k)
  std::vector<Rational> reflected;  // (-1)^k C(x,k) C(-1-x,k)
};

ClosedForms closed_form_coefficients(unsigned n_max, const Rational& x) {
  ClosedForms forms;
  const Rational mirror = -1 - x;
  for (unsigned k = 0; k <= n_max; ++k) {
    const Rational bx = binom_rational(x, k);
    forms.direct.push_back(bx * binom_rational(x + k, k));
    Rational r = bx * binom_rational(mirror, k);
    if (k % 2 == 1) r = -r;
    forms.reflected.push_back(std::move(r));
  }
  return forms;
}

Rational s_from_forms(unsigned n, const ClosedForms& forms, const Rational& x) {
  Rational first = 0, second = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational c = Rational(binom_int(n, k));
    first += c * forms.direct[k];
    second += c * forms.reflected[k];
  }
  if (first != second)
    throw InternalFormMismatch("closed forms of s_" + std::to_string(n) + "(" + to_string(x) +
                               ") disagree: " + to_string(first) + " vs " + to_string(second));
  return first;
}

}  // namespace

Rational s_exact(unsigned n, const Rational& x) {
  return s_from_forms(n, closed_form_coefficients(n, x), x);
}

Rational sum_squares_exact(std::uint64_t p, const Rational& x) {
  if (p == 0) return 0;
  const auto n_max = static_cast<unsigned>(p - 1);
  const ClosedForms forms = closed_form_coefficients(n_max, x);
  Rational total = 0;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational s = s_from_forms(n, forms, x);
    total += s * s;
  }
  return total;
}

CoefficientTable::CoefficientTable(const PadicPoint& point, unsigned e)
    : modulus_(point.p, e) {
  const std::uint64_t q = modulus_.value();
  const std::uint64_t x = reduce_mod(point.x, modulus_).value();
  values_.resize(point.p);
  values_[0] = 1 % q;
  for (std::uint64_t k = 1; k < point.p; ++k) {
    // (x - k + 1)(x + k) / k^2, every k < p is a unit.
    const std::uint64_t lower = add_mod(x, q - (k - 1) % q, q);
    const std::uint64_t upper = add_mod(x, k % q, q);
    const std::uint64_t inv_k = inverse_mod(k, q);
    std::uint64_t c = mul_mod(values_[k - 1], mul_mod(lower, upper, q), q);
    c = mul_mod(c, mul_mod(inv_k, inv_k, q), q);
    values_[k] = c;
  }
}

Residue sum_squares_mod(const PadicPoint& point, unsigned e) {
  const CoefficientTable table(point, e);
  const std::uint64_t q = table.modulus().value();
  const auto c = table.raw();
  const std::size_t p = c.size();

  // row[k] = C(n,k) mod q, advanced one n at a time by Pascal's rule.
  std::vector<std::uint64_t> row(p, 0);
  row[0] = 1 % q;
  std::uint64_t total = 0;
  for (std::size_t n = 0; n < p; ++n) {
    if (n > 0) {
      for (std::size_t k = n; k > 0; --k) row[k] = add_mod(row[k], row[k - 1], q);
    }
    unsigned __int128 acc = 0;
    // Products are < 2^124; flush before the accumulator can overflow.
    std::size_t pending = 0;
    std::uint64_t s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      acc += static_cast<unsigned __int128>(row[k]) * c[k];
      if (++pending == 8) {
        s = add_mod(s, static_cast<std::uint64_t>(acc % q), q);
        acc = 0;
        pending = 0;
      }
    }
    s = add_mod(s, static_cast<std::uint64_t>(acc % q), q);
    total = add_mod(total, mul_mod(s, s, q), q);
  }
  return Residue::from_unsigned(total, table.modulus());
}

}  // namespace dualcong
