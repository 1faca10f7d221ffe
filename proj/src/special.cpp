#include "dualcong/special.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <string>

#include "dualcong/errors.hpp"
#include "dualcong/modular.hpp"

namespace dualcong {

Rational harmonic(unsigned n, unsigned r) {
  Rational sum = 0;
  for (unsigned k = 1; k <= n; ++k) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, r);
    sum += Rational(Integer(1), power);
  }
  sum.canonicalize();
  return sum;
}

int legendre(std::int64_t a, std::uint64_t q) {
  if (q == 2 || !is_prime(q)) throw InvalidPrime("Legendre symbol needs an odd prime, got " + std::to_string(q));
  const auto qq = static_cast<std::int64_t>(q);
  std::int64_t r = a % qq;
  if (r < 0) r += qq;
  if (r == 0) return 0;
  const std::uint64_t euler = pow_mod(static_cast<std::uint64_t>(r), (q - 1) / 2, q);
  return euler == 1 ? 1 : -1;
}

namespace {

// Appends B_k for k = table.size() .. n using sum_{k=0}^{n} C(n+1,k) B_k = 0.
void grow_bernoulli(std::vector<Rational>& table, unsigned n) {
  for (unsigned i = static_cast<unsigned>(table.size()); i <= n; ++i) {
    if (i == 0) {
      table.emplace_back(1);
      continue;
    }
    if (i > 1 && i % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    Rational sum = 0;
    for (unsigned k = 0; k < i; ++k) {
      if (table[k] == 0) continue;
      sum += Rational(binom_int(i + 1, k)) * table[k];
    }
    Rational b = -sum / Rational(i + 1);
    b.canonicalize();
    table.push_back(std::move(b));
  }
}

// Secant numbers: E_odd = 0, sum_{k=0}^{m} C(2m,2k) E_{2k} = 0 for m >= 1.
void grow_euler(std::vector<Integer>& table, unsigned n) {
  for (unsigned i = static_cast<unsigned>(table.size()); i <= n; ++i) {
    if (i == 0) {
      table.emplace_back(1);
      continue;
    }
    if (i % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    Integer sum = 0;
    for (unsigned k = 0; k < i; k += 2) sum += binom_int(i, k) * table[k];
    table.push_back(-sum);
  }
}

}  // namespace

std::vector<Rational> bernoulli_table(unsigned n) {
  std::vector<Rational> table;
  grow_bernoulli(table, n);
  return table;
}

std::vector<Integer> euler_table(unsigned n) {
  std::vector<Integer> table;
  grow_euler(table, n);
  return table;
}

void SpecialCache::extend_bernoulli_locked(unsigned n) { grow_bernoulli(bernoulli_, n); }
void SpecialCache::extend_euler_locked(unsigned n) { grow_euler(euler_, n); }

Rational SpecialCache::bernoulli(unsigned n) {
  {
    std::shared_lock lock(mutex_);
    if (n < bernoulli_.size()) return bernoulli_[n];
  }
  std::unique_lock lock(mutex_);
  extend_bernoulli_locked(n);
  return bernoulli_[n];
}

Integer SpecialCache::euler(unsigned n) {
  {
    std::shared_lock lock(mutex_);
    if (n < euler_.size()) return euler_[n];
  }
  std::unique_lock lock(mutex_);
  extend_euler_locked(n);
  return euler_[n];
}

void SpecialCache::reserve(unsigned n) {
  std::unique_lock lock(mutex_);
  extend_bernoulli_locked(n);
  extend_euler_locked(n);
}

std::size_t SpecialCache::bernoulli_size() const {
  std::shared_lock lock(mutex_);
  return bernoulli_.size();
}

std::size_t SpecialCache::euler_size() const {
  std::shared_lock lock(mutex_);
  return euler_.size();
}

void SpecialCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;

  std::string line;
  if (!std::getline(in, line) || line != std::string("# ") + kFormatTag)
    throw IOError(path.string() + ": missing or unknown cache format tag");

  std::vector<Rational> bern;
  std::vector<Integer> eul;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string tag, value;
    unsigned index = 0;
    if (!(fields >> tag >> index >> value))
      throw IOError(path.string() + ":" + std::to_string(line_no) + ": malformed entry");
    try {
      if (tag == "B") {
        if (index != bern.size()) throw IOError("non-contiguous B index");
        bern.push_back(parse_rational(value));
      } else if (tag == "E") {
        if (index != eul.size()) throw IOError("non-contiguous E index");
        Rational v = parse_rational(value);
        if (v.get_den() != 1) throw IOError("non-integer Euler number");
        eul.push_back(v.get_num());
      } else {
        throw IOError("unknown tag '" + tag + "'");
      }
    } catch (const Error& e) {
      throw IOError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }

  // Spot-check: the first 16 entries and the last entry of each table.
  auto sample = [](std::size_t size) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size && i < 16; ++i) idx.push_back(i);
    if (size > 16) idx.push_back(size - 1);
    return idx;
  };
  if (!bern.empty()) {
    const auto fresh = bernoulli_table(static_cast<unsigned>(bern.size() - 1));
    for (std::size_t i : sample(bern.size()))
      if (fresh[i] != bern[i])
        throw CacheMismatch(path.string() + ": B_" + std::to_string(i) + " disagrees");
  }
  if (!eul.empty()) {
    const auto fresh = euler_table(static_cast<unsigned>(eul.size() - 1));
    for (std::size_t i : sample(eul.size()))
      if (fresh[i] != eul[i])
        throw CacheMismatch(path.string() + ": E_" + std::to_string(i) + " disagrees");
  }

  std::unique_lock lock(mutex_);
  if (bern.size() > bernoulli_.size()) bernoulli_ = std::move(bern);
  if (eul.size() > euler_.size()) euler_ = std::move(eul);
}

void SpecialCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IOError("cannot write cache file " + path.string());
  std::shared_lock lock(mutex_);
  out << "# " << kFormatTag << '\n';
  for (std::size_t i = 0; i < bernoulli_.size(); ++i)
    out << "B " << i << ' ' << bernoulli_[i].get_num().get_str() << '/'
        << bernoulli_[i].get_den().get_str() << '\n';
  for (std::size_t i = 0; i < euler_.size(); ++i)
    out << "E " << i << ' ' << euler_[i].get_str() << '\n';
  if (!out) throw IOError("error writing cache file " + path.string());
}

SpecialCache& special_cache() {
  static SpecialCache cache;
  return cache;
}

Rational bernoulli(unsigned n) { return special_cache().bernoulli(n); }

Integer euler_number(unsigned n) { return special_cache().euler(n); }

Rational bernoulli_poly(unsigned n, const Rational& y) {
  Rational sum = 0;
  Rational power = 1;  // y^{n-k}, built from k = n downwards
  for (unsigned k = n + 1; k-- > 0;) {
    sum += Rational(binom_int(n, k)) * bernoulli(k) * power;
    power *= y;
  }
  sum.canonicalize();
  return sum;
}

}  // namespace dualcong
