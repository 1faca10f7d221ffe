#include "dualcong/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "dualcong/dual.hpp"
#include "dualcong/errors.hpp"
#include "dualcong/identities.hpp"
#include "dualcong/special.hpp"

namespace dualcong {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_u64(std::string_view text, const std::string& field) {
  text = trim(text);
  std::uint64_t value = 0;
  if (text.empty()) throw UsageError(field + ": empty value");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw UsageError(field + ": '" + std::string(text) + "' is not a nonnegative integer");
    const std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
    if (value > (UINT64_MAX - digit) / 10) throw UsageError(field + ": value out of range");
    value = value * 10 + digit;
  }
  return value;
}

unsigned statement_exponent(CheckId id) {
  switch (id) {
    case CheckId::kBinomP1Expansion:
    case CheckId::kModP2:
    case CheckId::kParametricDual:
      return 2;
    case CheckId::kP4MinusHalf:
    case CheckId::kP4MinusQuarter:
    case CheckId::kP4MinusThird:
    case CheckId::kP4MinusSixth:
      return 4;
    default:
      return 3;
  }
}

bool uses_point(CheckId id) {
  switch (id) {
    case CheckId::kLemma21:
    case CheckId::kHalflineExpansion:
    case CheckId::kSigma1:
    case CheckId::kSigma2:
    case CheckId::kSigma3:
    case CheckId::kSigma5:
    case CheckId::kBlockDecomposition:
    case CheckId::kMainTheorem:
    case CheckId::kModP2:
    case CheckId::kParametricDual:
      return true;
    default:
      return false;
  }
}

std::optional<P4Statement> p4_statement(CheckId id) {
  switch (id) {
    case CheckId::kP4MinusHalf: return P4Statement::kMinusHalf;
    case CheckId::kP4MinusQuarter: return P4Statement::kMinusQuarter;
    case CheckId::kP4MinusThird: return P4Statement::kMinusThird;
    case CheckId::kP4MinusSixth: return P4Statement::kMinusSixth;
    default: return std::nullopt;
  }
}

std::vector<SequenceSpec> default_sequences(std::uint64_t seed) {
  std::vector<SequenceSpec> seqs = {
      SequenceSpec::constant(1),
      SequenceSpec::polynomial({Rational(0), Rational(1)}),
      SequenceSpec::central_binomial(),
  };
  for (std::uint64_t i = 0; i < 5; ++i) seqs.push_back(SequenceSpec::seeded_random(seed + i));
  return seqs;
}

}  // namespace

unsigned SweepConfig::exponent_for(CheckId id) const {
  if (auto it = exponent_overrides.find(id); it != exponent_overrides.end()) return it->second;
  if (default_exponent) return *default_exponent;
  return statement_exponent(id);
}

bool is_oracle_scale(CheckId id) {
  switch (id) {
    case CheckId::kBinomP1Expansion:
    case CheckId::kLemma21:
    case CheckId::kHalflineExpansion:
    case CheckId::kSigma1:
    case CheckId::kSigma2:
    case CheckId::kSigma3:
    case CheckId::kSigma5:
    case CheckId::kBlockDecomposition:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Configuration

void register_cli(CLI::App& app, RawOptions& raw) {
  auto store = [&raw](const char* key) {
    return [&raw, key](const std::string& v) { raw.values[key] = v; };
  };
  app.add_option_function<std::string>("--config", store("config"),
                                       "Flat key = value file; flags override it");
  app.add_option_function<std::string>("--check", store("check"),
                                       "Comma-separated check ids, or 'all'");
  app.add_option_function<std::string>("--primes", store("primes"), "a..b or p1,p2,...");
  app.add_option_function<std::string>("--x", store("x"), "Comma-separated exact fractions");
  app.add_option_function<std::string>("--exp", store("exp"), "e, or check=e,... overrides");
  app.add_option_function<std::string>("--jobs", store("jobs"), "Worker threads (>= 1)");
  app.add_option_function<std::string>("--format", store("format"), "json or csv");
  app.add_option_function<std::string>("--out", store("out"), "Report path (default stdout)");
  app.add_option_function<std::string>("--cache", store("cache"), "Bernoulli/Euler cache file");
  app.add_option_function<std::string>("--seed", store("seed"), "Seed for random sequences");
  app.add_flag_callback("--allow-slow", [&raw] { raw.allow_slow = true; },
                        "Permit exact-oracle checks above p = 31");
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> values;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
    values[key] = std::string(value);
  }
  return values;
}

std::vector<std::uint64_t> parse_primes(std::string_view text) {
  text = trim(text);
  std::vector<std::uint64_t> primes;
  if (text.empty()) return primes;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::uint64_t lo = parse_u64(text.substr(0, dots), "primes");
    const std::uint64_t hi = parse_u64(text.substr(dots + 2), "primes");
    if (lo > hi) throw UsageError("primes: empty range " + std::string(text));
    for (std::uint64_t n = lo; n <= hi; ++n)
      if (is_prime(n)) primes.push_back(n);
    return primes;
  }
  for (std::string_view part : split(text, ',')) {
    const std::uint64_t n = parse_u64(part, "primes");
    if (!is_prime(n)) throw UsageError("primes: " + std::to_string(n) + " is not prime");
    primes.push_back(n);
  }
  return primes;
}

std::vector<Rational> parse_points(std::string_view text) {
  std::vector<Rational> points;
  if (trim(text).empty()) return points;
  for (std::string_view part : split(text, ',')) {
    try {
      points.push_back(parse_rational(part));
    } catch (const Error&) {
      throw UsageError("x: '" + std::string(part) + "' is not an exact fraction");
    }
  }
  return points;
}

SweepConfig resolve_config(const RawOptions& raw) {
  std::map<std::string, std::string> values;
  bool allow_slow = raw.allow_slow;
  if (auto it = raw.values.find("config"); it != raw.values.end()) {
    std::ifstream in(it->second);
    if (!in) throw UsageError("config: cannot read " + it->second);
    std::stringstream buffer;
    buffer << in.rdbuf();
    values = parse_config_text(buffer.str());
  }
  if (auto it = values.find("allow-slow"); it != values.end()) {
    if (it->second == "true" || it->second == "1") allow_slow = true;
    else if (it->second != "false" && it->second != "0")
      throw UsageError("allow-slow: expected true or false");
    values.erase(it);
  }
  for (const auto& [key, value] : raw.values) values[key] = value;

  static const std::vector<std::string> known = {"config", "check", "primes", "x",    "exp",
                                                 "jobs",   "format", "out",   "cache", "seed"};
  for (const auto& [key, value] : values)
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw UsageError(key + ": unknown option");

  SweepConfig cfg;
  cfg.allow_slow = allow_slow;
  auto get = [&](const char* key) -> std::optional<std::string> {
    if (auto it = values.find(key); it != values.end()) return it->second;
    return std::nullopt;
  };

  if (auto v = get("check")) {
    for (std::string_view name : split(*v, ',')) {
      if (name.empty()) continue;
      if (name == "all") {
        for (CheckId id : all_checks()) cfg.checks.push_back(id);
        continue;
      }
      const auto id = parse_check_name(name);
      if (!id) throw UsageError("check: unknown check id '" + std::string(name) + "'");
      cfg.checks.push_back(*id);
    }
  }
  if (auto v = get("primes")) cfg.primes = parse_primes(*v);
  if (auto v = get("x")) cfg.points = parse_points(*v);
  if (auto v = get("exp")) {
    for (std::string_view part : split(*v, ',')) {
      if (part.empty()) continue;
      const auto eq = part.find('=');
      const auto e = parse_u64(eq == std::string_view::npos ? part : part.substr(eq + 1), "exp");
      if (e == 0 || e > 16) throw UsageError("exp: exponent must lie in [1, 16]");
      if (eq == std::string_view::npos) {
        cfg.default_exponent = static_cast<unsigned>(e);
      } else {
        const auto id = parse_check_name(trim(part.substr(0, eq)));
        if (!id) throw UsageError("exp: unknown check id '" + std::string(part.substr(0, eq)) + "'");
        cfg.exponent_overrides[*id] = static_cast<unsigned>(e);
      }
    }
  }
  if (auto v = get("jobs")) {
    const auto jobs = parse_u64(*v, "jobs");
    if (jobs < 1 || jobs > 1024) throw UsageError("jobs: must lie in [1, 1024]");
    cfg.jobs = static_cast<unsigned>(jobs);
  }
  if (auto v = get("format")) {
    if (*v == "json") cfg.format = ReportFormat::kJson;
    else if (*v == "csv") cfg.format = ReportFormat::kCsv;
    else throw UsageError("format: expected json or csv, got '" + *v + "'");
  }
  if (auto v = get("out"); v && !v->empty()) cfg.output = *v;
  if (auto v = get("cache"); v && !v->empty()) cfg.cache_path = *v;
  if (auto v = get("seed")) cfg.seed = parse_u64(*v, "seed");
  return cfg;
}

SweepConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"verify"};
  RawOptions raw;
  register_cli(app, raw);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return resolve_config(raw);
}

// ---------------------------------------------------------------------------
// Jobs

std::vector<Job> expand_jobs(const SweepConfig& cfg) {
  std::vector<Job> jobs;
  for (CheckId id : cfg.checks) {
    const unsigned e = cfg.exponent_for(id);
    if (id == CheckId::kIdentities) {
      jobs.push_back(Job{id, 0, std::nullopt, std::nullopt, std::nullopt, 0});
      continue;
    }
    for (std::uint64_t p : cfg.primes) {
      if (!uses_point(id)) {
        if (id == CheckId::kBinomP1Expansion && !(p > kOracleScaleLimit && !cfg.allow_slow)) {
          for (unsigned n = 0; n < p; ++n) jobs.push_back(Job{id, p, std::nullopt, n, std::nullopt, e});
        } else {
          jobs.push_back(Job{id, p, std::nullopt, std::nullopt, std::nullopt, e});
        }
        continue;
      }
      for (const Rational& x : cfg.points) {
        if (id == CheckId::kParametricDual) {
          for (const auto& seq : default_sequences(cfg.seed))
            jobs.push_back(Job{id, p, x, std::nullopt, seq, e});
          continue;
        }
        if (id == CheckId::kLemma21 || id == CheckId::kHalflineExpansion) {
          // Expand over k only when the point satisfies the case hypothesis;
          // otherwise a single job reports the reason.
          std::optional<std::uint64_t> k_max;
          if (is_prime(p) && p > 2 && is_p_integral(x, p) &&
              !(p > kOracleScaleLimit && !cfg.allow_slow)) {
            const std::uint64_t m = decompose(x, p).m;
            const std::uint64_t half = (p - 1) / 2;
            if (id == CheckId::kLemma21 && m <= half) k_max = p - 1;
            if (id == CheckId::kHalflineExpansion && m == half && p > 3) k_max = half;
          }
          if (!k_max) {
            jobs.push_back(Job{id, p, x, std::nullopt, std::nullopt, e});
          } else {
            for (unsigned k = 0; k <= *k_max; ++k) jobs.push_back(Job{id, p, x, k, std::nullopt, e});
          }
          continue;
        }
        jobs.push_back(Job{id, p, x, std::nullopt, std::nullopt, e});
      }
    }
  }
  return jobs;
}

namespace {

std::string index_label(const Job& job) {
  if (!job.index) return {};
  return (job.check == CheckId::kBinomP1Expansion ? "n=" : "k=") + std::to_string(*job.index);
}

CheckReport skeleton(const Job& job) {
  CheckReport report;
  report.check = job.check;
  report.p = job.p;
  report.x = job.x;
  report.extra = index_label(job);
  if (job.sequence) {
    report.extra = "seq=" + job.sequence->label();
    if (job.sequence->kind == SequenceSpec::Kind::kSeededRandom) report.seed = job.sequence->seed;
  }
  return report;
}

CheckReport identities_report(const Job& job, std::uint64_t seed) {
  CheckReport report = skeleton(job);
  const IdentitySweep sweep = run_identity_sweep(seed);
  report.pass = sweep.failures.empty();
  report.status = report.pass ? CheckStatus::kPass : CheckStatus::kFail;
  report.detail = std::to_string(sweep.instances) + " instances";
  if (!report.pass) report.detail += "; first failure: " + sweep.failures.front();
  report.seed = seed;
  return report;
}

CheckReport dispatch(const Job& job, const SweepConfig& cfg) {
  const Rational x = job.x.value_or(Rational(0));
  const unsigned k = job.index.value_or(0);
  switch (job.check) {
    case CheckId::kBinomP1Expansion: return check_binom_p1_expansion(job.p, k);
    case CheckId::kLemma21: return check_lemma21(job.p, x, k);
    case CheckId::kHalflineExpansion: return check_halfline_expansion(job.p, x, k);
    case CheckId::kSigma1: return check_sigma_lemma(SigmaBlock::kOne, job.p, x);
    case CheckId::kSigma2: return check_sigma_lemma(SigmaBlock::kTwo, job.p, x);
    case CheckId::kSigma3: return check_sigma_lemma(SigmaBlock::kThree, job.p, x);
    case CheckId::kSigma5: return check_sigma_lemma(SigmaBlock::kFive, job.p, x);
    case CheckId::kBlockDecomposition: return check_block_decomposition(job.p, x);
    case CheckId::kMainTheorem: return check_main_theorem(job.p, x, job.exponent);
    case CheckId::kModP2: return check_mod_p2(job.p, x, job.exponent);
    case CheckId::kKimotoWakayama: return check_kw(job.p, job.exponent);
    case CheckId::kRvRefinement: return check_rv_refinement(job.p, job.exponent);
    case CheckId::kParametricDual:
      return check_parametric_dual(job.p, x, job.sequence.value_or(SequenceSpec::constant(1)),
                                   job.exponent);
    case CheckId::kIdentities: return identities_report(job, cfg.seed);
    default: break;
  }
  if (auto which = p4_statement(job.check)) return check_p4_conjecture(*which, job.p, job.exponent);
  throw DomainViolation("unhandled check");
}

bool is_precondition_error(const Error& e) {
  static const std::vector<std::string> kinds = {"NotPIntegral", "ExcludedPoint", "CaseOutOfRange",
                                                 "InvalidPrime", "DomainViolation"};
  return std::find(kinds.begin(), kinds.end(), e.kind()) != kinds.end();
}

}  // namespace

CheckReport run_job(const Job& job, const SweepConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  CheckReport report;
  if (is_oracle_scale(job.check) && job.p > kOracleScaleLimit && !cfg.allow_slow) {
    report = skeleton(job);
    report.status = CheckStatus::kSkipped;
    report.detail = "oracle-scale guard: p > " + std::to_string(kOracleScaleLimit) +
                    " needs --allow-slow";
  } else {
    try {
      report = dispatch(job, cfg);
    } catch (const Error& e) {
      report = skeleton(job);
      report.status = is_precondition_error(e) ? CheckStatus::kSkipped : CheckStatus::kError;
      report.detail = e.kind() + ": " + e.what();
    } catch (const std::exception& e) {
      report = skeleton(job);
      report.status = CheckStatus::kError;
      report.detail = e.what();
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

int SweepResult::exit_code() const { return (summary.failed + summary.errors) == 0 ? 0 : 1; }

SweepResult run_jobs(const std::vector<Job>& jobs, const SweepConfig& cfg) {
  // Populate the shared tables before dispatch so workers only read them.
  std::uint64_t max_special = 0;
  for (const Job& job : jobs)
    if (job.check == CheckId::kRvRefinement || p4_statement(job.check))
      max_special = std::max(max_special, job.p);
  if (max_special >= 3) special_cache().reserve(static_cast<unsigned>(max_special - 2));

  SweepResult result;
  result.reports.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) result.reports[i] = run_job(jobs[i], cfg);
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(jobs.size(), 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  for (const CheckReport& r : result.reports) {
    switch (r.status) {
      case CheckStatus::kPass: ++result.summary.passed; break;
      case CheckStatus::kFail: ++result.summary.failed; break;
      case CheckStatus::kSkipped: ++result.summary.skipped; break;
      case CheckStatus::kError: ++result.summary.errors; break;
    }
    if (r.status == CheckStatus::kFail) {
      if (auto which = p4_statement(r.check); which && is_open_conjecture(*which))
        result.summary.counterexamples.push_back(std::string(check_name(r.check)) +
                                                 " p=" + std::to_string(r.p));
    }
  }
  return result;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.cache_path) special_cache().load(*cfg.cache_path);
  SweepResult result = run_jobs(expand_jobs(cfg), cfg);
  if (cfg.cache_path) special_cache().save(*cfg.cache_path);
  return result;
}

// ---------------------------------------------------------------------------
// Identities

IdentitySweep run_identity_sweep(std::uint64_t seed) {
  IdentitySweep sweep;
  auto record = [&](bool equal, const std::string& what) {
    ++sweep.instances;
    if (!equal) sweep.failures.push_back(what);
  };
  for (unsigned j = 0; j <= 25; ++j)
    for (unsigned k = 0; k <= 25; ++k)
      record(identity_jk(j, k).equal, "identity_jk(" + std::to_string(j) + "," + std::to_string(k) + ")");
  for (unsigned M = 0; M <= 25; ++M)
    for (unsigned k = 0; k <= 25; ++k)
      record(identity_Mk(M, k).equal, "identity_Mk(" + std::to_string(M) + "," + std::to_string(k) + ")");
  for (unsigned M = 0; M <= 12; ++M)
    record(identity_poly_y(M).equal, "identity_poly_y(" + std::to_string(M) + ")");
  for (unsigned N = 2; N <= 30; ++N)
    for (unsigned M = 1; M < N; ++M)
      record(gould_1_132(M, N).equal, "gould_1_132(" + std::to_string(M) + "," + std::to_string(N) + ")");
  for (unsigned N = 0; N <= 20; ++N)
    for (int b = 1; b <= 20; ++b)
      for (int c = 1; c <= b; ++c)
        record(gould_4_2(N, b, c).equal, "gould_4_2(" + std::to_string(N) + "," + std::to_string(b) +
                                             "," + std::to_string(c) + ")");
  for (unsigned N = 1; N <= 25; ++N)
    for (unsigned j = 0; j < N; ++j)
      for (unsigned k = 0; k < N; ++k)
        record(liu_T_identity(N, j, k).equal, "liu_T_identity(" + std::to_string(N) + "," +
                                                  std::to_string(j) + "," + std::to_string(k) + ")");
  std::mt19937_64 engine(seed);
  auto random_rational = [&engine] {
    const auto num = static_cast<long>(engine() % 201) - 100;
    const auto den = static_cast<long>(engine() % 50) + 1;
    return make_rational(num, den);
  };
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational();
    const Rational b = random_rational();
    for (unsigned n = 0; n <= 15; ++n)
      record(chu_vandermonde(a, b, n).equal,
             "chu_vandermonde(" + to_string(a) + "," + to_string(b) + "," + std::to_string(n) + ")");
  }
  return sweep;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

struct Row {
  std::string check, p, x, extra, modulus, lhs, rhs, pass, status, detail, elapsed_ms, seed;
};

Row to_row(const CheckReport& r) {
  Row row;
  row.check = std::string(check_name(r.check));
  row.p = r.p ? std::to_string(r.p) : "";
  row.x = r.x ? to_string(*r.x) : "";
  row.extra = r.extra;
  row.modulus = r.modulus ? r.modulus->to_string() : "";
  row.lhs = r.lhs ? std::to_string(r.lhs->value()) : "";
  row.rhs = r.rhs ? std::to_string(r.rhs->value()) : "";
  row.pass = r.pass ? "true" : "false";
  row.status = std::string(status_name(r.status));
  row.detail = r.detail;
  std::ostringstream ms;
  ms.precision(3);
  ms << std::fixed << r.elapsed.count();
  row.elapsed_ms = ms.str();
  row.seed = r.seed ? std::to_string(*r.seed) : "";
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_report(std::ostream& out, const std::vector<CheckReport>& reports, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    out << "check,p,x,extra,modulus,lhs,rhs,pass,status,detail,elapsed_ms,seed\r\n";
    for (const CheckReport& r : reports) {
      const Row row = to_row(r);
      out << csv_field(row.check) << ',' << csv_field(row.p) << ',' << csv_field(row.x) << ','
          << csv_field(row.extra) << ',' << csv_field(row.modulus) << ',' << csv_field(row.lhs) << ','
          << csv_field(row.rhs) << ',' << csv_field(row.pass) << ',' << csv_field(row.status) << ','
          << csv_field(row.detail) << ',' << csv_field(row.elapsed_ms) << ',' << csv_field(row.seed)
          << "\r\n";
    }
    return;
  }

  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) {
    nlohmann::ordered_json obj;
    obj["check"] = std::string(check_name(r.check));
    obj["p"] = r.p ? nlohmann::ordered_json(r.p) : nlohmann::ordered_json(nullptr);
    obj["x"] = r.x ? nlohmann::ordered_json(to_string(*r.x)) : nlohmann::ordered_json(nullptr);
    obj["extra"] = r.extra;
    obj["modulus"] = r.modulus ? nlohmann::ordered_json(r.modulus->to_string())
                               : nlohmann::ordered_json(nullptr);
    obj["lhs"] = r.lhs ? nlohmann::ordered_json(r.lhs->value()) : nlohmann::ordered_json(nullptr);
    obj["rhs"] = r.rhs ? nlohmann::ordered_json(r.rhs->value()) : nlohmann::ordered_json(nullptr);
    obj["pass"] = r.pass;
    obj["status"] = std::string(status_name(r.status));
    obj["detail"] = r.detail;
    obj["elapsed_ms"] = r.elapsed.count();
    obj["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    array.push_back(std::move(obj));
  }
  out << array.dump(2) << '\n';
}

void emit_report(const std::vector<CheckReport>& reports, ReportFormat format,
                 const std::optional<std::filesystem::path>& path) {
  if (!path) {
    write_report(std::cout, reports, format);
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw IOError("cannot open report file " + path->string());
  write_report(out, reports, format);
  if (!out) throw IOError("error writing report file " + path->string());
}

}  // namespace dualcong
