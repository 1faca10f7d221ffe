#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualcong/congruences.hpp"

namespace CLI {
class App;
}

namespace dualcong {

enum class ReportFormat { kJson, kCsv };

// Declarative description of a batch run.
struct SweepConfig {
  std::vector<CheckId> checks;
  std::vector<std::uint64_t> primes;
  std::vector<Rational> points;
  std::optional<unsigned> default_exponent;
  std::map<CheckId, unsigned> exponent_overrides;
  unsigned jobs = 1;
  ReportFormat format = ReportFormat::kJson;
  std::optional<std::filesystem::path> output;  // stdout when unset
  std::optional<std::filesystem::path> cache_path;
  std::uint64_t seed = 0;
  bool allow_slow = false;

  /// Exponent for a check: override, then default, then the statement's own.
  unsigned exponent_for(CheckId id) const;
};

/// Largest prime the exact-oracle checks accept without --allow-slow.
inline constexpr std::uint64_t kOracleScaleLimit = 31;

/// True for checks whose cost is exact-rational O(p^3) or worse.
bool is_oracle_scale(CheckId id);

/// Raw option strings, as given on the command line or in a config file.
struct RawOptions {
  std::map<std::string, std::string> values;
  bool allow_slow = false;
};

/// Registers the `verify` flags on `app`, writing into `raw`.
void register_cli(CLI::App& app, RawOptions& raw);

/// Parses the flat `key = value` config format ('#' starts a comment).
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// Validates raw options into a config. Flags in `raw` override the file named
/// by its "config" entry. Throws UsageError naming the offending field.
SweepConfig resolve_config(const RawOptions& raw);

/// Convenience: CLI11 parse + resolve. `args` excludes the program name.
SweepConfig parse_config(const std::vector<std::string>& args);

/// "a..b" (filtered to primes) or "p1,p2,..." (each must be prime).
std::vector<std::uint64_t> parse_primes(std::string_view text);
/// Comma-separated exact fractions.
std::vector<Rational> parse_points(std::string_view text);

// One unit of work in a sweep.
struct Job {
  CheckId check{};
  std::uint64_t p = 0;
  std::optional<Rational> x;
  std::optional<unsigned> index;
  std::optional<SequenceSpec> sequence;
  unsigned exponent = 0;
};

/// Cartesian product of checks, primes and points, in deterministic order.
std::vector<Job> expand_jobs(const SweepConfig& cfg);

/// Runs one job, turning precondition violations into "skipped" reports and
/// any other exception into an "error" report.
CheckReport run_job(const Job& job, const SweepConfig& cfg);

struct SweepSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::vector<std::string> counterexamples;  // failing open-conjecture jobs
};

struct SweepResult {
  std::vector<CheckReport> reports;
  SweepSummary summary;
  /// 0 if nothing failed or errored, otherwise 1.
  int exit_code() const;
};

SweepResult run_sweep(const SweepConfig& cfg);
/// Runs prebuilt jobs with cfg.jobs workers; report order follows `jobs`.
SweepResult run_jobs(const std::vector<Job>& jobs, const SweepConfig& cfg);

// Exhaustive exact-identity ranges.
struct IdentitySweep {
  std::size_t instances = 0;
  std::vector<std::string> failures;
};
IdentitySweep run_identity_sweep(std::uint64_t seed = 0);

void write_report(std::ostream& out, const std::vector<CheckReport>& reports, ReportFormat format);
/// Writes to `path`, or to stdout when unset. Throws IOError.
void emit_report(const std::vector<CheckReport>& reports, ReportFormat format,
                 const std::optional<std::filesystem::path>& path);

}  // namespace dualcong
