// verify: batch driver for the dual-sequence congruence checks.
//
//   verify --check main-theorem --primes 5..97 --x "1,-1/3,-1/4,-1/6"
//
// Exit codes: 0 all jobs passed or were skipped, 1 any failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "dualcong/errors.hpp"
#include "dualcong/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Verify dual-sequence supercongruences over sweeps of primes and p-adic points"};
  app.footer(
      "Checks: binom-p1 lemma21 halfline sigma1 sigma2 sigma3 sigma5 block-decomposition\n"
      "        main-theorem mod-p2 kw rv parametric-dual p4-1 p4-2 p4-3 p4-4 identities all\n"
      "Negative fractions: use --x=-1/3 or quote a list starting with a digit.");
  dualcong::RawOptions raw;
  dualcong::register_cli(app, raw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  dualcong::SweepConfig cfg;
  try {
    cfg = dualcong::resolve_config(raw);
  } catch (const dualcong::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const dualcong::SweepResult result = dualcong::run_sweep(cfg);
    dualcong::emit_report(result.reports, cfg.format, cfg.output);
    const auto& s = result.summary;
    std::cerr << "jobs: " << result.reports.size() << "  pass: " << s.passed << "  fail: " << s.failed
              << "  skipped: " << s.skipped << "  error: " << s.errors << '\n';
    for (const auto& ce : s.counterexamples)
      std::cerr << "*** COUNTEREXAMPLE to an open mod-p^4 conjecture: " << ce << " ***\n";
    return result.exit_code();
  } catch (const dualcong::Error& e) {
    std::cerr << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
}
