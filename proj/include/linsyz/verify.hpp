#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "linsyz/field.hpp"
#include "linsyz/verdict.hpp"

namespace linsyz {

struct RunConfig {
  Field field = Field::prime(10007);
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::uint64_t budget = 10'000'000;
  std::vector<std::uint32_t> q_list{5, 7, 11};
  bool timings = false;
};

/// "5,7,11" -> primes; throws std::invalid_argument on junk or non-primes.
std::vector<std::uint32_t> parse_qlist(const std::string& text);
std::string config_echo(const RunConfig& cfg);

/// Tallies of one property over a corpus.
struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::uint64_t pass = 0, fail = 0, unknown = 0, falsification = 0, skipped = 0;
  Verdict verdict = Verdict::pass;
  std::vector<std::string> notes;
  /// dump of the first failing instance
  std::string counterexample;

  void record(Verdict v, const std::function<std::string()>& dump = {});
  void skip() { ++skipped; }
  std::uint64_t instances() const { return pass + fail + unknown + falsification; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;
  Verdict verdict() const;
};

/// prop1 prop2 companion prop3 thm4 cor5 lemma7 thm6 rnc, in report order.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

/// One worker thread per suite; results come back in the order of names.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const RunConfig& cfg);

/// 0 pass, 1 fail or FALSIFICATION, 2 unknown.
int exit_code(Verdict v);

void write_report(std::ostream& os, const std::string& command, const RunConfig& cfg,
                  const std::vector<SuiteReport>& suites);

}  // namespace linsyz
