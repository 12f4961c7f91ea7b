#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgag/report.hpp"
#include "sgag/semigroup.hpp"

namespace sgag {

/// Law suites understood by the scanner, in canonical order.
const std::vector<std::string>& all_suites();

/// "all" or a comma-separated list of suite names; DomainError otherwise.
std::vector<std::string> parse_checks(const std::string& text);

struct ScanConfig {
  std::int64_t genus_max = 8;
  /// When > 0, also scan every non-symmetric H = ⟨a1,a2,a3⟩ with a3 <= a3_max.
  Value a3_max = 0;
  std::vector<std::string> checks = all_suites();
  unsigned workers = 1;
};

struct LawOutcome {
  std::string suite;
  std::string law;
  bool passed = true;
  std::string observed;  // filled on failure
};

struct LawTally {
  std::string suite;
  std::string law;
  std::int64_t checked = 0;
  std::int64_t passed = 0;
};

struct Counterexample {
  std::vector<Value> generators;
  std::int64_t genus = 0;
  std::string suite;
  std::string law;
  std::string observed;
};

struct ScanResult {
  std::int64_t semigroups = 0;
  std::vector<LawTally> tallies;
  std::vector<Counterexample> counterexamples;

  bool clean() const { return counterexamples.empty(); }
};

/// Runs the selected suites on one semigroup. Exceptions thrown by the
/// library are reported as failed laws, never propagated.
std::vector<LawOutcome> check_semigroup(const NumericalSemigroup& h,
                                        const std::vector<std::string>& suites);

/// Non-symmetric semigroups with exactly three minimal generators
/// a1 < a2 < a3 <= a3_max.
std::vector<NumericalSemigroup> three_generated_nonsymmetric(Value a3_max);

/// Semigroups covered by a config, sorted by (genus, gap set), no repeats.
std::vector<NumericalSemigroup> scan_population(const ScanConfig& config);

ScanResult run_scan(const ScanConfig& config);

Json scan_to_json(const ScanConfig& config, const ScanResult& result);
std::string scan_to_csv(const ScanResult& result);

}  // namespace sgag
