#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace sgag {

/// One frozen expected value from the worked examples.
struct FixtureCheck {
  std::string name;
  std::function<std::int64_t()> compute;
  std::int64_t expected = 0;
};

/// The built-in table of worked examples: Hilbert data of small ideals,
/// classification verdicts of the standard families, Herzog matrices.
std::vector<FixtureCheck> example_fixture();

/// Runs a fixture, printing one line per mismatch. Returns 0 if all match
/// (an empty fixture warns and returns 0) and 1 otherwise.
int run_fixture(const std::vector<FixtureCheck>& fixture, std::ostream& out, std::ostream& err);

}  // namespace sgag
