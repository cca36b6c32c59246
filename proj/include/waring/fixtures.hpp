#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "waring/secant.hpp"

namespace waring {

/// Run configuration shared by the CLI and the fixture suite.
using RunConfig = TerraciniOptions;

struct FixtureOutcome {
  bool passed;
  std::string detail;
};

/// One golden value from the literature, checked against the engines.
struct Fixture {
  std::string name;
  /// Depends on random "generic" choices; retried once with a fresh seed.
  bool generic;
  std::function<FixtureOutcome(const RunConfig &, std::uint64_t seed)> check;
};

const std::vector<Fixture> &paper_fixtures();

/// Runs fixture `index` with the retry policy applied.
FixtureOutcome run_fixture(std::size_t index, const RunConfig &config);

} // namespace waring
