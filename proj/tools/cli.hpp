#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "critgroup/decomposition.hpp"

namespace critgroup::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kDisconnectedGraph = 3,
  kHypothesisFails = 4,
  kNotHarmonic = 5,
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string family;
  std::size_t n = 0;
  std::vector<std::size_t> steps;
  std::string base = "edge";
  bool json = false;
  bool oracle = false;
  std::uint64_t seed = 1;
  std::size_t trials = 50;
};

/// Randomised cross-checks of the membership predicates, splits, principality
/// and pullback injectivity against lattice computations.
struct SweepResult {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t membership_mismatches = 0;
  std::size_t split_failures = 0;
  std::size_t principal_mismatches = 0;
  std::size_t injectivity_failures = 0;
  std::size_t positives_p12 = 0;
  std::size_t positives_p = 0;
  bool labeled = false;

  bool pass() const {
    return membership_mismatches == 0 && split_failures == 0 && principal_mismatches == 0 &&
           injectivity_failures == 0;
  }
};

SweepResult property_sweep(const DecompositionContext& ctx, std::size_t trials, std::uint64_t seed);

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_family(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critgroup::cli
