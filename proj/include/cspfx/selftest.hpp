// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded property suites over the whole library. Each suite returns one
// outcome per check; the CLI prints them and the acceptance runner asserts
// them.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cspfx {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::size_t checked = 0;  // instances examined
  std::string detail;       // counts, or the first counterexample
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_size = 5;     // term corpus bound for the normal-form suites
  std::size_t depth3_samples = 16;  // extra synchronisation trees of depth 3
  std::string lamc_dir;         // directory of .lamc programs with .json expectations
  std::string theory;           // restricts the axioms suite to one theory when set
};

// axioms, completeness, definability, monad, homomorphisms, eqsys, negative,
// synctrees, theta, termination, lamc.
const std::vector<std::string>& selftest_suites();

// Throws Error for an unknown suite.
std::vector<CheckOutcome> run_suite(const std::string& suite, const SelftestOptions& opts);

}  // namespace cspfx
