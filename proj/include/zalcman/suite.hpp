#pragma once

// Property suites behind `zalcman verify`. Each record is one checked
// (statement, branch, extremal) pair or one aggregated randomized battery.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "zalcman/verify.hpp"

namespace zalcman {

struct SuiteOptions {
  double tol = kBoundTolerance;                  // bound and equality checks
  double membership_tol = kMembershipTolerance;  // Hermitian forms, Toeplitz eigenvalues
  std::uint64_t seed = 42;
  int samples = 1000;   // random measures per class
  int z_sequences = 8;  // random z sequences per measure
  GridSpec grid{};
};

struct SuiteRecord {
  std::string suite;
  std::string theorem;  // class or statement checked
  std::string branch;
  std::string extremal;
  bool passed = false;
  double margin = 0.0;  // >= -tolerance when passed; worst case for batteries
  std::optional<double> bound;
  std::optional<double> functional_value;
  std::string detail;
};

/// sharpness, continuity, hermitian, oracles, structural, guards, membership.
const std::vector<std::string>& suite_names();

/// Runs one suite, or all of them for "all". Throws ParameterError for an unknown name.
std::vector<SuiteRecord> run_suite(std::string_view name, const SuiteOptions& opts);

std::string to_json(const SuiteRecord& r);

/// Representative parameter values used when a suite sweeps a class.
std::vector<ClassSpec> representative_specs(ClassId id);

/// Random probability measure with 1..max_atoms atoms; mirror-paired when symmetric.
AtomicMeasure random_measure(std::mt19937_64& rng, int max_atoms, bool symmetric);

}  // namespace zalcman
