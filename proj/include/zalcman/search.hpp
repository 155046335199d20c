#pragma once

// Multistart simplex search for the largest value of the functional over
// K-atom measures of a class.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "zalcman/bounds.hpp"
#include "zalcman/measure.hpp"

namespace zalcman {

struct SearchConfig {
  int atoms = 6;
  int restarts = 200;
  int max_iters = 500;
  std::uint64_t seed = 42;
  double f_tol = 1e-14;        // simplex value spread that ends a descent cycle
  double initial_step = 0.5;   // simplex edge for angles; logits use twice this

  void validate() const;
};

struct RestartSummary {
  int restart;
  double value;
  int iterations;
};

struct SearchResult {
  double best_value;
  AtomicMeasure best_measure;
  BoundResult bound;
  std::optional<double> bound_gap;  // bound - best_value, when the bound is valid
  int iterations_used;              // summed over restarts
  int best_restart;
  std::vector<RestartSummary> trace;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value;
  int iterations;
};

/// Derivative-free minimization. Re-seeds the simplex around the incumbent after each
/// converged cycle until a cycle stops improving or the iteration budget runs out.
NelderMeadResult minimize_nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                                      const Eigen::VectorXd& x0, const Eigen::VectorXd& step, int max_iters,
                                      double f_tol);

/// Maximizes phi over measures with cfg.atoms atoms (mirror pairs for typically_real).
/// Bitwise reproducible for fixed (spec, q, cfg).
SearchResult maximize_functional(const ClassSpec& spec, const FunctionalQuery& q, const SearchConfig& cfg);

struct SweepRow {
  double lambda;
  BoundResult bound;
  double best_found;
  std::optional<double> gap;
  AtomicMeasure best_measure;
};

/// One independent search per lambda; row i is seeded from (cfg.seed, i).
std::vector<SweepRow> sweep(const ClassSpec& spec, int n, int m, std::span<const double> lambda_grid,
                            const SearchConfig& cfg);

/// Seed of restart/row `index` derived from a base seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace zalcman
