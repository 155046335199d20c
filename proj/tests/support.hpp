#pragma once

// Seeded generators shared by the unit tests.

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "zalcman/measure.hpp"
#include "zalcman/series.hpp"

namespace testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

  std::vector<zalcman::Atom> atoms(int max_atoms) {
    std::vector<zalcman::Atom> out(static_cast<std::size_t>(integer(1, max_atoms)));
    double total = 0.0;
    for (auto& a : out) {
      a = {uniform(0.01, 1.0), angle()};
      total += a.weight;
    }
    for (auto& a : out) a.weight /= total;
    return out;
  }

  zalcman::AtomicMeasure measure(int max_atoms = 6) { return zalcman::AtomicMeasure(atoms(max_atoms)); }
  zalcman::AtomicMeasure symmetric_measure(int max_atoms = 6) {
    return zalcman::AtomicMeasure::symmetrized(atoms(max_atoms));
  }

  /// Arbitrary complex series with a_1 = 1 and |a_k| <= k.
  zalcman::CoefficientSeries series(int order) {
    zalcman::ComplexVector<double> c(order);
    c(0) = 1.0;
    for (int k = 1; k < order; ++k) c(k) = std::polar(uniform(0.0, k + 1.0), angle());
    return zalcman::CoefficientSeries(std::move(c));
  }

  /// z_0..z_{L-1} with |z_k| <= 2^{-k}, L <= 8.
  std::vector<std::complex<double>> decaying(bool real) {
    std::vector<std::complex<double>> z(static_cast<std::size_t>(integer(1, 8)));
    double scale = 1.0;
    for (auto& v : z) {
      v = real ? std::complex<double>(uniform(-scale, scale)) : std::polar(uniform(0.0, scale), angle());
      scale *= 0.5;
    }
    return z;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
