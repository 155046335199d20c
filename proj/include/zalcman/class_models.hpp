#pragma once

// Class members generated from discrete Herglotz measures, and the catalog of
// extremal functions as coefficient series.

#include <complex>
#include <span>
#include <vector>

#include "zalcman/class_spec.hpp"
#include "zalcman/measure.hpp"
#include "zalcman/series.hpp"

namespace zalcman {

/// c_n = 2 sum_j w_j e^{i n t_j}, n = 1..N. Symmetric measures give exactly real c_n.
CaratheodorySeries caratheodory_from_measure(const AtomicMeasure& measure, int N);

/// Coefficients a_1..a_N of the member of `spec` represented by `measure`.
/// Throws UnsupportedClassError for S_real and SymmetryError for an asymmetric
/// measure with typically_real.
CoefficientSeries series_from_measure(const ClassSpec& spec, const AtomicMeasure& measure, int N);

/// Allocation-free core of series_from_measure, for inner loops.
///
/// Holds the moment buffer between calls; not shareable across threads.
class SeriesBuilder {
 public:
  /// Writes a_1..a_N into `out` (out.size() == N). The caller guarantees
  /// the spec is valid and representable and the atoms form a probability measure.
  void build(const ClassSpec& spec, std::span<const Atom> atoms, bool symmetric, std::span<std::complex<double>> out);

 private:
  std::vector<std::complex<double>> c_;
  std::vector<double> weights_;
  double weights_alpha_ = 0.0;
};

/// Closed-form (or series-algebra) coefficients of a catalog function, then rotated.
CoefficientSeries extremal_series(const ExtremalSpec& spec, int N);

enum class MixtureRule {
  parity_halves,  // odd-indexed and even-indexed weights each sum to 1/2
  convex,         // any convex combination
};

/// sum_k m_k rotate(base, theta_k).
CoefficientSeries mixture_series(std::span<const double> weights, std::span<const double> angles,
                                 const ExtremalSpec& base, int N, MixtureRule rule = MixtureRule::parity_halves);

/// The Caratheodory function the class attaches to f:
/// R: (f' - beta)/(1 - beta); f_over_z: (f/z - beta)/(1 - beta);
/// F1: ((1 - z) f' - beta)/(1 - beta); F2: ((1 - z^2) f' - beta)/(1 - beta);
/// typically_real: (1 - z^2) f / z. Returns c_1..c_{N-1}.
CaratheodorySeries caratheodory_of(const ClassSpec& spec, const CoefficientSeries& series);

}  // namespace zalcman
