#pragma once

// Bound checks, sharpness gaps, the Hermitian-form membership tests for P and T,
// the Caratheodory-Toeplitz criterion, and brute-force grid oracles for the two
// coefficient lemmas on P.

#include <complex>
#include <span>

#include "zalcman/bounds.hpp"
#include "zalcman/class_models.hpp"
#include "zalcman/series.hpp"

namespace zalcman {

inline constexpr double kMembershipTolerance = 1e-10;
inline constexpr double kBoundTolerance = 1e-9;
inline constexpr double kSharpnessTolerance = 1e-9;

struct CheckReport {
  bool passed = false;
  double margin = 0.0;  // bound - phi
  BoundResult bound_used;
  double functional_value = 0.0;
};

/// Compares phi(series) with the class bound. Throws OutsideDomainError when the
/// bound is not valid for (spec, q).
CheckReport check_bound(const CoefficientSeries& series, const ClassSpec& spec, const FunctionalQuery& q,
                        double tol = kBoundTolerance);

/// bound - phi(extremal). Zero for each claimed-sharp (branch, extremal) pair.
double sharpness_gap(const ExtremalSpec& extremal, const ClassSpec& spec, const FunctionalQuery& q);

/// sum_j |2 z_j + sum_{k>=1} c_k z_{k+j}|^2 - |sum_{k>=0} c_{k+1} z_{k+j}|^2 for z_0..z_M.
/// Needs c_1..c_{M+1}.
double hermitian_form_P(const CaratheodorySeries& c, std::span<const std::complex<double>> z);

/// sum_j |2 z_j + sum_{k>=1} (a_{k+1} - a_{k-1}) z_{k+j}|^2 - |sum_{k>=0} (a_{k+2} - a_k) z_{k+j}|^2
/// with a_0 = 0. Needs a_1..a_{M+2}.
double hermitian_form_T(const CoefficientSeries& a, std::span<const std::complex<double>> z);

/// Smallest eigenvalue of the (N+1)x(N+1) Hermitian Toeplitz matrix with diagonal 2
/// and off-diagonals c_k / conj(c_k).
double toeplitz_min_eig(const CaratheodorySeries& c);

/// Grid over one- and two-atom probability measures: atom angles 2 pi i/(angles-1),
/// i = 0..angles-1, and weights j/(weights-1), j = 0..weights-1.
struct GridSpec {
  int angles = 721;
  int weights = 101;
  /// Fix the first atom at angle 0. Both oracle functionals are invariant under a
  /// common rotation of all atoms, and the grid is closed under rotation by grid
  /// steps, so this enumerates the same set of values.
  bool use_rotation_symmetry = true;
};

/// Piecewise bound on |mu c_n c_m - c_{n+m}| over P: 2 on [0, 1], 2|2 mu - 1| elsewhere.
double caratheodory_product_bound(double mu);
/// Piecewise bound on |lambda M_n M_m - M_{n+m}| for moments of a probability measure:
/// 1 on [0, 2], |lambda - 1| elsewhere.
double moment_functional_bound(double lambda);

/// max |mu c_n c_m - c_{n+m}| over the grid, c_k = 2 int e^{ikt} dnu. Here n, m >= 1.
double oracle_caratheodory_product(double mu, int n, int m, const GridSpec& grid = {});
/// max |lambda M_n M_m - M_{n+m}| over the grid, M_k = int e^{ikt} dnu. Here n, m >= 1.
double oracle_moment_functional(double lambda, int n, int m, const GridSpec& grid = {});

/// Evaluates the two-entry Hermitian form used to prove the bound for R, F1, F2
/// (P form of the attached Caratheodory function) or typically_real (T form), for
/// the member generated by `measure`. Non-negative for every member.
double proof_form_replay(const ClassSpec& spec, const AtomicMeasure& measure, const FunctionalQuery& q);

}  // namespace zalcman
