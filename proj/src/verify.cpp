#include "zalcman/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

namespace zalcman {

namespace {

using Complex = std::complex<double>;

double require_bound(const BoundResult& b) {
  if (!b.valid()) throw OutsideDomainError(b.code);
  return *b.value;
}

// Max of |scale * M_n M_m - M_{n+m}| over one- and two-atom measures on the grid,
// M_k = int e^{ikt} dnu.
double grid_max(double scale, int n, int m, const GridSpec& grid) {
  if (n < 1 || m < 1) throw ParameterError("oracle indices must be >= 1");
  if (grid.angles < 2 || grid.weights < 2) throw ParameterError("oracle grid needs >= 2 angles and weights");
  const int A = grid.angles, W = grid.weights;
  std::vector<Complex> en(A), em(A), enm(A);
  for (int i = 0; i < A; ++i) {
    const double t = 2.0 * std::numbers::pi * i / (A - 1);
    en[i] = std::polar(1.0, n * t);
    em[i] = std::polar(1.0, m * t);
    enm[i] = std::polar(1.0, (n + m) * t);
  }
  const int first_count = grid.use_rotation_symmetry ? 1 : A;
  double best = 0.0;
  for (int i1 = 0; i1 < first_count; ++i1) {
    for (int i2 = 0; i2 < A; ++i2) {
      for (int j = 0; j < W; ++j) {
        const double w = static_cast<double>(j) / (W - 1);
        const Complex Mn = w * en[i1] + (1.0 - w) * en[i2];
        const Complex Mm = w * em[i1] + (1.0 - w) * em[i2];
        const Complex Mnm = w * enm[i1] + (1.0 - w) * enm[i2];
        const double v = std::abs(scale * Mn * Mm - Mnm);
        if (v > best) best = v;
      }
    }
  }
  return best;
}

}  // namespace

CheckReport check_bound(const CoefficientSeries& series, const ClassSpec& spec, const FunctionalQuery& q,
                        double tol) {
  CheckReport r;
  r.bound_used = bound(spec, q);
  const double b = require_bound(r.bound_used);
  r.functional_value = eval_functional(series, q);
  r.margin = b - r.functional_value;
  r.passed = r.margin >= -tol;
  return r;
}

double sharpness_gap(const ExtremalSpec& extremal, const ClassSpec& spec, const FunctionalQuery& q) {
  const double b = require_bound(bound(spec, q));
  const auto f = extremal_series(extremal, std::max(kDefaultOrder, q.required_order()));
  return b - eval_functional(f, q);
}

double hermitian_form_P(const CaratheodorySeries& c, std::span<const Complex> z) {
  const int M = static_cast<int>(z.size()) - 1;
  if (M < 0) return 0.0;
  if (c.order() < M + 1) throw LengthError("Caratheodory series too short for the Hermitian form", M + 1);
  double total = 0.0;
  for (int j = 0; j <= M; ++j) {
    Complex lhs = 2.0 * z[j];
    for (int k = 1; k + j <= M; ++k) lhs += c(k) * z[k + j];
    Complex rhs(0.0);
    for (int k = 0; k + j <= M; ++k) rhs += c(k + 1) * z[k + j];
    total += std::norm(lhs) - std::norm(rhs);
  }
  return total;
}

double hermitian_form_T(const CoefficientSeries& a, std::span<const Complex> z) {
  const int M = static_cast<int>(z.size()) - 1;
  if (M < 0) return 0.0;
  if (a.order() < M + 2) throw LengthError("coefficient series too short for the Hermitian form", M + 2);
  double total = 0.0;
  for (int j = 0; j <= M; ++j) {
    Complex lhs = 2.0 * z[j];
    for (int k = 1; k + j <= M; ++k) lhs += (a(k + 1) - a(k - 1)) * z[k + j];
    Complex rhs(0.0);
    for (int k = 0; k + j <= M; ++k) rhs += (a(k + 2) - a(k)) * z[k + j];
    total += std::norm(lhs) - std::norm(rhs);
  }
  return total;
}

double toeplitz_min_eig(const CaratheodorySeries& c) {
  const int N = c.order();
  Eigen::MatrixXcd T(N + 1, N + 1);
  for (int i = 0; i <= N; ++i) {
    T(i, i) = 2.0;
    for (int j = i + 1; j <= N; ++j) {
      T(i, j) = c(j - i);
      T(j, i) = std::conj(c(j - i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(T, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double caratheodory_product_bound(double mu) {
  return (mu >= 0.0 && mu <= 1.0) ? 2.0 : 2.0 * std::fabs(2.0 * mu - 1.0);
}

double moment_functional_bound(double lambda) {
  return (lambda >= 0.0 && lambda <= 2.0) ? 1.0 : std::fabs(lambda - 1.0);
}

double oracle_caratheodory_product(double mu, int n, int m, const GridSpec& grid) {
  // c_k = 2 M_k, so |mu c_n c_m - c_{n+m}| = 2 |2 mu M_n M_m - M_{n+m}|
  return 2.0 * grid_max(2.0 * mu, n, m, grid);
}

double oracle_moment_functional(double lambda, int n, int m, const GridSpec& grid) {
  return grid_max(lambda, n, m, grid);
}

double proof_form_replay(const ClassSpec& spec, const AtomicMeasure& measure, const FunctionalQuery& q) {
  const int n = q.n, m = q.m;
  const int M = n + m - 3;
  const auto f = series_from_measure(spec, measure, n + m + 1);
  std::vector<Complex> z(static_cast<std::size_t>(M + 1), Complex(0.0));
  switch (spec.id) {
    case ClassId::R: {
      const double s = 1.0 - *spec.beta;
      z[n - 2] = q.lambda * s * f(m);
      z[M] = -static_cast<double>(n) * s / (n + m - 1);
      return hermitian_form_P(caratheodory_of(spec, f), z);
    }
    case ClassId::F1:
    case ClassId::F2: {
      const double s = 1.0 - *spec.beta;
      z[n - 2] = q.lambda * s * f(m);
      z[M] = -s;
      return hermitian_form_P(caratheodory_of(spec, f), z);
    }
    case ClassId::typically_real:
      z[n - 2] = q.lambda * f(m);
      z[M] = -1.0;
      return hermitian_form_T(f, z);
    default:
      throw UnsupportedClassError("no proof form for class " + spec.describe());
  }
}

}  // namespace zalcman
