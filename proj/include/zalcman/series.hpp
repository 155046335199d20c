#pragma once

// Truncated power series of normalized analytic functions and the generalized
// Zalcman functional |lambda a_n a_m - a_{n+m-1}|.
//
// Coefficients are stored densely from index 1: a_1 = 1 at storage slot 0.
// a_0 is implicitly 0 and never stored.

#include <cmath>
#include <complex>
#include <iterator>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "zalcman/errors.hpp"

namespace zalcman {

inline constexpr int kDefaultOrder = 64;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Taylor coefficients a_1..a_N of f(z) = z + a_2 z^2 + ... (a_1 = 1 exactly).
template <typename Scalar>
class BasicCoefficientSeries {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = ComplexVector<Scalar>;

  explicit BasicCoefficientSeries(Vector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2)
      throw LengthError("coefficient series needs truncation order >= 2", 2);
    if (coeffs_(0) != Complex(1))
      throw ParameterError("coefficient series must have a_1 = 1");
  }

  /// Series of the identity function z (all higher coefficients zero).
  static BasicCoefficientSeries identity(int order) {
    Vector c = Vector::Zero(order < 2 ? 2 : order);
    c(0) = Complex(1);
    return BasicCoefficientSeries(std::move(c));
  }

  /// Builds a series from real coefficients a_1..a_N.
  template <typename Range>
  static BasicCoefficientSeries from_real(const Range& values) {
    Vector c(static_cast<Eigen::Index>(std::size(values)));
    Eigen::Index i = 0;
    for (const auto& v : values) c(i++) = Complex(static_cast<Scalar>(v));
    return BasicCoefficientSeries(std::move(c));
  }

  int order() const { return static_cast<int>(coeffs_.size()); }

  /// a_n for n >= 0; a_0 is 0 by convention.
  Complex coeff(int n) const {
    if (n == 0) return Complex(0);
    if (n < 0 || n > order())
      throw LengthError("coefficient a_" + std::to_string(n) + " not stored", static_cast<std::size_t>(n));
    return coeffs_(n - 1);
  }

  Complex operator()(int n) const { return coeff(n); }

  const Vector& coeffs() const { return coeffs_; }

 private:
  Vector coeffs_;
};

/// Coefficients c_1..c_N of p(z) = 1 + c_1 z + c_2 z^2 + ... with Re p > 0.
template <typename Scalar>
class BasicCaratheodorySeries {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = ComplexVector<Scalar>;

  explicit BasicCaratheodorySeries(Vector coeffs, bool real_only = false)
      : coeffs_(std::move(coeffs)), real_only_(real_only) {
    if (coeffs_.size() < 1) throw LengthError("Caratheodory series needs at least c_1", 1);
    if (real_only_) {
      for (Eigen::Index k = 0; k < coeffs_.size(); ++k)
        if (coeffs_(k).imag() != Scalar(0))
          throw ParameterError("real_only Caratheodory series has a non-real coefficient");
    }
  }

  int order() const { return static_cast<int>(coeffs_.size()); }
  bool real_only() const { return real_only_; }

  /// c_k for 1 <= k <= N.
  Complex coeff(int k) const {
    if (k < 1 || k > order())
      throw LengthError("coefficient c_" + std::to_string(k) + " not stored", static_cast<std::size_t>(k));
    return coeffs_(k - 1);
  }

  Complex operator()(int k) const { return coeff(k); }

  const Vector& coeffs() const { return coeffs_; }

 private:
  Vector coeffs_;
  bool real_only_;
};

using CoefficientSeries = BasicCoefficientSeries<double>;
using CaratheodorySeries = BasicCaratheodorySeries<double>;

/// Indices (n, m) and the real multiplier lambda of the functional.
struct FunctionalQuery {
  int n;
  int m;
  double lambda;

  FunctionalQuery(int n_, int m_, double lambda_) : n(n_), m(m_), lambda(lambda_) {
    if (n < 2 || m < 2) throw ParameterError("functional query needs n >= 2 and m >= 2");
  }

  int required_order() const { return n + m - 1; }
};

/// |lambda a_n a_m - a_{n+m-1}|.
template <typename Scalar>
Scalar eval_functional(const BasicCoefficientSeries<Scalar>& series, const FunctionalQuery& q) {
  const int need = q.required_order();
  if (series.order() < need)
    throw LengthError("series too short for the functional", static_cast<std::size_t>(need));
  const auto lambda = static_cast<Scalar>(q.lambda);
  return std::abs(lambda * series(q.n) * series(q.m) - series(need));
}

/// e^{-i theta} f(e^{i theta} z): a_n -> a_n e^{i(n-1) theta}.
template <typename Scalar>
BasicCoefficientSeries<Scalar> rotate(const BasicCoefficientSeries<Scalar>& series, Scalar theta) {
  using Complex = std::complex<Scalar>;
  auto c = series.coeffs();
  for (Eigen::Index k = 1; k < c.size(); ++k) c(k) *= std::polar(Scalar(1), static_cast<Scalar>(k) * theta);
  c(0) = Complex(1);
  return BasicCoefficientSeries<Scalar>(std::move(c));
}

/// Term-wise a_n -> a_n / n (inverse of f -> z f').
template <typename Scalar>
BasicCoefficientSeries<Scalar> alexander(const BasicCoefficientSeries<Scalar>& series) {
  auto c = series.coeffs();
  for (Eigen::Index k = 1; k < c.size(); ++k) c(k) /= static_cast<Scalar>(k + 1);
  return BasicCoefficientSeries<Scalar>(std::move(c));
}

/// Term-wise a_n -> n a_n (f -> z f').
template <typename Scalar>
BasicCoefficientSeries<Scalar> derivative_transform(const BasicCoefficientSeries<Scalar>& series) {
  auto c = series.coeffs();
  for (Eigen::Index k = 1; k < c.size(); ++k) c(k) *= static_cast<Scalar>(k + 1);
  return BasicCoefficientSeries<Scalar>(std::move(c));
}

/// Coefficients b_0..b_N of (1 - z)^{-c}.
template <typename Scalar>
RealVector<Scalar> binomial_series(Scalar c, int N) {
  if (N < 1) throw ParameterError("binomial_series needs N >= 1");
  RealVector<Scalar> b(N + 1);
  b(0) = Scalar(1);
  for (int k = 1; k <= N; ++k) b(k) = b(k - 1) * (c + Scalar(k - 1)) / Scalar(k);
  return b;
}

/// Cauchy product of two coefficient vectors (index 0 = constant term), truncated to `size` terms.
template <typename Derived1, typename Derived2>
auto cauchy_product(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b, Eigen::Index size) {
  using Scalar = typename Derived1::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(size);
  for (Eigen::Index k = 0; k < size; ++k)
    for (Eigen::Index i = 0; i <= k && i < a.size(); ++i)
      if (k - i < b.size()) out(k) += a(i) * b(k - i);
  return out;
}

}  // namespace zalcman
