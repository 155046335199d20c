#include "zalcman/class_models.hpp"

#include <cmath>
#include <numeric>

#include "zalcman/bounds.hpp"

namespace zalcman {

namespace {

using Complex = std::complex<double>;

constexpr double kImagDust = 1e-12;

// c_1..c_count of the Herglotz integral of the atoms, by repeated multiplication.
void fill_moments(std::span<const Atom> atoms, int count, std::vector<Complex>& c) {
  c.assign(static_cast<std::size_t>(count), Complex(0.0));
  for (const auto& a : atoms) {
    const Complex step = std::polar(1.0, a.angle);
    Complex p = step;
    for (int k = 0; k < count; ++k) {
      c[k] += a.weight * p;
      p *= step;
    }
  }
  for (auto& v : c) v *= 2.0;
}

void zero_imag_dust(std::vector<Complex>& c) {
  for (auto& v : c) {
    if (std::fabs(v.imag()) > kImagDust)
      throw SymmetryError("symmetric measure produced a non-real moment");
    v = Complex(v.real(), 0.0);
  }
}

void require_representable(const ClassSpec& spec) {
  spec.validate();
  if (!has_representation(spec.id))
    throw UnsupportedClassError("class " + spec.describe() + " has no measure representation");
}

void check_mixture(std::span<const double> weights, std::span<const double> angles, MixtureRule rule) {
  if (weights.size() != angles.size()) throw MixtureError("mixture weights and angles differ in length");
  if (weights.empty()) throw MixtureError("mixture needs at least one component");
  double odd = 0.0, even = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double w = weights[k];
    if (!(w >= 0.0 && w <= 1.0)) throw MixtureError("mixture weights must lie in [0, 1]");
    // components are numbered from 1
    ((k + 1) % 2 == 0 ? even : odd) += w;
  }
  if (rule == MixtureRule::parity_halves) {
    if (std::fabs(odd - 0.5) > kWeightSumTolerance || std::fabs(even - 0.5) > kWeightSumTolerance)
      throw MixtureError("odd- and even-indexed mixture weights must each sum to 1/2");
  } else if (std::fabs(odd + even - 1.0) > kWeightSumTolerance) {
    throw MixtureError("mixture weights must sum to 1");
  }
}

ComplexVector<double> base_coefficients(const ExtremalSpec& spec, int N) {
  ComplexVector<double> a = ComplexVector<double>::Zero(N);
  a(0) = 1.0;
  const double p = spec.param;
  auto set = [&](auto&& f) {
    for (int n = 2; n <= N; ++n) a(n - 1) = f(n);
  };
  switch (spec.id) {
    case ExtremalId::f1_starlike: {
      const auto A = weight_table(WeightKind::A, p, N);
      set([&](int n) { return Complex(A(n)); });
      break;
    }
    case ExtremalId::f2_convex: {
      const auto A = weight_table(WeightKind::A, p, N);
      set([&](int n) { return Complex(A(n) / n); });
      break;
    }
    case ExtremalId::f0_R:
      set([&](int n) { return Complex(2.0 * (1.0 - p) / n); });
      break;
    case ExtremalId::f0_R_power:
      if (spec.order < 1) throw ParameterError("f0_R_power needs order k >= 1");
      set([&](int n) { return Complex((n - 1) % spec.order == 0 ? 2.0 * (1.0 - p) / n : 0.0); });
      break;
    case ExtremalId::koebe:
      set([](int n) { return Complex(n); });
      break;
    case ExtremalId::tr_odd:
      set([](int n) { return Complex(n % 2 == 1 ? n : 0); });
      break;
    case ExtremalId::f1beta_F1: {
      const auto B = weight_table(WeightKind::B, p, N);
      set([&](int n) { return Complex(B(n)); });
      break;
    }
    case ExtremalId::f3_F2: {
      const auto C = weight_table(WeightKind::C, p, N);
      set([&](int n) { return Complex(C(n)); });
      break;
    }
    case ExtremalId::f2beta_F2: {
      // z(1 - beta) * 1/(1 - z^2)  +  (beta/2)(log(1 + z) - log(1 - z)), index 0 = constant term
      RealVector<double> numerator = RealVector<double>::Zero(N + 1);
      numerator(1) = 1.0 - p;
      RealVector<double> geometric_sq = RealVector<double>::Zero(N + 1);
      for (int k = 0; k <= N; k += 2) geometric_sq(k) = 1.0;
      RealVector<double> f = cauchy_product(numerator, geometric_sq, N + 1);
      for (int k = 1; k <= N; ++k) {
        const double log1p_k = (k % 2 == 1 ? 1.0 : -1.0) / k;  // log(1 + z)
        const double log1m_k = -1.0 / k;                       // log(1 - z)
        f(k) += 0.5 * p * (log1p_k - log1m_k);
      }
      if (std::fabs(f(1) - 1.0) > 1e-12) throw ParameterError("f2beta_F2 lost its normalization");
      for (int n = 2; n <= N; ++n) a(n - 1) = f(n);
      break;
    }
    case ExtremalId::fz_kernel:
      set([&](int) { return Complex(2.0 * (1.0 - p)); });
      break;
    case ExtremalId::fz_kernel_power:
      if (spec.order < 1) throw ParameterError("fz_kernel_power needs order k >= 1");
      set([&](int n) { return Complex((n - 1) % spec.order == 0 ? 2.0 * (1.0 - p) : 0.0); });
      break;
    case ExtremalId::mixture:
      if (!spec.mixture_base) throw MixtureError("mixture without a base extremal");
      return mixture_series(spec.mixture_weights, spec.mixture_angles, *spec.mixture_base, N).coeffs();
  }
  return a;
}

void check_extremal_param(const ExtremalSpec& spec) {
  if ((extremal_uses_alpha(spec.id) || extremal_uses_beta(spec.id)) && !(spec.param < 1.0))
    throw ParameterError("extremal parameter must be < 1");
}

}  // namespace

CaratheodorySeries caratheodory_from_measure(const AtomicMeasure& measure, int N) {
  if (N < 1) throw ParameterError("Caratheodory series needs N >= 1");
  std::vector<Complex> c;
  fill_moments(measure.atoms(), N, c);
  if (measure.symmetric()) zero_imag_dust(c);
  ComplexVector<double> v(N);
  for (int k = 0; k < N; ++k) v(k) = c[k];
  return CaratheodorySeries(std::move(v), measure.symmetric());
}

void SeriesBuilder::build(const ClassSpec& spec, std::span<const Atom> atoms, bool symmetric,
                          std::span<Complex> out) {
  const int N = static_cast<int>(out.size());
  fill_moments(atoms, std::max(N - 1, 1), c_);
  if (symmetric) zero_imag_dust(c_);
  auto c = [&](int k) { return c_[static_cast<std::size_t>(k - 1)]; };
  out[0] = 1.0;
  switch (spec.id) {
    case ClassId::starlike_hull:
    case ClassId::convex_hull: {
      const double alpha = *spec.alpha;
      if (weights_.size() < static_cast<std::size_t>(N) || weights_alpha_ != alpha) {
        weights_ = weight_table(WeightKind::A, alpha, N).values;
        weights_alpha_ = alpha;
      }
      for (int n = 2; n <= N; ++n) {
        // sum_j w_j e^{i(n-1) t_j} = c_{n-1} / 2
        Complex value = weights_[n - 1] * (0.5 * c(n - 1));
        if (spec.id == ClassId::convex_hull) value /= static_cast<double>(n);
        out[n - 1] = value;
      }
      break;
    }
    case ClassId::R: {
      const double s = 1.0 - *spec.beta;
      for (int n = 2; n <= N; ++n) out[n - 1] = s * c(n - 1) / static_cast<double>(n);
      break;
    }
    case ClassId::f_over_z: {
      const double s = 1.0 - *spec.beta;
      for (int n = 2; n <= N; ++n) out[n - 1] = s * c(n - 1);
      break;
    }
    case ClassId::typically_real: {
      Complex odd_sum(0.0), even_sum(0.0);  // c_1 + c_3 + ..., c_2 + c_4 + ...
      for (int n = 2; n <= N; ++n) {
        const int k = n - 1;
        if (k % 2 == 1) {
          odd_sum += c(k);
          out[n - 1] = odd_sum;
        } else {
          even_sum += c(k);
          out[n - 1] = 1.0 + even_sum;
        }
      }
      break;
    }
    case ClassId::F1: {
      const double s = 1.0 - *spec.beta;
      Complex partial(0.0);
      for (int n = 2; n <= N; ++n) {
        partial += c(n - 1);
        out[n - 1] = (1.0 + s * partial) / static_cast<double>(n);
      }
      break;
    }
    case ClassId::F2: {
      const double s = 1.0 - *spec.beta;
      Complex odd_sum(0.0), even_sum(0.0);
      for (int n = 2; n <= N; ++n) {
        const int k = n - 1;
        if (n % 2 == 0) {
          odd_sum += c(k);
          out[n - 1] = s * odd_sum / static_cast<double>(n);
        } else {
          even_sum += c(k);
          out[n - 1] = (1.0 + s * even_sum) / static_cast<double>(n);
        }
      }
      break;
    }
    case ClassId::S_real:
      throw UnsupportedClassError("S_real has no measure representation");
  }
}

CoefficientSeries series_from_measure(const ClassSpec& spec, const AtomicMeasure& measure, int N) {
  require_representable(spec);
  if (N < 2) throw LengthError("series_from_measure needs N >= 2", 2);
  if (spec.id == ClassId::typically_real && !measure.symmetric())
    throw SymmetryError("typically_real members need a symmetric measure");
  std::vector<Complex> out(static_cast<std::size_t>(N));
  SeriesBuilder builder;
  builder.build(spec, measure.atoms(), measure.symmetric(), out);
  ComplexVector<double> v(N);
  for (int k = 0; k < N; ++k) v(k) = out[k];
  return CoefficientSeries(std::move(v));
}

CoefficientSeries extremal_series(const ExtremalSpec& spec, int N) {
  if (N < 2) throw LengthError("extremal_series needs N >= 2", 2);
  check_extremal_param(spec);
  CoefficientSeries base(base_coefficients(spec, N));
  if (spec.rotation == 0.0) return base;
  return rotate(base, spec.rotation);
}

CoefficientSeries mixture_series(std::span<const double> weights, std::span<const double> angles,
                                 const ExtremalSpec& base, int N, MixtureRule rule) {
  check_mixture(weights, angles, rule);
  if (base.id == ExtremalId::mixture) throw MixtureError("mixture base must not itself be a mixture");
  const CoefficientSeries g = extremal_series(base, N);
  ComplexVector<double> sum = ComplexVector<double>::Zero(N);
  for (std::size_t k = 0; k < weights.size(); ++k) sum += weights[k] * rotate(g, angles[k]).coeffs();
  sum(0) = 1.0;
  return CoefficientSeries(std::move(sum));
}

CaratheodorySeries caratheodory_of(const ClassSpec& spec, const CoefficientSeries& f) {
  spec.validate();
  const int count = f.order() - 1;
  if (count < 1) throw LengthError("series too short for a Caratheodory function", 2);
  ComplexVector<double> c(count);
  bool real_only = false;
  switch (spec.id) {
    case ClassId::R: {
      const double s = 1.0 - *spec.beta;
      for (int k = 1; k <= count; ++k) c(k - 1) = (k + 1.0) * f(k + 1) / s;
      break;
    }
    case ClassId::f_over_z: {
      const double s = 1.0 - *spec.beta;
      for (int k = 1; k <= count; ++k) c(k - 1) = f(k + 1) / s;
      break;
    }
    case ClassId::F1: {
      const double s = 1.0 - *spec.beta;
      for (int k = 1; k <= count; ++k) c(k - 1) = ((k + 1.0) * f(k + 1) - static_cast<double>(k) * f(k)) / s;
      break;
    }
    case ClassId::F2: {
      const double s = 1.0 - *spec.beta;
      for (int k = 1; k <= count; ++k) c(k - 1) = ((k + 1.0) * f(k + 1) - (k - 1.0) * f(k - 1)) / s;
      break;
    }
    case ClassId::typically_real: {
      real_only = true;
      for (int k = 1; k <= count; ++k) {
        const Complex v = f(k + 1) - f(k - 1);
        if (std::fabs(v.imag()) > kImagDust)
          throw ParameterError("typically real series has a non-real coefficient");
        c(k - 1) = Complex(v.real(), 0.0);
      }
      break;
    }
    default:
      throw UnsupportedClassError("class " + spec.describe() + " has no attached Caratheodory function");
  }
  return CaratheodorySeries(std::move(c), real_only);
}

}  // namespace zalcman
