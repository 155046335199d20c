#include "zalcman/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

namespace zalcman {

namespace {

std::vector<double> compute_weights(WeightKind kind, double param, int n_max) {
  std::vector<double> v(static_cast<std::size_t>(n_max));
  v[0] = 1.0;
  for (int n = 2; n <= n_max; ++n) {
    double value = 0.0;
    switch (kind) {
      case WeightKind::A:
        // Multiply before dividing so that alpha = 0 and alpha = 1/2 stay exact integers.
        value = v[n - 2] * (2.0 * (1.0 - param) + (n - 2)) / (n - 1);
        break;
      case WeightKind::B:
        value = (1.0 + 2.0 * (n - 1) * (1.0 - param)) / n;
        break;
      case WeightKind::C:
        value = (n % 2 == 0) ? 1.0 - param : (1.0 + (n - 1) * (1.0 - param)) / n;
        break;
    }
    v[n - 1] = value;
  }
  return v;
}

class WeightCache {
 public:
  std::vector<double> get(WeightKind kind, double param, int n_max) {
    const Key key{kind, std::bit_cast<std::uint64_t>(param)};
    std::lock_guard<std::mutex> lock(mutex_);
    auto& entry = tables_[key];
    if (static_cast<int>(entry.size()) < n_max) entry = compute_weights(kind, param, std::max(n_max, 2 * static_cast<int>(entry.size())));
    return {entry.begin(), entry.begin() + n_max};
  }

  double at(WeightKind kind, double param, int n) {
    const Key key{kind, std::bit_cast<std::uint64_t>(param)};
    std::lock_guard<std::mutex> lock(mutex_);
    auto& entry = tables_[key];
    if (static_cast<int>(entry.size()) < n) entry = compute_weights(kind, param, std::max({n, 64, 2 * static_cast<int>(entry.size())}));
    return entry[static_cast<std::size_t>(n - 1)];
  }

 private:
  using Key = std::pair<WeightKind, std::uint64_t>;
  std::mutex mutex_;
  std::map<Key, std::vector<double>> tables_;
};

WeightCache& cache() {
  static WeightCache instance;
  return instance;
}

void check_weight_args(int n, double param, const char* name) {
  if (n < 1) throw ParameterError("weight index n must be >= 1");
  if (!(param < 1.0)) throw ParameterError(std::string(name) + " must be < 1");
}

bool is_even(int k) { return k % 2 == 0; }

// Bounds of the shape  Q on [0, 2Q/P],  |lambda P - Q| elsewhere, with P and Q
// kept as fractions so the second branch is formed over a common denominator.
struct TwoBranch {
  double P_num, P_den;
  double Q_num, Q_den;
  ExtremalSpec first_extremal;
  Sharpness first_sharpness;
  ExtremalSpec second_extremal;

  double threshold() const { return 2.0 * Q_num * P_den / (Q_den * P_num); }
  double first_value() const { return Q_num / Q_den; }
  double second_value(double lambda) const {
    return std::fabs(lambda * P_num * Q_den - Q_num * P_den) / (P_den * Q_den);
  }
};

std::optional<TwoBranch> two_branch_form(const ClassSpec& spec, int n, int m) {
  const int k = n + m - 1;
  switch (spec.id) {
    case ClassId::starlike_hull: {
      const double a = *spec.alpha;
      const auto f1 = ExtremalSpec::f1_starlike(a);
      return TwoBranch{coeff_A(n, a) * coeff_A(m, a), 1.0, coeff_A(k, a), 1.0,
                       n == m ? ExtremalSpec::canonical_mixture(f1, n) : f1,
                       n == m ? Sharpness::sharp_conditional : Sharpness::not_claimed, f1};
    }
    case ClassId::convex_hull: {
      const double a = *spec.alpha;
      const auto f2 = ExtremalSpec::f2_convex(a);
      return TwoBranch{coeff_A(n, a) * coeff_A(m, a), static_cast<double>(n) * m, coeff_A(k, a),
                       static_cast<double>(k),
                       n == m ? ExtremalSpec::canonical_mixture(f2, n) : f2,
                       n == m ? Sharpness::sharp_conditional : Sharpness::not_claimed, f2};
    }
    case ClassId::R: {
      const double s = 1.0 - *spec.beta;
      return TwoBranch{4.0 * s * s, static_cast<double>(n) * m, 2.0 * s, static_cast<double>(k),
                       ExtremalSpec::f0_R_power(*spec.beta, n + m - 2), Sharpness::sharp,
                       ExtremalSpec::f0_R(*spec.beta)};
    }
    case ClassId::f_over_z: {
      const double s = 1.0 - *spec.beta;
      return TwoBranch{4.0 * s * s, 1.0, 2.0 * s, 1.0, ExtremalSpec::fz_kernel_power(*spec.beta, n + m - 2),
                       Sharpness::sharp, ExtremalSpec::fz_kernel(*spec.beta)};
    }
    default:
      return std::nullopt;
  }
}

enum class TrCase { i, ii, iii };

TrCase typically_real_case(int n, int m) {
  if (n == 2 && is_even(m)) return TrCase::i;
  if (m == 2 && is_even(n)) return TrCase::ii;
  return TrCase::iii;
}

double close_to_convex_threshold(int n, int m, double beta) {
  const double base = static_cast<double>(n) * m / (n + m - 1);
  return std::max(base / (1.0 - beta), base);
}

BoundResult outside(DomainCode code) {
  BoundResult r;
  r.validity = Validity::outside_theorem_domain;
  r.code = code;
  return r;
}

BoundResult sharp_at(double value, Branch branch, Sharpness sharpness, std::optional<ExtremalSpec> extremal) {
  BoundResult r;
  r.value = value;
  r.branch = branch;
  r.sharpness = sharpness;
  if (sharpness != Sharpness::not_claimed) r.attaining_extremal = std::move(extremal);
  return r;
}

BoundResult typically_real_bound(int n, int m, double lambda) {
  const double mn = static_cast<double>(m) * n;
  switch (typically_real_case(n, m)) {
    case TrCase::i:
    case TrCase::ii: {
      const bool first_case = typically_real_case(n, m) == TrCase::i;
      const int other = first_case ? m : n;  // the even index paired with 2
      if (lambda <= 1.5) {
        const double value = 3.0 + (2.0 * lambda - 1.0) * (other - 2);
        const Branch b = first_case ? Branch::case_i_a : Branch::case_ii_a;
        if (lambda == 1.0 || (n == 2 && m == 2))
          return sharp_at(value, b, Sharpness::sharp_conditional, ExtremalSpec::tr_odd());
        if (lambda == 1.5) return sharp_at(value, b, Sharpness::sharp, ExtremalSpec::koebe());
        return sharp_at(value, b, Sharpness::not_claimed, std::nullopt);
      }
      return sharp_at(2.0 * lambda * other - other - 1.0, first_case ? Branch::case_i_b : Branch::case_ii_b,
                      Sharpness::sharp, ExtremalSpec::koebe());
    }
    case TrCase::iii:
      return sharp_at(lambda * mn - n - m + 1.0, Branch::case_iii, Sharpness::sharp, ExtremalSpec::koebe());
  }
  return outside(DomainCode::none);
}

}  // namespace

WeightTable weight_table(WeightKind kind, double param, int n_max) {
  check_weight_args(n_max, param, kind == WeightKind::A ? "alpha" : "beta");
  return WeightTable{kind, param, cache().get(kind, param, n_max)};
}

double coeff_A(int n, double alpha) {
  check_weight_args(n, alpha, "alpha");
  return cache().at(WeightKind::A, alpha, n);
}

double coeff_B(int n, double beta) {
  check_weight_args(n, beta, "beta");
  return cache().at(WeightKind::B, beta, n);
}

double coeff_C(int n, double beta) {
  check_weight_args(n, beta, "beta");
  return cache().at(WeightKind::C, beta, n);
}

BoundResult bound(const ClassSpec& spec, const FunctionalQuery& q) {
  spec.validate();
  const int n = q.n, m = q.m;
  const double lambda = q.lambda;

  if (auto form = two_branch_form(spec, n, m)) {
    const double tau = form->threshold();
    if (lambda >= 0.0 && lambda <= tau) {
      auto r = sharp_at(form->first_value(), Branch::first, form->first_sharpness, form->first_extremal);
      // Both formulas coincide at 0 and tau, so the second branch's extremal attains there too.
      if (!r.claimed_sharp() && (lambda == 0.0 || lambda == tau)) {
        r.sharpness = Sharpness::sharp;
        r.attaining_extremal = form->second_extremal;
      }
      return r;
    }
    return sharp_at(form->second_value(lambda), Branch::second, Sharpness::sharp, form->second_extremal);
  }

  switch (spec.id) {
    case ClassId::typically_real:
      if (lambda < 1.0) return outside(DomainCode::lambda_below_one);
      return typically_real_bound(n, m, lambda);
    case ClassId::S_real:
      if (lambda < 1.0) return outside(DomainCode::lambda_below_one);
      return sharp_at(lambda * m * n - n - m + 1.0, Branch::single, Sharpness::sharp, ExtremalSpec::koebe());
    case ClassId::F1: {
      const double beta = *spec.beta;
      if (lambda < close_to_convex_threshold(n, m, beta)) return outside(DomainCode::below_mu_threshold);
      const double value = lambda * coeff_B(n, beta) * coeff_B(m, beta) - coeff_B(n + m - 1, beta);
      return sharp_at(value, Branch::single, Sharpness::sharp, ExtremalSpec::f1beta_F1(beta));
    }
    case ClassId::F2: {
      const double beta = *spec.beta;
      if (is_even(n) && is_even(m)) return outside(DomainCode::both_even_unsupported);
      if (lambda < close_to_convex_threshold(n, m, beta)) return outside(DomainCode::below_mu_threshold);
      const double value = lambda * coeff_C(n, beta) * coeff_C(m, beta) - coeff_C(n + m - 1, beta);
      return sharp_at(value, Branch::single, Sharpness::sharp, ExtremalSpec::f3_F2(beta));
    }
    default:
      break;
  }
  throw UnsupportedClassError("no bound for class " + spec.describe());
}

std::optional<double> branch_value(const ClassSpec& spec, const FunctionalQuery& q, Branch branch) {
  spec.validate();
  const int n = q.n, m = q.m;
  const double lambda = q.lambda;
  if (auto form = two_branch_form(spec, n, m)) {
    if (branch == Branch::first) return form->first_value();
    if (branch == Branch::second) return form->second_value(lambda);
    return std::nullopt;
  }
  switch (spec.id) {
    case ClassId::typically_real: {
      const TrCase c = typically_real_case(n, m);
      const int other = c == TrCase::i ? m : n;
      if ((branch == Branch::case_i_a && c == TrCase::i) || (branch == Branch::case_ii_a && c == TrCase::ii))
        return 3.0 + (2.0 * lambda - 1.0) * (other - 2);
      if ((branch == Branch::case_i_b && c == TrCase::i) || (branch == Branch::case_ii_b && c == TrCase::ii))
        return 2.0 * lambda * other - other - 1.0;
      if (branch == Branch::case_iii && c == TrCase::iii) return lambda * m * n - n - m + 1.0;
      return std::nullopt;
    }
    case ClassId::S_real:
      if (branch == Branch::single) return lambda * m * n - n - m + 1.0;
      return std::nullopt;
    case ClassId::F1:
      if (branch == Branch::single)
        return lambda * coeff_B(n, *spec.beta) * coeff_B(m, *spec.beta) - coeff_B(n + m - 1, *spec.beta);
      return std::nullopt;
    case ClassId::F2:
      if (branch == Branch::single && !(is_even(n) && is_even(m)))
        return lambda * coeff_C(n, *spec.beta) * coeff_C(m, *spec.beta) - coeff_C(n + m - 1, *spec.beta);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::vector<double> branch_thresholds(const ClassSpec& spec, int n, int m) {
  spec.validate();
  if (n < 2 || m < 2) throw ParameterError("thresholds need n >= 2 and m >= 2");
  if (auto form = two_branch_form(spec, n, m)) return {0.0, form->threshold()};
  switch (spec.id) {
    case ClassId::typically_real:
      if (typically_real_case(n, m) == TrCase::iii) return {1.0};
      return {1.0, 1.5};
    case ClassId::S_real:
      return {1.0};
    case ClassId::F1:
      return {close_to_convex_threshold(n, m, *spec.beta)};
    case ClassId::F2:
      if (is_even(n) && is_even(m)) throw OutsideDomainError(DomainCode::both_even_unsupported);
      return {close_to_convex_threshold(n, m, *spec.beta)};
    default:
      throw UnsupportedClassError("no thresholds for class " + spec.describe());
  }
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::first: return "first";
    case Branch::second: return "second";
    case Branch::case_i_a: return "i_a";
    case Branch::case_i_b: return "i_b";
    case Branch::case_ii_a: return "ii_a";
    case Branch::case_ii_b: return "ii_b";
    case Branch::case_iii: return "iii";
    case Branch::single: return "single";
  }
  return "unknown";
}

std::string_view to_string(DomainCode c) {
  switch (c) {
    case DomainCode::none: return "NONE";
    case DomainCode::lambda_below_one: return "LAMBDA_BELOW_ONE";
    case DomainCode::below_mu_threshold: return "BELOW_MU_THRESHOLD";
    case DomainCode::both_even_unsupported: return "BOTH_EVEN_UNSUPPORTED";
  }
  return "UNKNOWN";
}

std::string_view to_string(Sharpness s) {
  switch (s) {
    case Sharpness::sharp: return "sharp";
    case Sharpness::sharp_conditional: return "sharp_conditional";
    case Sharpness::not_claimed: return "not_claimed";
  }
  return "unknown";
}

std::string_view to_string(Validity v) {
  return v == Validity::valid ? "valid" : "outside_theorem_domain";
}

}  // namespace zalcman
