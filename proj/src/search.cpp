#include "zalcman/search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "zalcman/class_models.hpp"

namespace zalcman {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Free parameters: (groups - 1) logits (the first is pinned at 0) then `groups` angles.
// For symmetric classes every group is a mirror pair (w/2, t), (w/2, 2 pi - t).
class MeasureParameterization {
 public:
  MeasureParameterization(int atoms, bool symmetric)
      : symmetric_(symmetric), groups_(symmetric ? (atoms + 1) / 2 : atoms) {}

  int dimension() const { return 2 * groups_ - 1; }
  int groups() const { return groups_; }
  bool symmetric() const { return symmetric_; }

  void decode(const Eigen::VectorXd& x, std::vector<Atom>& atoms) const {
    double top = 0.0;
    for (int g = 1; g < groups_; ++g) top = std::max(top, x(g - 1));
    weights_.resize(groups_);
    weights_[0] = std::exp(-top);
    double sum = weights_[0];
    for (int g = 1; g < groups_; ++g) {
      weights_[g] = std::exp(x(g - 1) - top);
      sum += weights_[g];
    }
    atoms.clear();
    for (int g = 0; g < groups_; ++g) {
      const double w = weights_[g] / sum;
      const double t = x(groups_ - 1 + g);
      if (symmetric_) {
        atoms.push_back({0.5 * w, t});
        atoms.push_back({0.5 * w, -t});
      } else {
        atoms.push_back({w, t});
      }
    }
  }

 private:
  bool symmetric_;
  int groups_;
  mutable std::vector<double> weights_;
};

class FunctionalObjective {
 public:
  FunctionalObjective(const ClassSpec& spec, const FunctionalQuery& q, const MeasureParameterization& param)
      : spec_(spec), q_(q), param_(param), coeffs_(static_cast<std::size_t>(q.required_order())) {}

  double phi(const Eigen::VectorXd& x) {
    param_.decode(x, atoms_);
    builder_.build(spec_, atoms_, false, coeffs_);
    const auto a = [&](int k) { return coeffs_[static_cast<std::size_t>(k - 1)]; };
    return std::abs(q_.lambda * a(q_.n) * a(q_.m) - a(q_.required_order()));
  }

 private:
  const ClassSpec& spec_;
  const FunctionalQuery& q_;
  const MeasureParameterization& param_;
  SeriesBuilder builder_;
  std::vector<Atom> atoms_;
  std::vector<std::complex<double>> coeffs_;
};

AtomicMeasure to_measure(const MeasureParameterization& param, const Eigen::VectorXd& x) {
  std::vector<Atom> atoms;
  param.decode(x, atoms);
  double sum = 0.0;
  for (const auto& a : atoms) sum += a.weight;
  for (auto& a : atoms) a.weight /= sum;
  if (param.symmetric()) {
    for (std::size_t i = 0; i + 1 < atoms.size(); i += 2) {
      atoms[i].angle = normalize_angle(atoms[i].angle);
      atoms[i + 1].angle = normalize_angle(kTwoPi - atoms[i].angle);
    }
  }
  return AtomicMeasure(std::move(atoms), param.symmetric());
}

}  // namespace

void SearchConfig::validate() const {
  if (atoms < 1) throw ParameterError("search needs at least one atom");
  if (restarts < 1) throw ParameterError("search needs at least one restart");
  if (max_iters < 1) throw ParameterError("search needs max_iters >= 1");
  if (!(f_tol > 0.0) || !(initial_step > 0.0)) throw ParameterError("search tolerances must be positive");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

NelderMeadResult minimize_nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                                      const Eigen::VectorXd& x0, const Eigen::VectorXd& step, int max_iters,
                                      double f_tol) {
  const Eigen::Index d = x0.size();
  std::vector<Eigen::VectorXd> simplex(static_cast<std::size_t>(d + 1));
  std::vector<double> values(static_cast<std::size_t>(d + 1));
  std::vector<std::size_t> order(static_cast<std::size_t>(d + 1));

  Eigen::VectorXd best = x0;
  double best_value = objective(x0);
  Eigen::VectorXd scale = step;
  int iterations = 0;

  Eigen::VectorXd centroid(d), xr(d), xe(d), xc(d);
  while (iterations < max_iters) {
    const double cycle_start = best_value;
    simplex[0] = best;
    values[0] = best_value;
    for (Eigen::Index i = 0; i < d; ++i) {
      simplex[i + 1] = best;
      simplex[i + 1](i) += scale(i);
      values[i + 1] = objective(simplex[i + 1]);
    }

    while (iterations < max_iters) {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      const std::size_t lo = order.front(), hi = order.back(), second = order[order.size() - 2];
      if (values[hi] - values[lo] <= f_tol) break;
      ++iterations;

      centroid.setZero();
      for (std::size_t i = 0; i < simplex.size(); ++i)
        if (i != hi) centroid += simplex[i];
      centroid /= static_cast<double>(d);

      xr = centroid + (centroid - simplex[hi]);
      const double fr = objective(xr);
      if (fr < values[lo]) {
        xe = centroid + 2.0 * (centroid - simplex[hi]);
        const double fe = objective(xe);
        if (fe < fr) {
          simplex[hi] = xe;
          values[hi] = fe;
        } else {
          simplex[hi] = xr;
          values[hi] = fr;
        }
        continue;
      }
      if (fr < values[second]) {
        simplex[hi] = xr;
        values[hi] = fr;
        continue;
      }
      const bool outside = fr < values[hi];
      xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                   : Eigen::VectorXd(centroid + 0.5 * (simplex[hi] - centroid));
      const double fc = objective(xc);
      if (fc < (outside ? fr : values[hi])) {
        simplex[hi] = xc;
        values[hi] = fc;
        continue;
      }
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i == lo) continue;
        simplex[i] = simplex[lo] + 0.5 * (simplex[i] - simplex[lo]);
        values[i] = objective(simplex[i]);
      }
    }

    const auto it = std::min_element(values.begin(), values.end());
    const auto idx = static_cast<std::size_t>(it - values.begin());
    if (*it < best_value) {
      best_value = *it;
      best = simplex[idx];
    }
    if (cycle_start - best_value <= f_tol) break;
    scale *= 0.1;
  }
  return {best, best_value, iterations};
}

SearchResult maximize_functional(const ClassSpec& spec, const FunctionalQuery& q, const SearchConfig& cfg) {
  spec.validate();
  cfg.validate();
  if (!has_representation(spec.id))
    throw UnsupportedClassError("class " + spec.describe() + " has no measure representation to search");

  const MeasureParameterization param(cfg.atoms, spec.id == ClassId::typically_real);
  const int d = param.dimension();
  Eigen::VectorXd step(d);
  for (int i = 0; i < d; ++i) step(i) = i < param.groups() - 1 ? 2.0 * cfg.initial_step : cfg.initial_step;

  std::vector<RestartSummary> trace;
  trace.reserve(static_cast<std::size_t>(cfg.restarts));
  Eigen::VectorXd best_x;
  double best_value = -1.0;
  int best_restart = 0;
  int total_iters = 0;

  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> logit(-1.0, 1.0), angle(0.0, kTwoPi);
    Eigen::VectorXd x0(d);
    for (int i = 0; i < d; ++i) x0(i) = i < param.groups() - 1 ? logit(rng) : angle(rng);

    FunctionalObjective objective(spec, q, param);
    auto result = minimize_nelder_mead([&](const Eigen::VectorXd& x) { return -objective.phi(x); }, x0, step,
                                       cfg.max_iters, cfg.f_tol);
    const double value = -result.value;
    trace.push_back({r, value, result.iterations});
    total_iters += result.iterations;
    if (value > best_value) {
      best_value = value;
      best_x = std::move(result.x);
      best_restart = r;
    }
  }

  AtomicMeasure measure = to_measure(param, best_x);
  const double recomputed = eval_functional(series_from_measure(spec, measure, q.required_order()), q);
  BoundResult b = bound(spec, q);
  std::optional<double> gap;
  if (b.valid()) gap = *b.value - recomputed;
  return SearchResult{recomputed, std::move(measure), std::move(b), gap, total_iters, best_restart, std::move(trace)};
}

std::vector<SweepRow> sweep(const ClassSpec& spec, int n, int m, std::span<const double> lambda_grid,
                            const SearchConfig& cfg) {
  std::vector<SweepRow> rows;
  rows.reserve(lambda_grid.size());
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    SearchConfig row_cfg = cfg;
    row_cfg.seed = derive_seed(cfg.seed, 0x5EED0000ULL + i);
    auto result = maximize_functional(spec, FunctionalQuery(n, m, lambda_grid[i]), row_cfg);
    rows.push_back({lambda_grid[i], std::move(result.bound), result.best_value, result.bound_gap,
                    std::move(result.best_measure)});
  }
  return rows;
}

}  // namespace zalcman
