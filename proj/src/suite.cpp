#include "zalcman/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "zalcman/report.hpp"

namespace zalcman {

namespace {

using Complex = std::complex<double>;

constexpr double kContinuityTolerance = 1e-12;
constexpr double kOracleCompleteness = 1e-2;

std::string fmt_cell(int n, int m, double lambda) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " lambda=" + format_number(lambda);
}

// Running minimum of a randomized battery, reported as one record.
struct Battery {
  std::string theorem, branch, extremal;
  double tol;
  double worst = std::numeric_limits<double>::infinity();
  long count = 0;

  void add(double value) {
    worst = std::min(worst, value);
    ++count;
  }
  SuiteRecord record(const std::string& suite) const {
    SuiteRecord r;
    r.suite = suite;
    r.theorem = theorem;
    r.branch = branch;
    r.extremal = extremal;
    r.margin = count ? worst + tol : 0.0;
    r.passed = count > 0 && worst >= -tol;
    r.functional_value = count ? std::optional<double>(worst) : std::nullopt;
    r.detail = std::to_string(count) + " evaluations, minimum value " + format_number(worst);
    return r;
  }
};

std::vector<Complex> random_z(std::mt19937_64& rng, bool real) {
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0), phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> z(static_cast<std::size_t>(len(rng)));
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double r = std::ldexp(unit(rng), -static_cast<int>(k));
    z[k] = real ? Complex(r) : std::polar(r, phase(rng));
  }
  return z;
}

std::vector<double> lambda_probes(const ClassSpec& spec, int n, int m) {
  std::set<double> probes{-1.0, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
  for (double t : branch_thresholds(spec, n, m)) {
    probes.insert(t);
    probes.insert(t + 1.0);
  }
  return {probes.begin(), probes.end()};
}

std::vector<SuiteRecord> sharpness_suite(const SuiteOptions& opts) {
  std::vector<SuiteRecord> out;
  for (ClassId id : all_class_ids()) {
    for (const auto& spec : representative_specs(id)) {
      for (int n = 2; n <= 5; ++n) {
        for (int m = 2; m <= 5; ++m) {
          if (spec.id == ClassId::F2 && n % 2 == 0 && m % 2 == 0) continue;
          for (double lambda : lambda_probes(spec, n, m)) {
            const FunctionalQuery q(n, m, lambda);
            const BoundResult b = bound(spec, q);
            if (!b.valid() || !b.claimed_sharp() || !b.attaining_extremal) continue;
            const double gap = sharpness_gap(*b.attaining_extremal, spec, q);
            SuiteRecord r;
            r.suite = "sharpness";
            r.theorem = spec.describe();
            r.branch = std::string(to_string(b.branch));
            r.extremal = b.attaining_extremal->describe();
            r.bound = b.value;
            r.functional_value = *b.value - gap;
            r.margin = opts.tol - std::fabs(gap);
            r.passed = std::fabs(gap) <= opts.tol;
            r.detail = fmt_cell(n, m, lambda) + " sharpness=" + std::string(to_string(b.sharpness));
            out.push_back(std::move(r));
          }
        }
      }
    }
  }
  return out;
}

std::vector<SuiteRecord> continuity_suite(const SuiteOptions&) {
  std::vector<SuiteRecord> out;
  for (ClassId id : all_class_ids()) {
    for (const auto& spec : representative_specs(id)) {
      for (int n = 2; n <= 8; ++n) {
        for (int m = 2; m <= 8; ++m) {
          if (spec.id == ClassId::F2 && n % 2 == 0 && m % 2 == 0) continue;
          for (double t : branch_thresholds(spec, n, m)) {
            const double eps = 1e-9 * std::max(1.0, std::fabs(t));
            const BoundResult left = bound(spec, FunctionalQuery(n, m, t - eps));
            const BoundResult right = bound(spec, FunctionalQuery(n, m, t + eps));
            if (!left.valid() || !right.valid()) continue;  // threshold is where the domain starts
            const FunctionalQuery q(n, m, t);
            const double lv = *branch_value(spec, q, left.branch);
            const double rv = *branch_value(spec, q, right.branch);
            SuiteRecord r;
            r.suite = "continuity";
            r.theorem = spec.describe();
            r.branch = std::string(to_string(left.branch)) + "|" + std::string(to_string(right.branch));
            r.bound = lv;
            r.functional_value = rv;
            r.margin = kContinuityTolerance - std::fabs(lv - rv);
            r.passed = std::fabs(lv - rv) <= kContinuityTolerance;
            r.detail = fmt_cell(n, m, t);
            out.push_back(std::move(r));
          }
        }
      }
    }
  }
  return out;
}

std::vector<SuiteRecord> hermitian_suite(const SuiteOptions& opts) {
  std::vector<SuiteRecord> out;
  std::mt19937_64 rng(opts.seed);
  const double tol = opts.membership_tol;
  Battery toeplitz{"toeplitz:measure", "", "", tol};
  Battery modulus{"|c_n|<=2", "", "", 1e-12};
  for (ClassId id : all_class_ids()) {
    if (!has_representation(id)) continue;
    const ClassSpec spec = representative_specs(id).front();
    const bool is_tr = id == ClassId::typically_real;
    const bool attached = id != ClassId::starlike_hull && id != ClassId::convex_hull;
    const bool replay = id == ClassId::R || id == ClassId::F1 || id == ClassId::F2 || is_tr;
    Battery form_p{"hermitian_P:" + spec.describe(), "", "", tol};
    Battery form_attached{"hermitian_P:attached:" + spec.describe(), "", "", tol};
    Battery form_t{"hermitian_T:" + spec.describe(), "", "", tol};
    Battery proof{"proof_form:" + spec.describe(), "", "", tol};
    std::uniform_int_distribution<int> idx(2, 4);
    std::uniform_real_distribution<double> lam(-2.0, 6.0);
    for (int s = 0; s < opts.samples; ++s) {
      const AtomicMeasure mu = random_measure(rng, 6, is_tr || s % 4 == 0);
      const auto c = caratheodory_from_measure(mu, 9);
      for (int k = 1; k <= c.order(); ++k) modulus.add(2.0 - std::abs(c(k)));
      toeplitz.add(toeplitz_min_eig(c));
      const auto f = series_from_measure(spec, mu, 10);
      std::optional<CaratheodorySeries> derived;
      if (attached) derived = caratheodory_of(spec, f);
      for (int j = 0; j < opts.z_sequences; ++j) {
        const auto z = random_z(rng, is_tr);
        form_p.add(hermitian_form_P(c, z));
        if (derived) form_attached.add(hermitian_form_P(*derived, z));
        if (is_tr) form_t.add(hermitian_form_T(f, z));
      }
      if (replay) proof.add(proof_form_replay(spec, mu, FunctionalQuery(idx(rng), idx(rng), lam(rng))));
    }
    out.push_back(form_p.record("hermitian"));
    if (attached) out.push_back(form_attached.record("hermitian"));
    if (is_tr) out.push_back(form_t.record("hermitian"));
    if (replay) out.push_back(proof.record("hermitian"));
  }
  out.push_back(toeplitz.record("hermitian"));
  out.push_back(modulus.record("hermitian"));

  ComplexVector<double> bad = ComplexVector<double>::Zero(1);
  bad(0) = 3.0;
  const double eig = toeplitz_min_eig(CaratheodorySeries(bad));
  SuiteRecord v;
  v.suite = "hermitian";
  v.theorem = "toeplitz:violator c_1=3";
  v.functional_value = eig;
  v.margin = -0.5 - eig;
  v.passed = eig < -0.5;
  v.detail = "minimum eigenvalue must be negative";
  out.push_back(std::move(v));
  return out;
}

std::vector<SuiteRecord> oracle_suite(const SuiteOptions& opts) {
  std::vector<SuiteRecord> out;
  const std::pair<int, int> pairs[] = {{1, 1}, {1, 2}, {2, 3}};
  auto push = [&](std::string theorem, std::string branch, double param, int n, int m, double value, double b,
                  bool completeness) {
    SuiteRecord r;
    r.suite = "oracles";
    r.theorem = std::move(theorem);
    r.branch = std::move(branch);
    r.bound = b;
    r.functional_value = value;
    r.margin = b + opts.tol - value;
    r.passed = value <= b + opts.tol;
    r.detail = "param=" + format_number(param) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
    if (completeness) {
      r.passed = r.passed && value >= b - kOracleCompleteness;
      r.margin = std::min(r.margin, value - (b - kOracleCompleteness));
      r.detail += " (attained)";
    }
    out.push_back(std::move(r));
  };
  for (double mu : {-1.0, 0.0, 0.25, 0.5, 1.0, 2.0}) {
    for (auto [n, m] : pairs) {
      const double v = oracle_caratheodory_product(mu, n, m, opts.grid);
      const bool attained = (mu == 0.5 && n == 1 && m == 1) || mu == 2.0 || mu == 0.0 || mu == 1.0 || mu == -1.0;
      push("caratheodory_product", mu >= 0.0 && mu <= 1.0 ? "first" : "second", mu, n, m, v,
           caratheodory_product_bound(mu), attained);
    }
  }
  for (double lambda : {-1.0, 0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
    for (auto [n, m] : pairs) {
      const double v = oracle_moment_functional(lambda, n, m, opts.grid);
      const bool attained = (lambda == 1.0 && n == 1 && m == 1) || lambda <= 0.0 || lambda >= 2.0;
      push("moment_functional", lambda >= 0.0 && lambda <= 2.0 ? "first" : "second", lambda, n, m, v,
           moment_functional_bound(lambda), attained);
    }
  }
  return out;
}

SuiteRecord structural_record(std::string theorem, std::string extremal, double err, double tol, std::string detail) {
  SuiteRecord r;
  r.suite = "structural";
  r.theorem = std::move(theorem);
  r.extremal = std::move(extremal);
  r.functional_value = err;
  r.margin = tol - err;
  r.passed = err <= tol;
  r.detail = std::move(detail);
  return r;
}

std::vector<SuiteRecord> structural_suite(const SuiteOptions& opts) {
  std::vector<SuiteRecord> out;
  constexpr int N = 30;
  for (double p : {0.0, 0.5, -0.5, 0.25, -1.0}) {
    const auto A = weight_table(WeightKind::A, p, N);
    const auto B = weight_table(WeightKind::B, p, N);
    const auto C = weight_table(WeightKind::C, p, N);
    const auto f1 = extremal_series(ExtremalSpec::f1_starlike(p), N);
    const auto f2 = extremal_series(ExtremalSpec::f2_convex(p), N);
    const auto f1b = extremal_series(ExtremalSpec::f1beta_F1(p), N);
    const auto f3 = extremal_series(ExtremalSpec::f3_F2(p), N);
    double eA = 0.0, eB = 0.0, eC = 0.0;
    for (int n = 1; n <= N; ++n) {
      eA = std::max(eA, std::abs(f1(n) - A(n)));
      eB = std::max(eB, std::abs(f1b(n) - B(n)));
      eC = std::max(eC, std::abs(f3(n) - C(n)));
    }
    const double alex = (alexander(f1).coeffs() - f2.coeffs()).cwiseAbs().maxCoeff();
    const std::string param = "param=" + format_number(p);
    out.push_back(structural_record("table:A", "f1_starlike", eA, 0.0, param));
    out.push_back(structural_record("table:B", "f1beta_F1", eB, 0.0, param));
    out.push_back(structural_record("table:C", "f3_F2", eC, 0.0, param));
    out.push_back(structural_record("alexander", "f1_starlike->f2_convex", alex, 1e-12, param));
  }

  std::mt19937_64 rng(opts.seed ^ 0x57A7ULL);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * std::numbers::pi), lam(-3.0, 5.0);
  std::uniform_int_distribution<int> idx(2, 6);
  const std::vector<ClassId> ids = {ClassId::starlike_hull, ClassId::convex_hull, ClassId::R, ClassId::f_over_z,
                                    ClassId::F1, ClassId::F2};
  double worst_rot = 0.0, worst_alex = 0.0, worst_imag = 0.0;
  for (int t = 0; t < 100; ++t) {
    const ClassSpec spec = representative_specs(ids[static_cast<std::size_t>(t) % ids.size()]).front();
    const AtomicMeasure mu = random_measure(rng, 6, false);
    const auto f = series_from_measure(spec, mu, 11);
    const FunctionalQuery q(idx(rng), idx(rng), lam(rng));
    const double phi = eval_functional(f, q);
    worst_rot = std::max(worst_rot, std::fabs(eval_functional(rotate(f, theta(rng)), q) - phi));

    const auto star = series_from_measure(ClassSpec::starlike_hull(0.25), mu, 11);
    const auto conv = series_from_measure(ClassSpec::convex_hull(0.25), mu, 11);
    worst_alex = std::max(worst_alex, (alexander(star).coeffs() - conv.coeffs()).cwiseAbs().maxCoeff());

    const auto tr = series_from_measure(ClassSpec::typically_real(), random_measure(rng, 6, true), 11);
    worst_imag = std::max(worst_imag, tr.coeffs().imag().cwiseAbs().maxCoeff());
  }
  out.push_back(structural_record("rotation_invariance", "", worst_rot, 1e-12, "100 random (series, theta, q)"));
  out.push_back(structural_record("alexander:measure", "starlike_hull->convex_hull", worst_alex, 1e-12,
                                  "100 random measures"));
  out.push_back(structural_record("typically_real:real_coefficients", "", worst_imag, 1e-12, "100 random measures"));
  return out;
}

std::vector<SuiteRecord> guards_suite(const SuiteOptions&) {
  std::vector<SuiteRecord> out;
  auto expect = [&](const ClassSpec& spec, int n, int m, double lambda, DomainCode code) {
    const FunctionalQuery q(n, m, lambda);
    const BoundResult b = bound(spec, q);
    bool threw = false;
    try {
      check_bound(extremal_series(ExtremalSpec::koebe(), n + m - 1), spec, q);
    } catch (const OutsideDomainError& e) {
      threw = e.code() == code;
    }
    SuiteRecord r;
    r.suite = "guards";
    r.theorem = spec.describe();
    r.branch = std::string(to_string(code));
    r.passed = !b.valid() && !b.value && b.code == code && threw;
    r.margin = r.passed ? 0.0 : -1.0;
    r.detail = fmt_cell(n, m, lambda);
    out.push_back(std::move(r));
  };
  for (double beta : {0.0, 0.5, -1.0}) {
    for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}}) {
      const double t = branch_thresholds(ClassSpec::F1(beta), n, m).front();
      expect(ClassSpec::F1(beta), n, m, std::nextafter(t, -1e9), DomainCode::below_mu_threshold);
      expect(ClassSpec::F2(beta), n, m, std::nextafter(t, -1e9), DomainCode::below_mu_threshold);
      expect(ClassSpec::F1(beta), n, m, 0.0, DomainCode::below_mu_threshold);
    }
    expect(ClassSpec::F2(beta), 2, 4, 3.0, DomainCode::both_even_unsupported);
    expect(ClassSpec::F2(beta), 4, 4, 100.0, DomainCode::both_even_unsupported);
  }
  for (double lambda : {0.999999, 0.5, 0.0, -2.0}) {
    expect(ClassSpec::typically_real(), 2, 4, lambda, DomainCode::lambda_below_one);
    expect(ClassSpec::typically_real(), 3, 3, lambda, DomainCode::lambda_below_one);
    expect(ClassSpec::S_real(), 3, 3, lambda, DomainCode::lambda_below_one);
  }
  return out;
}

std::vector<SuiteRecord> membership_suite(const SuiteOptions& opts) {
  std::vector<SuiteRecord> out;
  std::mt19937_64 rng(opts.seed ^ 0x3E3BULL);
  const int per_spec = std::max(1, opts.samples / 10);
  for (ClassId id : all_class_ids()) {
    for (const auto& spec : representative_specs(id)) {
      Battery margins{"check_bound:" + spec.describe(), "", "", opts.tol};
      std::vector<CoefficientSeries> members;
      if (has_representation(id)) {
        for (int s = 0; s < per_spec; ++s)
          members.push_back(series_from_measure(spec, random_measure(rng, 6, id == ClassId::typically_real), 11));
      } else {
        const auto koebe = extremal_series(ExtremalSpec::koebe(), 11);
        members = {CoefficientSeries::identity(11), koebe, rotate(koebe, std::numbers::pi),
                   CoefficientSeries::from_real(std::vector<double>(11, 1.0))};
      }
      for (const auto& f : members) {
        for (int n = 2; n <= 6; ++n) {
          for (int m = 2; m <= 6; ++m) {
            for (int l = -2; l <= 6; ++l) {
              const FunctionalQuery q(n, m, l);
              if (!bound(spec, q).valid()) continue;
              margins.add(check_bound(f, spec, q, opts.tol).margin);
            }
          }
        }
      }
      out.push_back(margins.record("membership"));
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sharpness", "continuity", "hermitian", "oracles",
                                                 "structural", "guards", "membership"};
  return names;
}

std::vector<SuiteRecord> run_suite(std::string_view name, const SuiteOptions& opts) {
  if (name == "all") {
    std::vector<SuiteRecord> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opts);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  if (name == "sharpness") return sharpness_suite(opts);
  if (name == "continuity") return continuity_suite(opts);
  if (name == "hermitian") return hermitian_suite(opts);
  if (name == "oracles") return oracle_suite(opts);
  if (name == "structural") return structural_suite(opts);
  if (name == "guards") return guards_suite(opts);
  if (name == "membership") return membership_suite(opts);
  throw ParameterError("unknown suite: " + std::string(name));
}

std::string to_json(const SuiteRecord& r) {
  JsonLine j;
  j.add("suite", r.suite).add("theorem", r.theorem).add("branch", r.branch).add("extremal", r.extremal);
  j.add("passed", r.passed).add("margin", r.margin).add("bound", r.bound).add("functional_value", r.functional_value);
  if (!r.detail.empty()) j.add("detail", r.detail);
  return j.str();
}

std::vector<ClassSpec> representative_specs(ClassId id) {
  switch (id) {
    case ClassId::starlike_hull:
      return {ClassSpec::starlike_hull(0.0), ClassSpec::starlike_hull(0.5), ClassSpec::starlike_hull(-0.5),
              ClassSpec::starlike_hull(0.25)};
    case ClassId::convex_hull:
      return {ClassSpec::convex_hull(0.0), ClassSpec::convex_hull(0.5), ClassSpec::convex_hull(-0.5),
              ClassSpec::convex_hull(0.25)};
    case ClassId::R:
      return {ClassSpec::R(0.0), ClassSpec::R(0.5), ClassSpec::R(-1.0)};
    case ClassId::f_over_z:
      return {ClassSpec::f_over_z(0.0), ClassSpec::f_over_z(0.5), ClassSpec::f_over_z(-1.0)};
    case ClassId::typically_real:
      return {ClassSpec::typically_real()};
    case ClassId::S_real:
      return {ClassSpec::S_real()};
    case ClassId::F1:
      return {ClassSpec::F1(0.0), ClassSpec::F1(0.5), ClassSpec::F1(-1.0)};
    case ClassId::F2:
      return {ClassSpec::F2(0.0), ClassSpec::F2(0.5), ClassSpec::F2(-1.0)};
  }
  return {};
}

AtomicMeasure random_measure(std::mt19937_64& rng, int max_atoms, bool symmetric) {
  std::uniform_int_distribution<int> count(1, max_atoms);
  std::exponential_distribution<double> mass(1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Atom> atoms(static_cast<std::size_t>(count(rng)));
  double total = 0.0;
  for (auto& a : atoms) {
    a.weight = mass(rng) + 1e-3;
    a.angle = angle(rng);
    total += a.weight;
  }
  for (auto& a : atoms) a.weight /= total;
  if (symmetric) return AtomicMeasure::symmetrized(atoms);
  return AtomicMeasure(std::move(atoms));
}

}  // namespace zalcman
