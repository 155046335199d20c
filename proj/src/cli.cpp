#include "zalcman/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "zalcman/class_models.hpp"
#include "zalcman/report.hpp"
#include "zalcman/search.hpp"
#include "zalcman/suite.hpp"
#include "zalcman/verify.hpp"

namespace zalcman {

namespace {

enum class Format { pretty, csv, json };

struct ClassArgs {
  std::string name;
  std::optional<double> alpha;
  std::optional<double> beta;

  ClassSpec spec() const {
    ClassSpec s{*parse_class_id(name), alpha, beta};
    s.validate();
    return s;
  }
};

std::vector<std::string> class_names() {
  std::vector<std::string> names;
  for (ClassId id : all_class_ids()) names.emplace_back(to_string(id));
  return names;
}

std::vector<std::string> extremal_names() {
  std::vector<std::string> names;
  for (int i = 0; i <= static_cast<int>(ExtremalId::mixture); ++i)
    names.emplace_back(to_string(static_cast<ExtremalId>(i)));
  return names;
}

void add_format(CLI::App* cmd, Format& format) {
  const std::map<std::string, Format> formats{{"pretty", Format::pretty}, {"csv", Format::csv}, {"json", Format::json}};
  cmd->add_option("--format", format, "Output format: pretty, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("FORMAT");
}

void add_class(CLI::App* cmd, ClassArgs& c, bool required) {
  auto* opt = cmd->add_option("--class", c.name, "Function class")->check(CLI::IsMember(class_names()));
  if (required) opt->required();
  cmd->add_option("--alpha", c.alpha, "Order alpha < 1 (starlike_hull, convex_hull)");
  cmd->add_option("--beta", c.beta, "Order beta < 1 (R, f_over_z, F1, F2)");
}

void add_search(CLI::App* cmd, SearchConfig& cfg) {
  cmd->add_option("--atoms", cfg.atoms, "Atoms per measure")->capture_default_str();
  cmd->add_option("--restarts", cfg.restarts, "Random restarts")->capture_default_str();
  cmd->add_option("--iters", cfg.max_iters, "Simplex iterations per restart")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  cmd->add_option("--ftol", cfg.f_tol, "Simplex value-spread tolerance")->capture_default_str();
}

std::string complex_text(std::complex<double> v) {
  if (v.imag() == 0.0) return format_number(v.real());
  std::string s = format_number(v.real());
  s += v.imag() < 0.0 ? "-" : "+";
  s += format_number(std::fabs(v.imag())) + "i";
  return s;
}

void print_row(std::ostream& out, Format f, const TableRow& row) {
  switch (f) {
    case Format::pretty: out << pretty_row(row) << '\n'; break;
    case Format::csv: out << csv_row(row) << '\n'; break;
    case Format::json: out << json_row(row) << '\n'; break;
  }
}

void print_series(std::ostream& out, Format f, const CoefficientSeries& s) {
  if (f == Format::pretty) {
    for (int n = 1; n <= s.order(); ++n) out << (n > 1 ? "," : "") << complex_text(s(n));
    out << '\n';
    return;
  }
  if (f == Format::csv) out << "n,re,im\n";
  for (int n = 1; n <= s.order(); ++n) {
    if (f == Format::csv)
      out << n << ',' << format_number(s(n).real()) << ',' << format_number(s(n).imag()) << '\n';
    else
      out << JsonLine().add("n", n).add("re", s(n).real()).add("im", s(n).imag()).str() << '\n';
  }
}

struct BoundCmd {
  ClassArgs cls;
  int n = 2, m = 2;
  double lambda = 1.0;
  std::string measure_file;
  double tol = kBoundTolerance;
  Format format = Format::pretty;
};

int run_bound(const BoundCmd& c, std::ostream& out, std::ostream& err) {
  const ClassSpec spec = c.cls.spec();
  const FunctionalQuery q(c.n, c.m, c.lambda);
  TableRow row{spec, c.n, c.m, c.lambda, bound(spec, q), std::nullopt, std::nullopt};
  if (c.format == Format::csv) out << kCsvHeader << '\n';
  print_row(out, c.format, row);
  if (!row.bound.valid()) {
    err << "outside theorem domain: " << to_string(row.bound.code) << '\n';
    return kExitOutsideDomain;
  }
  if (c.measure_file.empty()) return kExitOk;

  const AtomicMeasure mu = read_measure_file(c.measure_file);
  const auto f = series_from_measure(spec, mu, q.required_order());
  const CheckReport rep = check_bound(f, spec, q, c.tol);
  if (c.format == Format::json) {
    out << JsonLine()
               .add("check", "measure")
               .add("functional_value", rep.functional_value)
               .add("margin", rep.margin)
               .add("passed", rep.passed)
               .str()
        << '\n';
  } else {
    out << "phi=" << format_number(rep.functional_value) << " margin=" << format_number(rep.margin)
        << " passed=" << (rep.passed ? "true" : "false") << '\n';
  }
  return rep.passed ? kExitOk : kExitCheckFailed;
}

struct TableCmd {
  ClassArgs cls;
  std::vector<int> ns{2, 3, 4, 5};
  std::vector<int> ms{2, 3, 4, 5};
  std::vector<double> lambdas{-1.0, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
  bool search = false;
  SearchConfig cfg;
  Format format = Format::csv;
};

int run_table(const TableCmd& c, std::ostream& out) {
  const ClassSpec spec = c.cls.spec();
  if (c.search) c.cfg.validate();
  if (c.format == Format::csv) out << kCsvHeader << '\n';
  bool violation = false;
  for (int n : c.ns) {
    for (int m : c.ms) {
      for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
        const double lambda = c.lambdas[i];
        const FunctionalQuery q(n, m, lambda);
        TableRow row{spec, n, m, lambda, bound(spec, q), std::nullopt, std::nullopt};
        if (c.search && row.bound.valid() && has_representation(spec.id)) {
          SearchConfig cfg = c.cfg;
          cfg.seed = derive_seed(c.cfg.seed, static_cast<std::uint64_t>(((n * 64) + m) * 1024) + i);
          const auto r = maximize_functional(spec, q, cfg);
          row.best_found = r.best_value;
          row.gap = r.bound_gap;
          if (r.bound_gap && *r.bound_gap < -kBoundTolerance) violation = true;
        }
        print_row(out, c.format, row);
      }
    }
  }
  return violation ? kExitCheckFailed : kExitOk;
}

struct ExtremalCmd {
  std::string id;
  std::optional<double> alpha, beta;
  int order = 0;
  double rotation = 0.0;
  int N = 10;
  std::vector<double> weights, angles;
  std::string base;
  int canonical = 0;
  ClassArgs cls;
  std::string measure_file;
  Format format = Format::pretty;
};

ExtremalSpec extremal_from_args(const std::string& name, const ExtremalCmd& c) {
  const ExtremalId id = *parse_extremal_id(name);
  const bool wants_alpha = extremal_uses_alpha(id), wants_beta = extremal_uses_beta(id);
  if (c.alpha && !wants_alpha) throw ParameterError(name + " does not take --alpha");
  if (c.beta && !wants_beta) throw ParameterError(name + " does not take --beta");
  if ((wants_alpha && !c.alpha) || (wants_beta && !c.beta))
    throw ParameterError(name + " needs --" + std::string(wants_alpha ? "alpha" : "beta"));
  return ExtremalSpec::make(id, wants_alpha ? *c.alpha : wants_beta ? *c.beta : 0.0, c.order);
}

int run_extremal(const ExtremalCmd& c, std::ostream& out) {
  if (!c.measure_file.empty()) {
    if (c.cls.name.empty()) throw ParameterError("--measure-file needs --class");
    const ClassSpec spec = ClassArgs{c.cls.name, c.alpha, c.beta}.spec();
    print_series(out, c.format, series_from_measure(spec, read_measure_file(c.measure_file), c.N));
    return kExitOk;
  }
  if (c.id.empty()) throw ParameterError("extremal needs --id or --class with --measure-file");
  ExtremalSpec e;
  if (c.id == "mixture") {
    if (c.base.empty()) throw ParameterError("mixture needs --base");
    const ExtremalSpec base = extremal_from_args(c.base, c);
    if (c.canonical > 0)
      e = ExtremalSpec::canonical_mixture(base, c.canonical);
    else
      e = ExtremalSpec::mixture(c.weights, c.angles, base);
  } else {
    e = extremal_from_args(c.id, c);
  }
  if (c.rotation != 0.0) e = e.rotated(c.rotation);
  print_series(out, c.format, extremal_series(e, c.N));
  return kExitOk;
}

struct VerifyCmd {
  std::string suite = "all";
  SuiteOptions opts;
  Format format = Format::json;
};

int run_verify(const VerifyCmd& c, std::ostream& out, std::ostream& err) {
  const auto records = run_suite(c.suite, c.opts);
  long failed = 0;
  if (c.format == Format::csv) out << "suite,theorem,branch,extremal,passed,margin,bound,functional_value\n";
  for (const auto& r : records) {
    if (!r.passed) ++failed;
    if (c.format == Format::csv) {
      out << r.suite << ',' << r.theorem << ',' << r.branch << ',' << r.extremal << ',' << (r.passed ? 1 : 0) << ','
          << format_number(r.margin) << ',' << (r.bound ? format_number(*r.bound) : "") << ','
          << (r.functional_value ? format_number(*r.functional_value) : "") << '\n';
    } else if (c.format == Format::json || !r.passed) {
      out << to_json(r) << '\n';
    }
  }
  if (c.format == Format::pretty)
    out << records.size() - static_cast<std::size_t>(failed) << "/" << records.size() << " checks passed\n";
  err << records.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

struct SearchCmd {
  ClassArgs cls;
  int n = 2, m = 2;
  std::vector<double> lambdas;
  SearchConfig cfg;
  Format format = Format::pretty;
};

int run_search(const SearchCmd& c, std::ostream& out) {
  const ClassSpec spec = c.cls.spec();
  bool violation = false;
  if (c.format == Format::csv) out << kCsvHeader << '\n';
  auto check = [&](const std::optional<double>& gap) {
    if (gap && *gap < -kBoundTolerance) violation = true;
  };
  if (c.lambdas.size() == 1) {
    const FunctionalQuery q(c.n, c.m, c.lambdas.front());
    const auto r = maximize_functional(spec, q, c.cfg);
    check(r.bound_gap);
    print_row(out, c.format, TableRow{spec, c.n, c.m, q.lambda, r.bound, r.best_value, r.bound_gap});
    if (c.format == Format::pretty)
      out << "best_restart=" << r.best_restart << " iterations=" << r.iterations_used
          << " measure=" << measure_to_json(r.best_measure) << '\n';
  } else {
    for (const auto& row : sweep(spec, c.n, c.m, c.lambdas, c.cfg)) {
      check(row.gap);
      print_row(out, c.format, TableRow{spec, c.n, c.m, row.lambda, row.bound, row.best_found, row.gap});
    }
  }
  return violation ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds, extremals and numerical checks for |lambda a_n a_m - a_{n+m-1}|", "zalcman"};
  app.require_subcommand(1);

  BoundCmd bound_cmd;
  auto* b = app.add_subcommand("bound", "Bound for one (class, n, m, lambda) cell");
  add_class(b, bound_cmd.cls, true);
  b->add_option("-n", bound_cmd.n, "Index n >= 2")->required();
  b->add_option("-m", bound_cmd.m, "Index m >= 2")->required();
  b->add_option("--lambda", bound_cmd.lambda, "Real lambda")->required();
  b->add_option("--measure-file", bound_cmd.measure_file, "Also check the member given by a JSON measure")
      ->check(CLI::ExistingFile);
  b->add_option("--tol", bound_cmd.tol, "Bound check tolerance")->capture_default_str();
  add_format(b, bound_cmd.format);

  TableCmd table_cmd;
  auto* t = app.add_subcommand("table", "Grid of bounds over n, m and lambda");
  add_class(t, table_cmd.cls, true);
  t->add_option("-n", table_cmd.ns, "Comma-separated n values")->delimiter(',');
  t->add_option("-m", table_cmd.ms, "Comma-separated m values")->delimiter(',');
  t->add_option("--lambda", table_cmd.lambdas, "Comma-separated lambda values")->delimiter(',');
  t->add_flag("--search", table_cmd.search, "Also run the maximizer in each valid cell");
  add_search(t, table_cmd.cfg);
  add_format(t, table_cmd.format);

  ExtremalCmd ex_cmd;
  auto* e = app.add_subcommand("extremal", "Coefficients of a catalog function or of a measure-generated member");
  e->add_option("--id", ex_cmd.id, "Extremal id")->check(CLI::IsMember(extremal_names()));
  e->add_option("--alpha", ex_cmd.alpha, "alpha parameter");
  e->add_option("--beta", ex_cmd.beta, "beta parameter");
  e->add_option("--order", ex_cmd.order, "k for the *_power kernels");
  e->add_option("--rotation", ex_cmd.rotation, "Rotation angle theta");
  e->add_option("-N", ex_cmd.N, "Number of coefficients")->capture_default_str();
  e->add_option("--base", ex_cmd.base, "Base extremal of a mixture")->check(CLI::IsMember(extremal_names()));
  e->add_option("--weights", ex_cmd.weights, "Mixture weights")->delimiter(',');
  e->add_option("--angles", ex_cmd.angles, "Mixture rotation angles")->delimiter(',');
  e->add_option("--canonical", ex_cmd.canonical, "Equal-weight canonical mixture for index n");
  e->add_option("--class", ex_cmd.cls.name, "Class for --measure-file")->check(CLI::IsMember(class_names()));
  e->add_option("--measure-file", ex_cmd.measure_file, "JSON measure")->check(CLI::ExistingFile);
  add_format(e, ex_cmd.format);

  VerifyCmd verify_cmd;
  auto* v = app.add_subcommand("verify", "Run the property suites (JSON lines by default)");
  std::vector<std::string> suites = suite_names();
  suites.emplace_back("all");
  v->add_option("--suite", verify_cmd.suite, "Suite name")->check(CLI::IsMember(suites))->capture_default_str();
  v->add_option("--tol", verify_cmd.opts.tol, "Bound and equality tolerance")->capture_default_str();
  v->add_option("--membership-tol", verify_cmd.opts.membership_tol, "Positivity tolerance")->capture_default_str();
  v->add_option("--seed", verify_cmd.opts.seed, "Seed")->capture_default_str();
  v->add_option("--samples", verify_cmd.opts.samples, "Random measures per class")->capture_default_str();
  v->add_option("--grid-angles", verify_cmd.opts.grid.angles, "Oracle grid angles")->capture_default_str();
  v->add_option("--grid-weights", verify_cmd.opts.grid.weights, "Oracle grid weights")->capture_default_str();
  add_format(v, verify_cmd.format);

  SearchCmd search_cmd;
  auto* s = app.add_subcommand("search", "Maximize the functional over K-atom measures");
  add_class(s, search_cmd.cls, true);
  s->add_option("-n", search_cmd.n, "Index n >= 2")->required();
  s->add_option("-m", search_cmd.m, "Index m >= 2")->required();
  s->add_option("--lambda", search_cmd.lambdas, "lambda, or a comma-separated list for a sweep")
      ->delimiter(',')
      ->required();
  add_search(s, search_cmd.cfg);
  add_format(s, search_cmd.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (b->parsed()) return run_bound(bound_cmd, out, err);
    if (t->parsed()) return run_table(table_cmd, out);
    if (e->parsed()) return run_extremal(ex_cmd, out);
    if (v->parsed()) return run_verify(verify_cmd, out, err);
    if (s->parsed()) return run_search(search_cmd, out);
  } catch (const OutsideDomainError& ex) {
    err << "outside theorem domain: " << to_string(ex.code()) << '\n';
    return kExitOutsideDomain;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zalcman
