#include "zalcman/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace zalcman {

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

void JsonLine::key(std::string_view k) {
  if (!body_.empty()) body_ += ',';
  body_ += json_string(k);
  body_ += ':';
}

JsonLine& JsonLine::add(std::string_view k, double v) {
  key(k);
  // JSON has no inf/nan literals
  body_ += std::isfinite(v) ? format_number(v) : json_string(format_number(v));
  return *this;
}

JsonLine& JsonLine::add(std::string_view k, int v) {
  key(k);
  body_ += std::to_string(v);
  return *this;
}

JsonLine& JsonLine::add(std::string_view k, bool v) {
  key(k);
  body_ += v ? "true" : "false";
  return *this;
}

JsonLine& JsonLine::add(std::string_view k, std::string_view v) {
  key(k);
  body_ += json_string(v);
  return *this;
}

JsonLine& JsonLine::add(std::string_view k, const std::optional<double>& v) {
  return v ? add(k, *v) : add_null(k);
}

JsonLine& JsonLine::add_null(std::string_view k) {
  key(k);
  body_ += "null";
  return *this;
}

JsonLine& JsonLine::add_raw(std::string_view k, std::string_view json) {
  key(k);
  body_ += json;
  return *this;
}

std::string JsonLine::str() const { return "{" + body_ + "}"; }

namespace {

std::string opt_param(const std::optional<double>& p) { return p ? format_number(*p) : ""; }
std::string opt_value(const std::optional<double>& p) { return p ? format_number(*p) : ""; }

}  // namespace

std::string csv_row(const TableRow& r) {
  std::ostringstream os;
  os << to_string(r.spec.id) << ',' << opt_param(r.spec.alpha) << ',' << opt_param(r.spec.beta) << ',' << r.n
     << ',' << r.m << ',' << format_number(r.lambda) << ',';
  if (r.bound.valid())
    os << format_number(*r.bound.value) << ',' << to_string(r.bound.branch) << ',' << to_string(r.bound.sharpness);
  else
    os << "n/a,n/a,n/a";
  os << ',' << opt_value(r.best_found) << ',' << (r.bound.valid() ? opt_value(r.gap) : std::string("n/a"));
  return os.str();
}

std::string json_row(const TableRow& r) {
  JsonLine j;
  j.add("class", to_string(r.spec.id)).add("alpha", r.spec.alpha).add("beta", r.spec.beta);
  j.add("n", r.n).add("m", r.m).add("lambda", r.lambda);
  j.add("validity", to_string(r.bound.validity));
  if (r.bound.valid()) {
    j.add("bound", r.bound.value).add("branch", to_string(r.bound.branch)).add("sharpness", to_string(r.bound.sharpness));
    if (r.bound.attaining_extremal) j.add("extremal", r.bound.attaining_extremal->describe());
  } else {
    j.add("bound", "n/a").add("code", to_string(r.bound.code));
  }
  if (r.best_found) j.add("best_found", r.best_found).add("gap", r.gap);
  return j.str();
}

std::string pretty_row(const TableRow& r) {
  std::ostringstream os;
  os << r.spec.describe() << " n=" << r.n << " m=" << r.m << " lambda=" << format_number(r.lambda) << "  ";
  if (r.bound.valid()) {
    os << "bound=" << format_number(*r.bound.value) << " branch=" << to_string(r.bound.branch)
       << " sharpness=" << to_string(r.bound.sharpness);
    if (r.bound.attaining_extremal) os << " extremal=" << r.bound.attaining_extremal->describe();
  } else {
    os << "bound=n/a code=" << to_string(r.bound.code);
  }
  if (r.best_found) {
    os << " best_found=" << format_number(*r.best_found);
    if (r.gap) os << " gap=" << format_number(*r.gap);
  }
  return os.str();
}

}  // namespace zalcman
