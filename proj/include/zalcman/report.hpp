#pragma once

// Row formatting for tables, sweeps and verification records. Doubles are always
// written with 17 significant digits.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zalcman/bounds.hpp"

namespace zalcman {

std::string format_number(double v);

/// Minimal JSON object writer for one output line.
class JsonLine {
 public:
  JsonLine& add(std::string_view key, double v);
  JsonLine& add(std::string_view key, int v);
  JsonLine& add(std::string_view key, bool v);
  JsonLine& add(std::string_view key, std::string_view v);
  JsonLine& add(std::string_view key, const char* v) { return add(key, std::string_view(v)); }
  JsonLine& add(std::string_view key, const std::optional<double>& v);
  JsonLine& add_null(std::string_view key);
  JsonLine& add_raw(std::string_view key, std::string_view json);
  std::string str() const;

 private:
  void key(std::string_view k);
  std::string body_;
};

std::string json_string(std::string_view s);

/// One bound-table cell; best_found/gap are filled only when a search ran.
struct TableRow {
  ClassSpec spec;
  int n;
  int m;
  double lambda;
  BoundResult bound;
  std::optional<double> best_found;
  std::optional<double> gap;
};

inline constexpr std::string_view kCsvHeader = "class,alpha,beta,n,m,lambda,bound,branch,sharpness,best_found,gap";

/// Out-of-domain cells print "n/a" for bound, branch and sharpness (the branch column
/// carries the domain code in the pretty form only); unset search columns are empty.
std::string csv_row(const TableRow& row);
std::string json_row(const TableRow& row);
std::string pretty_row(const TableRow& row);

}  // namespace zalcman
