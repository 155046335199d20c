#pragma once

// Piecewise upper bounds of |lambda a_n a_m - a_{n+m-1}| per function class and the
// coefficient weights A_n(alpha), B_n(beta), C_n(beta) that appear in them.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zalcman/class_spec.hpp"
#include "zalcman/series.hpp"

namespace zalcman {

enum class WeightKind { A, B, C };

/// Weight values indexed from n = 1 (value 1 at n = 1).
struct WeightTable {
  WeightKind kind;
  double param;
  std::vector<double> values;

  double operator()(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
  int size() const { return static_cast<int>(values.size()); }
};

/// Memoized table for n = 1..n_max. Thread-safe.
WeightTable weight_table(WeightKind kind, double param, int n_max);

/// (1/(n-1)!) prod_{j=0}^{n-2} (2(1 - alpha) + j), A_1 = 1.
double coeff_A(int n, double alpha);
/// (1 + 2(n-1)(1 - beta)) / n.
double coeff_B(int n, double beta);
/// (1 + (n-1)(1 - beta)) / n for odd n, 1 - beta for even n.
double coeff_C(int n, double beta);

enum class Branch {
  first,      // 0 <= lambda <= threshold
  second,     // lambda < 0 or lambda > threshold
  case_i_a,   // typically real, n = 2, m even, 1 <= lambda <= 3/2
  case_i_b,   // typically real, n = 2, m even, lambda > 3/2
  case_ii_a,  // typically real, m = 2, n even, 1 <= lambda <= 3/2
  case_ii_b,  // typically real, m = 2, n even, lambda > 3/2
  case_iii,   // typically real, all other (n, m)
  single,     // one-formula bounds (S_real, F1, F2)
};

enum class Validity { valid, outside_theorem_domain };

enum class DomainCode { none, lambda_below_one, below_mu_threshold, both_even_unsupported };

enum class Sharpness { sharp, sharp_conditional, not_claimed };

struct BoundResult {
  std::optional<double> value;  // absent outside the theorem domain
  Branch branch = Branch::single;
  Validity validity = Validity::valid;
  DomainCode code = DomainCode::none;
  std::optional<ExtremalSpec> attaining_extremal;
  Sharpness sharpness = Sharpness::not_claimed;

  bool valid() const { return validity == Validity::valid; }
  /// Sharpness is claimed for this cell (sharp or sharp_conditional with its condition met).
  bool claimed_sharp() const { return sharpness != Sharpness::not_claimed; }
};

/// Bound for the class and query. Out-of-domain queries return validity
/// outside_theorem_domain with a code and no value.
BoundResult bound(const ClassSpec& spec, const FunctionalQuery& q);

/// Value of one branch formula at q.lambda regardless of which branch q.lambda falls in.
/// Empty when the branch does not belong to (spec, n, m).
std::optional<double> branch_value(const ClassSpec& spec, const FunctionalQuery& q, Branch branch);

/// Sorted lambda values where the bound changes formula or becomes valid.
/// Throws OutsideDomainError for F2 with n and m both even.
std::vector<double> branch_thresholds(const ClassSpec& spec, int n, int m);

std::string_view to_string(Branch b);
std::string_view to_string(DomainCode c);
std::string_view to_string(Sharpness s);
std::string_view to_string(Validity v);

/// Raised where a bound is required but the query lies outside the theorem domain.
class OutsideDomainError : public std::domain_error {
 public:
  explicit OutsideDomainError(DomainCode code)
      : std::domain_error(std::string("outside theorem domain: ") + std::string(to_string(code))), code_(code) {}
  DomainCode code() const noexcept { return code_; }

 private:
  DomainCode code_;
};

}  // namespace zalcman
