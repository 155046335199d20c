#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zalcman {

inline constexpr double kWeightSumTolerance = 1e-12;

struct Atom {
  double weight;
  double angle;  // radians, normalized into [0, 2 pi)
};

/// Finite point-mass probability measure on [0, 2 pi).
///
/// With `symmetric` set the measure is invariant under t -> 2 pi - t, which is what
/// makes the induced Caratheodory function real on the real axis.
class AtomicMeasure {
 public:
  /// Validates weights and (if requested) symmetry; angles are reduced mod 2 pi.
  AtomicMeasure(std::vector<Atom> atoms, bool symmetric = false);

  static AtomicMeasure point_mass(double angle);

  /// Mirror-pairs every atom: (w, t) -> (w/2, t), (w/2, 2 pi - t).
  static AtomicMeasure symmetrized(const std::vector<Atom>& atoms);

  /// True when the mass at every angle equals the mass at its mirror angle.
  static bool is_symmetric(const std::vector<Atom>& atoms, double tol = kWeightSumTolerance);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool symmetric() const { return symmetric_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<Atom> atoms_;
  bool symmetric_;
};

/// Reduces an angle into [0, 2 pi).
double normalize_angle(double t);

/// Parses `[{"w": .., "t": ..}, ...]` or `{"symmetric": bool, "atoms": [...]}`.
/// The array form marks the measure symmetric when its atoms are mirror-invariant.
AtomicMeasure measure_from_json(const std::string& text);
AtomicMeasure read_measure_file(const std::string& path);
std::string measure_to_json(const AtomicMeasure& measure);

}  // namespace zalcman
