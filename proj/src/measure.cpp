#include "zalcman/measure.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "zalcman/errors.hpp"

namespace zalcman {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTolerance = 1e-12;

double angular_distance(double a, double b) {
  double d = std::fabs(a - b);
  return std::fmin(d, kTwoPi - d);
}

double mass_near(const std::vector<Atom>& atoms, double t) {
  double mass = 0.0;
  for (const auto& a : atoms)
    if (angular_distance(a.angle, t) <= kAngleTolerance) mass += a.weight;
  return mass;
}

}  // namespace

double normalize_angle(double t) {
  if (!std::isfinite(t)) throw MeasureError("atom angle must be finite");
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, bool symmetric)
    : atoms_(std::move(atoms)), symmetric_(symmetric) {
  if (atoms_.empty()) throw MeasureError("measure needs at least one atom");
  double sum = 0.0;
  for (auto& a : atoms_) {
    if (!std::isfinite(a.weight) || a.weight < 0.0) throw MeasureError("atom weights must be finite and >= 0");
    a.angle = normalize_angle(a.angle);
    sum += a.weight;
  }
  if (std::fabs(sum - 1.0) > kWeightSumTolerance)
    throw MeasureError("atom weights must sum to 1 (got " + std::to_string(sum) + ")");
  if (symmetric_ && !is_symmetric(atoms_))
    throw SymmetryError("measure flagged symmetric is not invariant under t -> 2 pi - t");
}

AtomicMeasure AtomicMeasure::point_mass(double angle) { return AtomicMeasure({{1.0, angle}}, false); }

AtomicMeasure AtomicMeasure::symmetrized(const std::vector<Atom>& atoms) {
  std::vector<Atom> paired;
  paired.reserve(2 * atoms.size());
  for (const auto& a : atoms) {
    const double t = normalize_angle(a.angle);
    paired.push_back({0.5 * a.weight, t});
    paired.push_back({0.5 * a.weight, normalize_angle(kTwoPi - t)});
  }
  return AtomicMeasure(std::move(paired), true);
}

bool AtomicMeasure::is_symmetric(const std::vector<Atom>& atoms, double tol) {
  for (const auto& a : atoms) {
    const double t = normalize_angle(a.angle);
    const double mirror = normalize_angle(kTwoPi - t);
    if (std::fabs(mass_near(atoms, t) - mass_near(atoms, mirror)) > tol) return false;
  }
  return true;
}

AtomicMeasure measure_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MeasureError(std::string("measure JSON parse error: ") + e.what());
  }
  const nlohmann::json* list = &doc;
  bool symmetric = false;
  bool explicit_flag = false;
  if (doc.is_object()) {
    if (!doc.contains("atoms")) throw MeasureError("measure JSON object needs an \"atoms\" array");
    list = &doc.at("atoms");
    if (doc.contains("symmetric")) {
      symmetric = doc.at("symmetric").get<bool>();
      explicit_flag = true;
    }
  }
  if (!list->is_array()) throw MeasureError("measure JSON must be an array of {\"w\", \"t\"} objects");
  std::vector<Atom> atoms;
  for (const auto& item : *list) {
    if (!item.is_object() || !item.contains("w") || !item.contains("t") || !item.at("w").is_number() ||
        !item.at("t").is_number())
      throw MeasureError("each measure atom must be an object with numeric \"w\" and \"t\"");
    atoms.push_back({item.at("w").get<double>(), item.at("t").get<double>()});
  }
  if (!explicit_flag) {
    for (auto& a : atoms) a.angle = normalize_angle(a.angle);
    symmetric = AtomicMeasure::is_symmetric(atoms);
  }
  return AtomicMeasure(std::move(atoms), symmetric);
}

AtomicMeasure read_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeasureError("cannot open measure file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return measure_from_json(buf.str());
}

std::string measure_to_json(const AtomicMeasure& measure) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : measure.atoms()) arr.push_back({{"w", a.weight}, {"t", a.angle}});
  return arr.dump();
}

}  // namespace zalcman
