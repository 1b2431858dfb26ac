#pragma once

#include <string>

namespace gdqm {

/// CODATA conversion constants between Planck and CGS units. Loadable from a
/// key-value config file so the defaults are data, not code.
struct PlanckUnits {
  double length_cm = 1.616255e-33;
  double time_s = 5.391247e-44;
  double mass_g = 2.176434e-5;
};

/// Parses lines of the form "planck_length_cm = 1.616255e-33". Unknown keys
/// are rejected; missing keys keep their defaults.
PlanckUnits load_planck_units(const std::string& path);

/// Ratio conversion between units of one dimension. Supported units:
///   length: cm, m, planck_length
///   time:   s, yr, planck_time
///   mass:   g, kg, planck_mass
double planck_convert(double value, const std::string& from_unit, const std::string& to_unit,
                      const PlanckUnits& consts = {});

// Seconds in a Julian year.
inline constexpr double kSecondsPerYear = 3.15576e7;

}  // namespace gdqm
