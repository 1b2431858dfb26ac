#include "gdqm/units.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gdqm/errors.hpp"

namespace gdqm {

PlanckUnits load_planck_units(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open constants config: " + path);
  PlanckUnits u;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    std::string key = line.substr(0, eq == std::string::npos ? line.size() : eq);
    key.erase(std::remove_if(key.begin(), key.end(), [](char c) { return std::isspace(c); }),
              key.end());
    if (key.empty()) continue;
    if (eq == std::string::npos) {
      throw ValidationError("constants config line " + std::to_string(lineno) + ": missing '='");
    }
    double value = 0.0;
    std::istringstream vs(line.substr(eq + 1));
    if (!(vs >> value) || !(value > 0)) {
      throw ValidationError("constants config: bad value for key " + key);
    }
    if (key == "planck_length_cm") {
      u.length_cm = value;
    } else if (key == "planck_time_s") {
      u.time_s = value;
    } else if (key == "planck_mass_g") {
      u.mass_g = value;
    } else {
      throw ValidationError("constants config: unknown key " + key);
    }
  }
  return u;
}

namespace {

enum class Dimension { Length, Time, Mass };

struct UnitDef {
  Dimension dim;
  double to_base;  // factor into cm / s / g
};

UnitDef unit_def(const std::string& name, const PlanckUnits& c) {
  if (name == "cm") return {Dimension::Length, 1.0};
  if (name == "m") return {Dimension::Length, 100.0};
  if (name == "planck_length" || name == "lP") return {Dimension::Length, c.length_cm};
  if (name == "s") return {Dimension::Time, 1.0};
  if (name == "yr") return {Dimension::Time, kSecondsPerYear};
  if (name == "planck_time" || name == "tP") return {Dimension::Time, c.time_s};
  if (name == "g") return {Dimension::Mass, 1.0};
  if (name == "kg") return {Dimension::Mass, 1000.0};
  if (name == "planck_mass" || name == "mP") return {Dimension::Mass, c.mass_g};
  throw ValidationError("planck_convert: unknown unit " + name);
}

}  // namespace

double planck_convert(double value, const std::string& from_unit, const std::string& to_unit,
                      const PlanckUnits& consts) {
  const UnitDef from = unit_def(from_unit, consts);
  const UnitDef to = unit_def(to_unit, consts);
  if (from.dim != to.dim) {
    throw ValidationError("planck_convert: incompatible units " + from_unit + " -> " + to_unit);
  }
  return value * (from.to_base / to.to_base);
}

}  // namespace gdqm
