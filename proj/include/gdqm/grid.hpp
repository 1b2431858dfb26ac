#pragma once

#include <cmath>
#include <vector>

#include "gdqm/errors.hpp"

namespace gdqm {

/// Uniform 1D grid with hard-wall (psi = 0) boundaries.
struct Grid1D {
  double x_min = -1.0;
  double x_max = 1.0;
  int n = 2;

  Grid1D() = default;
  Grid1D(double x_min, double x_max, int n) : x_min(x_min), x_max(x_max), n(n) {
    if (n < 2) throw ValidationError("Grid1D: need at least 2 points");
    if (!(x_max > x_min)) throw ValidationError("Grid1D: x_max must exceed x_min");
  }

  double dx() const { return (x_max - x_min) / (n - 1); }
  double x(int i) const { return x_min + i * dx(); }

  /// Symmetric about 0 with an odd point count, so x = 0 is a grid node.
  bool symmetric() const {
    return n % 2 == 1 && std::abs(x_min + x_max) <= 1e-12 * (x_max - x_min);
  }

  std::vector<double> points() const {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = x(i);
    return xs;
  }

  bool operator==(const Grid1D& o) const {
    return n == o.n && x_min == o.x_min && x_max == o.x_max;
  }
};

/// Symmetric grid [-half_width, half_width] with odd n.
inline Grid1D symmetric_grid(double half_width, int n) {
  if (n % 2 == 0) throw ValidationError("symmetric_grid: point count must be odd");
  return Grid1D(-half_width, half_width, n);
}

}  // namespace gdqm
