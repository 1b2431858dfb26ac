#include "gdqm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace gdqm {

namespace {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1] (QUADPACK constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double result_g = fc * kWg[3];
  double result_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    result_k += kWgk[j] * fsum;
    if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
  }
  result_k *= h;
  result_g *= h;
  const double err = std::pow(200.0 * std::abs(result_k - result_g), 1.5);
  return {a, b, result_k, std::min(std::abs(result_k - result_g), err)};
}

struct ErrOrder {
  bool operator()(const Panel& p, const Panel& q) const { return p.error < q.error; }
};

QuadratureResult adapt(const std::function<double(double)>& f, std::vector<Panel> initial,
                       const QuadratureSpec& spec, double extra_bound, double extra_value) {
  std::priority_queue<Panel, std::vector<Panel>, ErrOrder> heap(ErrOrder{}, std::move(initial));
  int panels = static_cast<int>(heap.size());

  double value = 0.0, error = 0.0;
  {
    std::priority_queue<Panel, std::vector<Panel>, ErrOrder> copy = heap;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
  }

  while (true) {
    const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(value + extra_value));
    if (error + extra_bound <= target) break;
    if (heap.empty()) break;
    if (panels + 1 > spec.panel_budget) {
      throw QuadratureBudgetExceeded("quadrature budget exceeded", value + extra_value,
                                     error + extra_bound);
    }
    Panel worst = heap.top();
    heap.pop();
    if (worst.b - worst.a <= 1e-15 * std::max(1.0, std::abs(worst.b))) {
      // Cannot subdivide further; freeze this panel's estimate.
      error -= worst.error;
      extra_bound += worst.error;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  return {value + extra_value, error + extra_bound, panels};
}

std::vector<Panel> preselect(const std::function<double(double)>& f, double a, double b) {
  // Pre-split finely enough to resolve period-~pi oscillation up to kappa ~
  // 600, then geometrically; the adaptive stage refines from there.
  std::vector<Panel> panels;
  const double fine_end = std::min(b, 600.0);
  const double w = 1.5;
  double x = a;
  while (x < fine_end) {
    double nx = std::min(x + w, fine_end);
    panels.push_back(gk15(f, x, nx));
    x = nx;
  }
  while (x < b) {
    double nx = std::min(x * 1.08 + 1.0, b);
    panels.push_back(gk15(f, x, nx));
    x = nx;
  }
  return panels;
}

}  // namespace

QuadratureResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (!(b > a)) throw ValidationError("integrate_finite: empty interval");
  return adapt(f, preselect(f, a, b), spec, 0.0, 0.0);
}

QuadratureResult integrate_semiinfinite_full(
    const std::function<double(double)>& f, const QuadratureSpec& spec,
    const std::optional<std::function<TailEstimate(double)>>& tail) {
  spec.validate();
  const double cutoff = spec.tail_cutoff;

  TailEstimate te;
  if (tail) {
    te = (*tail)(cutoff);
  } else {
    // Envelope fallback: sample |f| in the last decade before the cutoff and
    // assume the integrand decays at least as fast as 1/k^2 beyond it.
    double peak = 0.0;
    for (int i = 0; i <= 32; ++i) {
      const double x = cutoff * (0.9 + 0.1 * i / 32.0);
      peak = std::max(peak, std::abs(f(x)));
    }
    te.value = 0.0;
    te.bound = peak * cutoff;
  }

  QuadratureResult r = adapt(f, preselect(f, 0.0, cutoff), spec, te.bound, te.value);
  return r;
}

double integrate_semiinfinite(const std::function<double(double)>& f, const QuadratureSpec& spec,
                              const std::optional<std::function<TailEstimate(double)>>& tail) {
  return integrate_semiinfinite_full(f, spec, tail).value;
}

}  // namespace gdqm
