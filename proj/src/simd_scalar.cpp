#include "gdqm/simd.hpp"

namespace gdqm::simd {
namespace {

cplx cdot_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx dot_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm2_scalar(const cplx* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return s;
}

void scale_by_real_scalar(cplx* dst, const cplx* src, const double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] * w[i];
}

void axpy_scalar(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rk4_combine_scalar(cplx* out, const cplx* r, const cplx* k1, const cplx* k2, const cplx* k3,
                        const cplx* k4, double c1, double c2, double c3, double c4,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = r[i] + c1 * k1[i] + c2 * k2[i] + c3 * k3[i] + c4 * k4[i];
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{cdot_scalar,       dot_scalar,  norm2_scalar, scale_by_real_scalar,
                       axpy_scalar, rk4_combine_scalar, "scalar"};
  return ops;
}

}  // namespace gdqm::simd
