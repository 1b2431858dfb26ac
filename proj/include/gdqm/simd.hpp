#pragma once

#include <complex>
#include <cstddef>

// Data-parallel primitives behind the dense kernel algebra. Every routine has
// a scalar reference implementation and (on x86-64) an AVX2+FMA variant picked
// once at startup via cpuid. Set GDQM_SIMD=scalar to force the reference path.

namespace gdqm::simd {

using cplx = std::complex<double>;

struct Ops {
  // sum_i conj(a[i]) * b[i]
  cplx (*cdot)(const cplx* a, const cplx* b, std::size_t n);
  // sum_i a[i] * b[i]  (no conjugation; trace contractions against a
  // pre-transposed operator)
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
  // sum_i |a[i]|^2
  double (*norm2)(const cplx* a, std::size_t n);
  // dst[i] = src[i] * w[i]  (complex kernel times real suppression table)
  void (*scale_by_real)(cplx* dst, const cplx* src, const double* w, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(cplx* y, cplx alpha, const cplx* x, std::size_t n);
  // out[i] = r[i] + c1 k1[i] + c2 k2[i] + c3 k3[i] + c4 k4[i]  (RK4 combine)
  void (*rk4_combine)(cplx* out, const cplx* r, const cplx* k1, const cplx* k2,
                      const cplx* k3, const cplx* k4, double c1, double c2, double c3,
                      double c4, std::size_t n);
  const char* name;
};

/// Active implementation (dispatched once, thread-safe).
const Ops& ops();

/// Reference implementation, for equivalence tests.
const Ops& scalar_ops();

/// AVX2 implementation if compiled in and supported at run time, else null.
const Ops* avx2_ops_if_supported();

inline cplx cdot(const cplx* a, const cplx* b, std::size_t n) { return ops().cdot(a, b, n); }
inline cplx dot(const cplx* a, const cplx* b, std::size_t n) { return ops().dot(a, b, n); }
inline double norm2(const cplx* a, std::size_t n) { return ops().norm2(a, n); }
inline void scale_by_real(cplx* dst, const cplx* src, const double* w, std::size_t n) {
  ops().scale_by_real(dst, src, w, n);
}
inline void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n) { ops().axpy(y, alpha, x, n); }
inline void rk4_combine(cplx* out, const cplx* r, const cplx* k1, const cplx* k2, const cplx* k3,
                        const cplx* k4, double c1, double c2, double c3, double c4,
                        std::size_t n) {
  ops().rk4_combine(out, r, k1, k2, k3, k4, c1, c2, c3, c4, n);
}

}  // namespace gdqm::simd
