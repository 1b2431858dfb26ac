// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma; it
// must only be reached through the runtime cpuid dispatch in simd.cpp.

#include "gdqm/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace gdqm::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// [re, im] lane swap within each complex
inline __m256d swap_ri(__m256d v) { return _mm256_shuffle_pd(v, v, 0b0101); }

const __m256d kNegOdd = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);

cplx cdot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);                                // ar*br, ai*bi
    acc_im = _mm256_fmadd_pd(va, _mm256_mul_pd(swap_ri(vb), kNegOdd), acc_im);  // ar*bi, -ai*br
  }
  double re = hsum(acc_re), im = hsum(acc_im);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_re = _mm256_fmadd_pd(va, _mm256_mul_pd(vb, kNegOdd), acc_re);  // ar*br, -ai*bi
    acc_im = _mm256_fmadd_pd(va, swap_ri(vb), acc_im);                 // ar*bi, ai*br
  }
  double re = hsum(acc_re), im = hsum(acc_im);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm2_avx2(const cplx* a, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

void scale_by_real_avx2(cplx* dst, const cplx* src, const double* w, std::size_t n) {
  double* pd = reinterpret_cast<double*>(dst);
  const double* ps = reinterpret_cast<const double*>(src);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vw = _mm256_permute4x64_pd(
        _mm256_castpd128_pd256(_mm_loadu_pd(w + i)), 0x50);  // w0 w0 w1 w1
    _mm256_storeu_pd(pd + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(ps + 2 * i), vw));
  }
  for (; i < n; ++i) dst[i] = src[i] * w[i];
}

void axpy_avx2(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  double* py = reinterpret_cast<double*>(y);
  const double* px = reinterpret_cast<const double*>(x);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d t = _mm256_mul_pd(ar, vx);
    __m256d u = _mm256_mul_pd(ai, swap_ri(vx));
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, _mm256_addsub_pd(t, u)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void rk4_combine_avx2(cplx* out, const cplx* r, const cplx* k1, const cplx* k2, const cplx* k3,
                      const cplx* k4, double c1, double c2, double c3, double c4, std::size_t n) {
  double* po = reinterpret_cast<double*>(out);
  const double* pr = reinterpret_cast<const double*>(r);
  const double* p1 = reinterpret_cast<const double*>(k1);
  const double* p2 = reinterpret_cast<const double*>(k2);
  const double* p3 = reinterpret_cast<const double*>(k3);
  const double* p4 = reinterpret_cast<const double*>(k4);
  const __m256d v1 = _mm256_set1_pd(c1), v2 = _mm256_set1_pd(c2);
  const __m256d v3 = _mm256_set1_pd(c3), v4 = _mm256_set1_pd(c4);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d acc = _mm256_loadu_pd(pr + 2 * i);
    acc = _mm256_fmadd_pd(v1, _mm256_loadu_pd(p1 + 2 * i), acc);
    acc = _mm256_fmadd_pd(v2, _mm256_loadu_pd(p2 + 2 * i), acc);
    acc = _mm256_fmadd_pd(v3, _mm256_loadu_pd(p3 + 2 * i), acc);
    acc = _mm256_fmadd_pd(v4, _mm256_loadu_pd(p4 + 2 * i), acc);
    _mm256_storeu_pd(po + 2 * i, acc);
  }
  for (; i < n; ++i) {
    out[i] = r[i] + c1 * k1[i] + c2 * k2[i] + c3 * k3[i] + c4 * k4[i];
  }
}

}  // namespace

const Ops* avx2_ops_table() {
  static const Ops ops{cdot_avx2,       dot_avx2,  norm2_avx2, scale_by_real_avx2,
                       axpy_avx2, rk4_combine_avx2, "avx2"};
  return &ops;
}

}  // namespace gdqm::simd

#else

namespace gdqm::simd {
const Ops* avx2_ops_table() { return nullptr; }
}  // namespace gdqm::simd

#endif
