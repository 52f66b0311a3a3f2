#include <immintrin.h>

#include "kernels_impl.hpp"

// AVX2 variants. Interleaved complex data is deinterleaved into re/im planes
// so each lane performs exactly the scalar operation sequence; only the
// reduction kernels reassociate (4 partial sums), so cdot/sum_abs2 agree with
// the scalar reference to a few ulps rather than bit-exactly.

namespace cascade::kernels::detail {

namespace {

struct Planes {
  __m256d re, im;
};

inline Planes load4(const complexd* p) {
  const __m256d v0 = _mm256_loadu_pd(reinterpret_cast<const double*>(p));
  const __m256d v1 = _mm256_loadu_pd(reinterpret_cast<const double*>(p + 2));
  const __m256d lo = _mm256_permute2f128_pd(v0, v1, 0x20);
  const __m256d hi = _mm256_permute2f128_pd(v0, v1, 0x31);
  return {_mm256_unpacklo_pd(lo, hi), _mm256_unpackhi_pd(lo, hi)};
}

inline void store4(complexd* p, Planes v) {
  const __m256d lo = _mm256_unpacklo_pd(v.re, v.im);
  const __m256d hi = _mm256_unpackhi_pd(v.re, v.im);
  _mm256_storeu_pd(reinterpret_cast<double*>(p), _mm256_permute2f128_pd(lo, hi, 0x20));
  _mm256_storeu_pd(reinterpret_cast<double*>(p + 2), _mm256_permute2f128_pd(lo, hi, 0x31));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

complexd cdot_avx2(const complexd* x, const complexd* y, std::size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const Planes xv = load4(x + i);
    const Planes yv = load4(y + i);
    acc_re = _mm256_add_pd(acc_re, _mm256_add_pd(_mm256_mul_pd(xv.re, yv.re),
                                                 _mm256_mul_pd(xv.im, yv.im)));
    acc_im = _mm256_add_pd(acc_im, _mm256_sub_pd(_mm256_mul_pd(xv.re, yv.im),
                                                 _mm256_mul_pd(xv.im, yv.re)));
  }
  double re = hsum(acc_re), im = hsum(acc_im);
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

double sum_abs2_avx2(const complexd* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const Planes xv = load4(x + i);
    acc = _mm256_add_pd(acc, _mm256_add_pd(_mm256_mul_pd(xv.re, xv.re),
                                           _mm256_mul_pd(xv.im, xv.im)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    s += xr * xr + xi * xi;
  }
  return s;
}

void abs2_avx2(const complexd* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const Planes xv = load4(x + i);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(xv.re, xv.re),
                                            _mm256_mul_pd(xv.im, xv.im)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = xr * xr + xi * xi;
  }
}

void rotate_pair_avx2(complexd* x, complexd* y, std::size_t n, double c, complexd srho) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(srho.real());
  const __m256d si = _mm256_set1_pd(srho.imag());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const Planes xv = load4(x + i);
    const Planes yv = load4(y + i);
    const __m256d nxr = _mm256_sub_pd(_mm256_mul_pd(cv, xv.re),
                                      _mm256_add_pd(_mm256_mul_pd(sr, yv.re),
                                                    _mm256_mul_pd(si, yv.im)));
    const __m256d nxi = _mm256_sub_pd(_mm256_mul_pd(cv, xv.im),
                                      _mm256_sub_pd(_mm256_mul_pd(sr, yv.im),
                                                    _mm256_mul_pd(si, yv.re)));
    const __m256d nyr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(sr, xv.re),
                                                    _mm256_mul_pd(si, xv.im)),
                                      _mm256_mul_pd(cv, yv.re));
    const __m256d nyi = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(sr, xv.im),
                                                    _mm256_mul_pd(si, xv.re)),
                                      _mm256_mul_pd(cv, yv.im));
    store4(x + i, {nxr, nxi});
    store4(y + i, {nyr, nyi});
  }
  if (i < n) rotate_pair_scalar(x + i, y + i, n - i, c, srho);
}

void scale_avx2(complexd* x, std::size_t n, double a) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  double* d = reinterpret_cast<double*>(x);
  for (; 2 * i + 4 <= 2 * n; i += 2)
    _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(av, _mm256_loadu_pd(d + 2 * i)));
  for (; i < n; ++i) x[i] = {x[i].real() * a, x[i].imag() * a};
}

}  // namespace cascade::kernels::detail
