#include "stepp/kernels.hpp"

#include <immintrin.h>

namespace stepp::kernels {

namespace {

void sq_dist_accum_avx2(double* acc, const double* col, double z, std::size_t n) {
  const __m256d zv = _mm256_set1_pd(z);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(col + i), zv);
    const __m256d a = _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_mul_pd(d, d));
    _mm256_storeu_pd(acc + i, a);
  }
  for (; i < n; ++i) {
    const double d = col[i] - z;
    acc[i] += d * d;
  }
}

void atomic_weight_avx2(double* w, const double* s, double c, std::size_t n) {
  const __m256d ones = _mm256_set1_pd(1.0);
  const __m256d zeros = _mm256_setzero_pd();
  const __m256d cv = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d sv = _mm256_loadu_pd(s + i);
    const __m256d far = _mm256_min_pd(_mm256_div_pd(ones, sv), ones);
    const __m256d near_mask = _mm256_cmp_pd(sv, cv, _CMP_LT_OQ);
    __m256d r = _mm256_blendv_pd(far, sv, near_mask);
    const __m256d zero_mask = _mm256_cmp_pd(sv, zeros, _CMP_EQ_OQ);
    r = _mm256_blendv_pd(r, ones, zero_mask);
    _mm256_storeu_pd(w + i, r);
  }
  for (; i < n; ++i) {
    const double si = s[i];
    if (si == 0.0) {
      w[i] = 1.0;
    } else if (si < c) {
      w[i] = si;
    } else {
      const double inv = 1.0 / si;
      w[i] = inv < 1.0 ? inv : 1.0;
    }
  }
}

double min_value_avx2(const double* x, std::size_t n) {
  std::size_t i = 0;
  double m;
  if (n >= 4) {
    __m256d mv = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) {
      mv = _mm256_min_pd(mv, _mm256_loadu_pd(x + i));
    }
    const __m128d lo = _mm256_castpd256_pd128(mv);
    const __m128d hi = _mm256_extractf128_pd(mv, 1);
    const __m128d m2 = _mm_min_pd(lo, hi);
    const __m128d m1 = _mm_min_sd(m2, _mm_unpackhi_pd(m2, m2));
    m = _mm_cvtsd_f64(m1);
  } else {
    m = x[0];
    i = 1;
  }
  for (; i < n; ++i) {
    if (x[i] < m) m = x[i];
  }
  return m;
}

const Kernels kAvx2 = {sq_dist_accum_avx2, atomic_weight_avx2, min_value_avx2, "avx2"};

}  // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

}  // namespace stepp::kernels
