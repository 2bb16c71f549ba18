#include "stepp/kernels.hpp"

#include <arm_neon.h>

namespace stepp::kernels {

namespace {

void sq_dist_accum_neon(double* acc, const double* col, double z, std::size_t n) {
  const float64x2_t zv = vdupq_n_f64(z);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(col + i), zv);
    // vmulq + vaddq, not vfmaq: results must match the scalar reference.
    const float64x2_t a = vaddq_f64(vld1q_f64(acc + i), vmulq_f64(d, d));
    vst1q_f64(acc + i, a);
  }
  for (; i < n; ++i) {
    const double d = col[i] - z;
    acc[i] += d * d;
  }
}

void atomic_weight_neon(double* w, const double* s, double c, std::size_t n) {
  const float64x2_t ones = vdupq_n_f64(1.0);
  const float64x2_t zeros = vdupq_n_f64(0.0);
  const float64x2_t cv = vdupq_n_f64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t sv = vld1q_f64(s + i);
    const float64x2_t far = vminq_f64(vdivq_f64(ones, sv), ones);
    const uint64x2_t near_mask = vcltq_f64(sv, cv);
    float64x2_t r = vbslq_f64(near_mask, sv, far);
    const uint64x2_t zero_mask = vceqq_f64(sv, zeros);
    r = vbslq_f64(zero_mask, ones, r);
    vst1q_f64(w + i, r);
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

double min_value_neon(const double* x, std::size_t n) {
  std::size_t i = 0;
  double m;
  if (n >= 2) {
    float64x2_t mv = vld1q_f64(x);
    for (i = 2; i + 2 <= n; i += 2) {
      mv = vminq_f64(mv, vld1q_f64(x + i));
    }
    m = vminvq_f64(mv);
  } else {
    m = x[0];
    i = 1;
  }
  for (; i < n; ++i) {
    if (x[i] < m) m = x[i];
  }
  return m;
}

const Kernels kNeon = {sq_dist_accum_neon, atomic_weight_neon, min_value_neon, "neon"};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

}  // namespace stepp::kernels
