#include "stepp/kernels.hpp"

#include <cstdlib>
#include <string>

namespace stepp::kernels {

namespace {

void sq_dist_accum_scalar(double* acc, const double* col, double z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = col[i] - z;
    acc[i] += d * d;
  }
}

void atomic_weight_scalar(double* w, const double* s, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
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

double min_value_scalar(const double* x, std::size_t n) {
  double m = x[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] < m) m = x[i];
  }
  return m;
}

const Kernels kScalar = {sq_dist_accum_scalar, atomic_weight_scalar, min_value_scalar,
                         "scalar"};

const Kernels* resolve_active() {
  if (const char* env = std::getenv("STEPP_KERNELS")) {
    if (const Kernels* k = variant(env)) return k;
    return &kScalar;
  }
  const auto variants = available();
  return variants.back();  // best supported variant is listed last
}

}  // namespace

#ifdef STEPP_HAVE_AVX2_TU
const Kernels* avx2_kernels();  // defined in kernels_avx2.cpp
bool avx2_supported();
#endif
#ifdef STEPP_HAVE_NEON_TU
const Kernels* neon_kernels();  // defined in kernels_neon.cpp
#endif

const Kernels& scalar() { return kScalar; }

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out = {&kScalar};
#ifdef STEPP_HAVE_AVX2_TU
  if (avx2_supported()) out.push_back(avx2_kernels());
#endif
#ifdef STEPP_HAVE_NEON_TU
  out.push_back(neon_kernels());
#endif
  return out;
}

const Kernels* variant(std::string_view name) {
  for (const Kernels* k : available()) {
    if (name == k->name) return k;
  }
  return nullptr;
}

const Kernels& active() {
  static const Kernels* chosen = resolve_active();
  return *chosen;
}

}  // namespace stepp::kernels
