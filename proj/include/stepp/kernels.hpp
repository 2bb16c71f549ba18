#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace stepp::kernels {

// Inner-loop primitives shared by the distance and weighting machinery.
// Every SIMD variant is required to be bit-identical to the scalar
// reference: the neighbor-set construction compares distances for exact
// equality, so the selected instruction set must not change any result.
// All variants are built without FP contraction (see CMakeLists.txt).

/// acc[i] += (col[i] - z)^2 for i in [0, n).
using SqDistAccumFn = void (*)(double* acc, const double* col, double z, std::size_t n);

/// w[i] = atomic weight of squared distance s[i] with threshold c:
///   s == 0      -> 1
///   0 < s < c   -> s
///   s >= c      -> min(1, 1/s)
using AtomicWeightFn = void (*)(double* w, const double* s, double c, std::size_t n);

/// Minimum of x[0..n); requires n >= 1 and no NaNs.
using MinValueFn = double (*)(const double* x, std::size_t n);

struct Kernels {
  SqDistAccumFn sq_dist_accum;
  AtomicWeightFn atomic_weight;
  MinValueFn min_value;
  const char* name;
};

/// Scalar reference implementation.
const Kernels& scalar();

/// Variant selected for this host, resolved once. Honors the
/// STEPP_KERNELS environment variable ("scalar", "avx2", "neon").
const Kernels& active();

/// All variants compiled in and supported by this CPU (scalar first).
std::vector<const Kernels*> available();

/// Named variant, or nullptr if not compiled / not supported.
const Kernels* variant(std::string_view name);

}  // namespace stepp::kernels
