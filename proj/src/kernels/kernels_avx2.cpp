// AVX2 + FMA variants of the inner loops, 4 doubles per lane. Compiled only
// into this translation unit with -mavx2 -mfma; selection happens at runtime
// in kernels_dispatch.cpp. Vector sin/cos/exp come from glibc's libmvec.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "oscopt/angles.hpp"
#include "oscopt/kernels.hpp"

extern "C" {
__m256d _ZGVdN4v_sin(__m256d);
__m256d _ZGVdN4v_cos(__m256d);
__m256d _ZGVdN4v_exp(__m256d);
}

namespace oscopt::kernels {

namespace {

inline __m256d wrap_pi_pd(__m256d x) {
  const __m256d two_pi = _mm256_set1_pd(kTwoPi);
  const __m256d inv_two_pi = _mm256_set1_pd(1.0 / kTwoPi);
  const __m256d pi = _mm256_set1_pd(kPi);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, inv_two_pi));
  __m256d w = _mm256_fnmadd_pd(two_pi, q, x);  // x - 2pi*floor(x/2pi), in [0, 2pi)
  const __m256d over = _mm256_cmp_pd(w, pi, _CMP_GT_OQ);
  return _mm256_sub_pd(w, _mm256_and_pd(over, two_pi));
}

inline __m256d bump_sum_pd(__m256d x, const CouplingSpec& spec) {
  const __m256d neg_g = _mm256_set1_pd(-spec.inv_two_sigma_sq);
  __m256d f = _mm256_setzero_pd();
  for (std::size_t i = 0; i < spec.count; ++i) {
    const __m256d c = _mm256_set1_pd(spec.centers[i]);
    const __m256d a = _mm256_set1_pd(spec.amps[i]);
    const __m256d dp = _mm256_sub_pd(x, c);
    const __m256d dm = _mm256_add_pd(x, c);
    const __m256d gp = _ZGVdN4v_exp(_mm256_mul_pd(_mm256_mul_pd(dp, dp), neg_g));
    const __m256d gm = _ZGVdN4v_exp(_mm256_mul_pd(_mm256_mul_pd(dm, dm), neg_g));
    f = _mm256_fmadd_pd(a, _mm256_sub_pd(gp, gm), f);
  }
  return f;
}

void coupling_terms_avx2(const double* phases, const std::uint32_t* eu, const std::uint32_t* ev,
                         const double* w, std::size_t m, const CouplingSpec& spec, double* out_sin,
                         double* out_cos) {
  std::size_t e = 0;
  for (; e + 4 <= m; e += 4) {
    const __m128i iu = _mm_loadu_si128(reinterpret_cast<const __m128i*>(eu + e));
    const __m128i iv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ev + e));
    const __m256d pu = _mm256_i32gather_pd(phases, iu, 8);
    const __m256d pv = _mm256_i32gather_pd(phases, iv, 8);
    const __m256d d = wrap_pi_pd(_mm256_sub_pd(pu, pv));
    const __m256d y = _mm256_add_pd(d, bump_sum_pd(d, spec));
    const __m256d we = _mm256_loadu_pd(w + e);
    _mm256_storeu_pd(out_sin + e, _mm256_mul_pd(we, _ZGVdN4v_sin(y)));
    if (out_cos) _mm256_storeu_pd(out_cos + e, _mm256_mul_pd(we, _ZGVdN4v_cos(y)));
  }
  for (; e < m; ++e) {  // tail
    const double d = wrap_pi(phases[eu[e]] - phases[ev[e]]);
    const double y = d + bump_sum(d, spec);
    out_sin[e] = w[e] * std::sin(y);
    if (out_cos) out_cos[e] = w[e] * std::cos(y);
  }
}

double injection_avx2(const double* phases, std::size_t n, double order, double* out_force) {
  const __m256d ord = _mm256_set1_pd(order);
  __m256d cos_acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_mul_pd(ord, _mm256_loadu_pd(phases + i));
    _mm256_storeu_pd(out_force + i, _ZGVdN4v_sin(a));
    cos_acc = _mm256_add_pd(cos_acc, _ZGVdN4v_cos(a));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, cos_acc);
  double cos_sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    const double a = order * phases[i];
    out_force[i] = std::sin(a);
    cos_sum += std::cos(a);
  }
  return cos_sum;
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{coupling_terms_avx2, injection_avx2, "avx2"};
  return k;
}

}  // namespace oscopt::kernels

#endif  // x86_64
