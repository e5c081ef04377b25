#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace oscopt::kernels {

/// Flattened coupling-function parameters for the inner loops: canonical
/// positive-side Gaussian bumps (mirrors implied).
struct CouplingSpec {
  const double* centers = nullptr;
  const double* amps = nullptr;
  std::size_t count = 0;
  double inv_two_sigma_sq = 0.0;
};

/// For every edge e = (eu[e], ev[e], w[e]) compute
///   out_sin[e] = w[e] * sin(d + f(d)),  out_cos[e] = w[e] * cos(d + f(d)),
/// where d = wrap(phases[eu[e]] - phases[ev[e]]) in (-pi, pi] and f is the
/// bump sum described by spec. out_cos may be null when only the sine terms
/// are needed.
using CouplingTermsFn = void (*)(const double* phases, const std::uint32_t* eu,
                                 const std::uint32_t* ev, const double* w, std::size_t m,
                                 const CouplingSpec& spec, double* out_sin, double* out_cos);

/// out_force[i] = sin(order * phases[i]); returns sum_i cos(order * phases[i]).
using InjectionFn = double (*)(const double* phases, std::size_t n, double order,
                               double* out_force);

struct Kernels {
  CouplingTermsFn coupling_terms;
  InjectionFn injection;
  const char* name;
};

const Kernels& scalar_kernels();

bool avx2_available();
#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();
#endif

/// Best supported implementation; OSCOPT_KERNEL=scalar|avx2 overrides.
const Kernels& active_kernels();

/// Scalar reference for a single coupling-offset evaluation on a wrapped
/// argument x in (-pi, pi]. Shared by PhaseInteraction::eval and the scalar
/// kernel so there is exactly one definition of f.
inline double bump_sum(double x, const CouplingSpec& spec) {
  double f = 0.0;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double dp = x - spec.centers[i];
    const double dm = x + spec.centers[i];
    f += spec.amps[i] * (std::exp(-dp * dp * spec.inv_two_sigma_sq) -
                         std::exp(-dm * dm * spec.inv_two_sigma_sq));
  }
  return f;
}

}  // namespace oscopt::kernels
