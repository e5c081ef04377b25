#include <cmath>

#include "oscopt/angles.hpp"
#include "oscopt/kernels.hpp"

namespace oscopt::kernels {

namespace {

void coupling_terms_scalar(const double* phases, const std::uint32_t* eu, const std::uint32_t* ev,
                           const double* w, std::size_t m, const CouplingSpec& spec,
                           double* out_sin, double* out_cos) {
  for (std::size_t e = 0; e < m; ++e) {
    const double d = wrap_pi(phases[eu[e]] - phases[ev[e]]);
    const double y = d + bump_sum(d, spec);
    out_sin[e] = w[e] * std::sin(y);
    if (out_cos) out_cos[e] = w[e] * std::cos(y);
  }
}

double injection_scalar(const double* phases, std::size_t n, double order, double* out_force) {
  double cos_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = order * phases[i];
    out_force[i] = std::sin(a);
    cos_sum += std::cos(a);
  }
  return cos_sum;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{coupling_terms_scalar, injection_scalar, "scalar"};
  return k;
}

}  // namespace oscopt::kernels
