#include "oscopt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "oscopt/angles.hpp"

namespace oscopt {

void Schedule::validate() const {
  if (!(horizon > 0.0)) throw ValidationError("schedule horizon must be positive");
  if (c_sync < 0.0) throw ValidationError("c_sync must be non-negative");
}

std::vector<std::string> Schedule::warnings() const {
  std::vector<std::string> out;
  if (c_sync > 0.0) {
    const double peak = std::max(c1_start, a);
    if (peak / c_sync > stability_ceiling) {
      out.push_back("C1/Csync reaches " + std::to_string(peak / c_sync) +
                    ", above the stability ceiling " + std::to_string(stability_ceiling) +
                    "; phase clusters may destabilize");
    }
  }
  return out;
}

Simulator::Simulator(const Graph& g, const PhaseInteraction& fi, Schedule sched, ProblemKind kind)
    : graph_(&g),
      sched_(sched),
      kind_(kind),
      order_(fi.grid_order()),
      n_(g.node_count()),
      centers_(fi.centers()),
      amps_(fi.amplitudes()),
      inv_two_sigma_sq_(fi.inv_two_sigma_sq()),
      total_weight_(g.total_weight()) {
  sched_.validate();
  if (kind_ == ProblemKind::GraphPartition && order_ != 2) {
    throw ValidationError("graph partitioning uses second-harmonic injection (order 2)");
  }
  const auto& edges = g.edges();
  eu_.reserve(edges.size());
  ev_.reserve(edges.size());
  w_.reserve(edges.size());
  for (const auto& e : edges) {
    eu_.push_back(e.u);
    ev_.push_back(e.v);
    w_.push_back(e.w);
  }
  weighted_degree_.assign(n_, 0.0);
  for (const auto& e : edges) {
    weighted_degree_[e.u] += e.w;
    weighted_degree_[e.v] += e.w;
  }
  term_sin_.resize(edges.size());
  term_cos_.resize(edges.size());
  force_.resize(n_);
}

Simulator::PassOutput Simulator::velocity_into(const std::vector<double>& phases,
                                               const Constants& at, std::vector<double>& out_v,
                                               bool want_cos) const {
  if (phases.size() != n_) throw ValidationError("phase vector length does not match graph");
  const auto& k = kernels::active_kernels();
  const kernels::CouplingSpec spec{centers_.data(), amps_.data(), centers_.size(),
                                   inv_two_sigma_sq_};
  const std::size_t m = eu_.size();
  k.coupling_terms(phases.data(), eu_.data(), ev_.data(), w_.data(), m, spec, term_sin_.data(),
                   want_cos ? term_cos_.data() : nullptr);

  out_v.assign(n_, 0.0);
  for (std::size_t e = 0; e < m; ++e) {
    out_v[eu_[e]] += term_sin_[e];
    out_v[ev_[e]] -= term_sin_[e];
  }

  PassOutput pass{0.0, 0.0, 0.0};
  if (want_cos) {
    double cs = 0.0;
    for (std::size_t e = 0; e < m; ++e) cs += term_cos_[e];
    pass.edge_cos_sum = cs;
  }
  pass.inj_cos_sum = k.injection(phases.data(), n_, static_cast<double>(order_), force_.data());

  const double jsign = coupling_sign(kind_);
  if (kind_ == ProblemKind::GraphPartition) {
    double mean = 0.0;
    for (double p : phases) mean += p;
    mean /= static_cast<double>(n_);
    pass.mean_phase = mean;
    const double balance = 2.0 * at.c1 * std::sin(mean - kPi / 2.0);
    for (std::uint32_t i = 0; i < n_; ++i) {
      out_v[i] = -jsign * (at.c2 * out_v[i] + balance * weighted_degree_[i]) -
                 at.c_sync * force_[i];
    }
  } else {
    for (std::uint32_t i = 0; i < n_; ++i) {
      out_v[i] = -jsign * at.c1 * out_v[i] - at.c_sync * force_[i];
    }
  }
  return pass;
}

double Simulator::energy_from(const PassOutput& pass, const Constants& at) const {
  const double jsign = coupling_sign(kind_);
  if (kind_ == ProblemKind::GraphPartition) {
    // Eq-(27) shape: ordered pairs double every edge term; the balance
    // cosine carries 2N*C1 and multiplies the full coupling sum.
    const double balance = 4.0 * n_ * at.c1 * total_weight_ * std::cos(pass.mean_phase - kPi / 2.0);
    return -jsign * (balance + 2.0 * at.c2 * pass.edge_cos_sum) - at.c_sync * pass.inj_cos_sum;
  }
  return -jsign * order_ * at.c1 * pass.edge_cos_sum - at.c_sync * pass.inj_cos_sum;
}

std::vector<double> Simulator::velocity(const OscillatorState& state, const Constants& at) const {
  std::vector<double> v;
  velocity_into(state.phases, at, v, /*want_cos=*/false);
  return v;
}

std::vector<double> Simulator::velocity(const OscillatorState& state) const {
  return velocity(state, constants_at(state.t));
}

double Simulator::energy(const OscillatorState& state, const Constants& at) const {
  std::vector<double> scratch;
  const PassOutput pass = velocity_into(state.phases, at, scratch, /*want_cos=*/true);
  return energy_from(pass, at);
}

double Simulator::energy(const OscillatorState& state) const {
  return energy(state, constants_at(state.t));
}

void Simulator::step(OscillatorState& state, double dt, Integrator method,
                     std::uint64_t step_index) const {
  if (!(dt > 0.0)) throw ValidationError("dt must be positive");
  const Constants at = constants_at(state.t);  // frozen for all stages
  auto& phases = state.phases;

  if (method == Integrator::Euler) {
    velocity_into(phases, at, stage_[0], false);
    for (std::uint32_t i = 0; i < n_; ++i) phases[i] += dt * stage_[0][i];
  } else {
    probe_ = phases;
    velocity_into(phases, at, stage_[0], false);
    for (std::uint32_t i = 0; i < n_; ++i) probe_[i] = phases[i] + 0.5 * dt * stage_[0][i];
    velocity_into(probe_, at, stage_[1], false);
    for (std::uint32_t i = 0; i < n_; ++i) probe_[i] = phases[i] + 0.5 * dt * stage_[1][i];
    velocity_into(probe_, at, stage_[2], false);
    for (std::uint32_t i = 0; i < n_; ++i) probe_[i] = phases[i] + dt * stage_[2][i];
    velocity_into(probe_, at, stage_[3], false);
    for (std::uint32_t i = 0; i < n_; ++i) {
      phases[i] +=
          dt / 6.0 * (stage_[0][i] + 2.0 * stage_[1][i] + 2.0 * stage_[2][i] + stage_[3][i]);
    }
  }

  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!std::isfinite(phases[i])) {
      throw NumericError("non-finite phase at oscillator " + std::to_string(i) + ", step " +
                             std::to_string(step_index) + " (dt too large?)",
                         step_index);
    }
    phases[i] = wrap_2pi(phases[i]);
  }
  state.t += dt;
}

RunResult Simulator::run(const RunConfig& cfg) const {
  if (!(cfg.dt > 0.0)) throw ValidationError("dt must be positive");
  if (!(cfg.record_interval > 0.0)) throw ValidationError("record interval must be positive");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, kTwoPi);
  std::normal_distribution<double> gauss(0.0, 1.0);

  OscillatorState state;
  state.phases.resize(n_);
  for (auto& p : state.phases) p = unif(rng);
  state.t = 0.0;

  const std::uint64_t n_steps =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(sched_.horizon / cfg.dt)));
  const std::uint64_t rec_every = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::llround(cfg.record_interval / cfg.dt)));

  RunResult result;
  result.seed = cfg.seed;
  result.step_count = n_steps;

  auto record = [&](double t, double e) {
    result.energy_trace.emplace_back(t, e);
    if (cfg.record_phases) result.phase_trace.emplace_back(t, state.phases);
  };

  const double noise_scale = cfg.noise_amplitude * std::sqrt(cfg.dt);
  for (std::uint64_t k = 0; k < n_steps; ++k) {
    const double t_k = static_cast<double>(k) * cfg.dt;
    state.t = t_k;
    if (k % rec_every == 0) {
      record(t_k, energy(state, constants_at(t_k)));
    }
    step(state, cfg.dt, cfg.method, k);
    if (cfg.noise_amplitude > 0.0) {
      const double decay = 1.0 - t_k / sched_.horizon;
      for (auto& p : state.phases) p = wrap_2pi(p + noise_scale * decay * gauss(rng));
    }
  }
  state.t = sched_.horizon;
  record(state.t, energy(state, constants_at(state.t)));

  result.final_state = state;
  return result;
}

std::vector<double> phase_velocity(const OscillatorState& state, const Graph& g,
                                   const PhaseInteraction& fi, const Constants& at,
                                   ProblemKind kind) {
  Simulator sim(g, fi, Schedule{}, kind);
  return sim.velocity(state, at);
}

OscillatorState step(const OscillatorState& state, const Graph& g, const PhaseInteraction& fi,
                     const Schedule& sched, double dt, Integrator method, ProblemKind kind) {
  Simulator sim(g, fi, sched, kind);
  OscillatorState next = state;
  sim.step(next, dt, method);
  return next;
}

RunResult run(const Graph& g, const PhaseInteraction& fi, const Schedule& sched,
              const RunConfig& cfg, ProblemKind kind) {
  Simulator sim(g, fi, sched, kind);
  return sim.run(cfg);
}

}  // namespace oscopt
