#include "landscape_qubo/varprep.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <span>

#include "landscape_qubo/errors.hpp"
#include "landscape_qubo/landscape.hpp"
#include "landscape_qubo/nelder_mead.hpp"
#include "landscape_qubo/parallel.hpp"
#include "landscape_qubo/rng.hpp"

namespace lq {

long ansatz_cnot_count(int layers, int n) {
  return static_cast<long>(layers) * static_cast<long>(n - 1);
}

RealState prepare_ansatz(const AnsatzParams& params, PrepStats* stats) {
  if (params.n < 1 || params.layers < 1) {
    throw invalid_input_error("prepare_ansatz: need n >= 1 and layers >= 1");
  }
  if (params.theta.size() != static_cast<std::size_t>(params.parameter_count())) {
    throw invalid_input_error("prepare_ansatz: theta must have layers*n entries");
  }
  RealState state = plus_state(params.n);  // the initial Hadamard layer on |0...0>
  for (int layer = 0; layer < params.layers; ++layer) {
    for (int q = 0; q < params.n; ++q) {
      apply_ry(state, q, params.theta[static_cast<std::size_t>(layer * params.n + q)]);
    }
    for (int q = 0; q + 1 < params.n; ++q) {
      apply_cnot(state, q, q + 1);
      if (stats) ++stats->cnot_count;
    }
  }
  if (stats) ++stats->state_preparations;
  return state;
}

double cost_fv(const AnsatzParams& params, const PerturbedHamiltonian& h) {
  if (params.n != h.n) throw invalid_input_error("cost_fv: size mismatch");
  RealState state = prepare_ansatz(params);
  double diff = expectation_perturbed(h, state) - overlap_plus(state);
  return diff * diff;
}

std::vector<double> gradient_fv(const AnsatzParams& params, const PerturbedHamiltonian& h,
                                PrepStats* stats) {
  if (params.n != h.n) throw invalid_input_error("gradient_fv: size mismatch");
  const int count = params.parameter_count();
  constexpr double half_pi = std::numbers::pi / 2.0;

  RealState base = prepare_ansatz(params, stats);
  const double expectation = expectation_perturbed(h, base);
  const double overlap = overlap_plus(base);
  if (std::abs(overlap) < kSingularOverlap) {
    throw numeric_error("gradient_fv: |<psi|+>| below 1e-12, shift rule undefined");
  }
  const double prefactor = 2.0 * (expectation - overlap);

  std::vector<double> grad(static_cast<std::size_t>(count));
  AnsatzParams shifted = params;
  for (int i = 0; i < count; ++i) {
    const double original = params.theta[static_cast<std::size_t>(i)];
    shifted.theta[static_cast<std::size_t>(i)] = original + half_pi;
    RealState plus_state_shift = prepare_ansatz(shifted, stats);
    double h_plus = expectation_perturbed(h, plus_state_shift);
    double s_plus = overlap_plus(plus_state_shift);

    shifted.theta[static_cast<std::size_t>(i)] = original - half_pi;
    RealState minus_state_shift = prepare_ansatz(shifted, stats);
    double h_minus = expectation_perturbed(h, minus_state_shift);
    double s_minus = overlap_plus(minus_state_shift);
    shifted.theta[static_cast<std::size_t>(i)] = original;

    // d<H>/dt via the shift rule; d<psi|+>/dt from <M> = <psi|+>^2 for real states.
    double d_expectation = 0.5 * (h_plus - h_minus);
    double d_overlap = 0.25 * (s_plus * s_plus - s_minus * s_minus) / overlap;
    grad[static_cast<std::size_t>(i)] = prefactor * (d_expectation - d_overlap);
  }
  return grad;
}

std::pair<double, double> sampled_qubo_stats(const RealState& state, const QuboProblem& problem,
                                             int shots, std::uint64_t seed) {
  if (shots < 1) throw invalid_input_error("sampled_qubo_stats: shots must be >= 1");
  if (state.n != problem.n) throw invalid_input_error("sampled_qubo_stats: size mismatch");
  auto dist = sampling_distribution(std::span<const double>(state.amps),
                                    DistributionSource::AnsatzState);
  auto samples = sample_bitstrings(dist, shots, seed);
  double mean = 0.0;
  std::vector<double> costs;
  costs.reserve(samples.size());
  for (const auto& b : samples) {
    costs.push_back(qubo_cost(problem, b));
    mean += costs.back();
  }
  mean /= static_cast<double>(shots);
  double var = 0.0;
  for (double c : costs) var += (c - mean) * (c - mean);
  var /= static_cast<double>(shots);  // population std
  return {mean, std::sqrt(var)};
}

namespace {

// Off-interval trace sampling shares one code path for both optimizers.
void maybe_sample_stats(TracePoint& point, const PerturbedHamiltonian& h,
                        const AnsatzParams& params, const OptimizeConfig& config,
                        int restart, int iteration) {
  if (config.sample_interval <= 0 || iteration % config.sample_interval != 0) return;
  RealState state = prepare_ansatz(params);
  auto dist = sampling_distribution(std::span<const double>(state.amps),
                                    DistributionSource::AnsatzState);
  auto samples =
      sample_bitstrings(dist, config.sample_count,
                        mix_seed(config.seed, 0xc0de, static_cast<std::uint64_t>(restart),
                                 static_cast<std::uint64_t>(iteration)));
  double mean = 0.0;
  std::vector<double> costs;
  for (const auto& b : samples) {
    costs.push_back(h.ising_diag[b.index]);
    mean += costs.back();
  }
  mean /= static_cast<double>(costs.size());
  double var = 0.0;
  for (double c : costs) var += (c - mean) * (c - mean);
  var /= static_cast<double>(costs.size());
  point.has_stats = true;
  point.mean_cq = mean;
  point.std_cq = std::sqrt(var);
}

RestartTrace run_restart_nelder_mead(const PerturbedHamiltonian& h,
                                     const OptimizeConfig& config, int restart,
                                     std::vector<double> theta0) {
  RestartTrace trace;
  trace.restart = restart;
  AnsatzParams probe{h.n, config.layers, theta0};

  NelderMeadOptions options;
  options.max_evals = config.max_iters;
  options.f_tol = 0.0;  // run the full budget, matching a fixed-iteration protocol
  options.initial_step = 0.5;
  auto objective = [&](const std::vector<double>& theta) {
    probe.theta = theta;
    return cost_fv(probe, h);
  };
  auto observer = [&](int eval_index, const std::vector<double>& theta, double fv) {
    TracePoint point;
    point.iteration = eval_index;
    point.fv = fv;
    probe.theta = theta;
    maybe_sample_stats(point, h, probe, config, restart, eval_index);
    trace.points.push_back(point);
  };
  NelderMeadResult result = nelder_mead(objective, std::move(theta0), options, observer);
  trace.final_theta = result.best_x;
  trace.final_fv = result.best_f;
  return trace;
}

RestartTrace run_restart_gradient(const PerturbedHamiltonian& h, const OptimizeConfig& config,
                                  int restart, std::vector<double> theta0) {
  RestartTrace trace;
  trace.restart = restart;
  AnsatzParams params{h.n, config.layers, std::move(theta0)};
  double fv = cost_fv(params, h);
  trace.final_theta = params.theta;
  trace.final_fv = fv;
  constexpr double armijo_c = 1e-4;
  for (int iter = 1; iter <= config.max_iters; ++iter) {
    std::vector<double> grad;
    try {
      grad = gradient_fv(params, h);
    } catch (const numeric_error&) {
      break;  // singular overlap: record what we have, never throw from optimize
    }
    double grad_sq = 0.0;
    for (double g : grad) grad_sq += g * g;
    if (grad_sq == 0.0) break;

    double step = 1.0;
    AnsatzParams candidate = params;
    double f_candidate = fv;
    bool accepted = false;
    while (step > 1e-12) {
      for (std::size_t i = 0; i < grad.size(); ++i) {
        candidate.theta[i] = params.theta[i] - step * grad[i];
      }
      f_candidate = cost_fv(candidate, h);
      if (f_candidate <= fv - armijo_c * step * grad_sq) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    params = candidate;
    fv = f_candidate;

    TracePoint point;
    point.iteration = iter;
    point.fv = fv;
    maybe_sample_stats(point, h, params, config, restart, iter);
    trace.points.push_back(point);
    if (fv < trace.final_fv) {
      trace.final_fv = fv;
      trace.final_theta = params.theta;
    }
  }
  return trace;
}

}  // namespace

OptimizationTrace optimize(const PerturbedHamiltonian& h, const OptimizeConfig& config) {
  if (config.restarts < 1) throw invalid_input_error("optimize: restarts must be >= 1");
  if (config.layers < 1) throw invalid_input_error("optimize: layers must be >= 1");
  const int param_count = config.layers * h.n;

  OptimizationTrace trace;
  trace.restarts.resize(static_cast<std::size_t>(config.restarts));
  parallel_for(static_cast<std::size_t>(config.restarts), config.threads, [&](std::size_t r) {
    Rng rng(mix_seed(config.seed, 0x7e7a, r));
    std::vector<double> theta0(static_cast<std::size_t>(param_count));
    for (double& t : theta0) t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    trace.restarts[r] =
        config.method == OptimizeMethod::NelderMead
            ? run_restart_nelder_mead(h, config, static_cast<int>(r), std::move(theta0))
            : run_restart_gradient(h, config, static_cast<int>(r), std::move(theta0));
  });

  trace.best_fv = std::numeric_limits<double>::infinity();
  for (const auto& restart : trace.restarts) {
    if (restart.final_fv < trace.best_fv) {
      trace.best_fv = restart.final_fv;
      trace.best_params = AnsatzParams{h.n, config.layers, restart.final_theta};
    }
  }
  return trace;
}

}  // namespace lq
