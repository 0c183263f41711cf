#include "landscape_qubo/qaoa.hpp"

#include <cmath>
#include <limits>

#include "landscape_qubo/errors.hpp"
#include "landscape_qubo/nelder_mead.hpp"
#include "landscape_qubo/parallel.hpp"

namespace lq {

namespace {

int infer_n(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw invalid_input_error("ising_diag length must be a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) != dim) ++n;
  return n;
}

void apply_phase_layer(ComplexState& state, std::span<const double> ising_diag, double gamma) {
  for (std::size_t j = 0; j < state.amps.size(); ++j) {
    double angle = -gamma * ising_diag[j];
    state.amps[j] *= std::complex<double>(std::cos(angle), std::sin(angle));
  }
}

// e^{-i beta sigma^x} on one wire: (a, b) -> (a cos - i b sin, -i a sin + b cos).
void apply_mixer_layer(ComplexState& state, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::complex<double> is(0.0, -s);
  for (int q = 0; q < state.n; ++q) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t j = 0; j < state.amps.size(); ++j) {
      if (j & mask) continue;
      std::complex<double> a = state.amps[j];
      std::complex<double> b = state.amps[j | mask];
      state.amps[j] = c * a + is * b;
      state.amps[j | mask] = is * a + c * b;
    }
  }
}

}  // namespace

ComplexState qaoa_state(const QaoaParams& params, std::span<const double> ising_diag) {
  if (params.gamma.size() != params.beta.size() || params.gamma.empty()) {
    throw invalid_input_error("qaoa_state: gamma/beta must be non-empty and equal length");
  }
  const int n = infer_n(ising_diag.size());
  ComplexState state;
  state.n = n;
  state.amps.assign(ising_diag.size(), std::pow(2.0, -0.5 * n));
  for (int layer = 0; layer < params.depth(); ++layer) {
    apply_phase_layer(state, ising_diag, params.gamma[static_cast<std::size_t>(layer)]);
    apply_mixer_layer(state, params.beta[static_cast<std::size_t>(layer)]);
  }
  return state;
}

double qaoa_expectation(const QaoaParams& params, std::span<const double> ising_diag) {
  ComplexState state = qaoa_state(params, ising_diag);
  double out = 0.0;
  for (std::size_t j = 0; j < ising_diag.size(); ++j) {
    out += std::norm(state.amps[j]) * ising_diag[j];
  }
  return out;
}

GridSearchResult grid_search(std::span<const double> ising_diag,
                             const GridSearchOptions& options) {
  if (options.resolution < 2) throw invalid_input_error("grid_search: resolution must be >= 2");
  const int n = infer_n(ising_diag.size());
  const int res = options.resolution;

  GridSearchResult result;
  result.resolution = res;
  result.gamma_values.resize(static_cast<std::size_t>(res));
  result.beta_values.resize(static_cast<std::size_t>(res));
  for (int i = 0; i < res; ++i) {
    result.gamma_values[static_cast<std::size_t>(i)] =
        options.gamma_lo + (options.gamma_hi - options.gamma_lo) * i / res;
    result.beta_values[static_cast<std::size_t>(i)] =
        options.beta_lo + (options.beta_hi - options.beta_lo) * i / res;
  }
  result.grid.assign(static_cast<std::size_t>(res) * res, 0.0);

  // Depth-1 factorization: phase the |+> state once per gamma row, then sweep
  // the mixer per beta. Operation-for-operation identical to per-cell
  // qaoa_state calls, which apply the same phase pass before the same mixer.
  parallel_for(static_cast<std::size_t>(res), options.threads, [&](std::size_t gi) {
    ComplexState phased;
    phased.n = n;
    phased.amps.assign(ising_diag.size(), std::pow(2.0, -0.5 * n));
    apply_phase_layer(phased, ising_diag, result.gamma_values[gi]);
    for (int bi = 0; bi < res; ++bi) {
      ComplexState state = phased;
      apply_mixer_layer(state, result.beta_values[static_cast<std::size_t>(bi)]);
      double value = 0.0;
      for (std::size_t j = 0; j < ising_diag.size(); ++j) {
        value += std::norm(state.amps[j]) * ising_diag[j];
      }
      result.grid[gi * static_cast<std::size_t>(res) + static_cast<std::size_t>(bi)] = value;
    }
  });

  std::size_t best_cell = 0;
  for (std::size_t c = 1; c < result.grid.size(); ++c) {
    if (result.grid[c] < result.grid[best_cell]) best_cell = c;
  }
  result.best_gamma = result.gamma_values[best_cell / static_cast<std::size_t>(res)];
  result.best_beta = result.beta_values[best_cell % static_cast<std::size_t>(res)];
  result.best_value = result.grid[best_cell];

  NelderMeadOptions nm;
  nm.max_evals = options.refine_max_evals;
  nm.f_tol = 1e-14;
  nm.initial_step = (options.gamma_hi - options.gamma_lo) / res;
  QaoaParams probe;
  probe.gamma.resize(1);
  probe.beta.resize(1);
  auto objective = [&](const std::vector<double>& x) {
    probe.gamma[0] = x[0];
    probe.beta[0] = x[1];
    return qaoa_expectation(probe, ising_diag);
  };
  double path_best = std::numeric_limits<double>::infinity();
  auto observer = [&](int, const std::vector<double>& x, double f) {
    if (f < path_best) {
      path_best = f;
      result.path.push_back({x[0], x[1], f});
    }
  };
  NelderMeadResult refined =
      nelder_mead(objective, {result.best_gamma, result.best_beta}, nm, observer);
  result.refined_gamma = refined.best_x[0];
  result.refined_beta = refined.best_x[1];
  result.refined_value = refined.best_f;
  return result;
}

long qaoa_cnot_count(const QuboProblem& problem, int p) {
  long edges = 0;
  for (int i = 0; i < problem.n; ++i) {
    for (int j = i + 1; j < problem.n; ++j) {
      if (problem.at(i, j) != 0.0) ++edges;
    }
  }
  return 2 * edges * static_cast<long>(p);
}

}  // namespace lq
