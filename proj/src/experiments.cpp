#include "landscape_qubo/experiments.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "landscape_qubo/errors.hpp"
#include "landscape_qubo/parallel.hpp"
#include "landscape_qubo/rng.hpp"
#include "landscape_qubo/statevector.hpp"

namespace lq {

namespace {

bool has_metric(const SweepConfig& config, SweepMetric metric) {
  return std::find(config.metrics.begin(), config.metrics.end(), metric) !=
         config.metrics.end();
}

// Degeneracy-summed probability of each of the 3 lowest distinct energy
// levels; level membership uses the spectrum's tie tolerance.
std::array<double, 3> level_probabilities(const std::vector<double>& ising_diag,
                                          const std::vector<double>& probs,
                                          const std::vector<std::pair<double, int>>& spectrum) {
  std::array<double, 3> out{std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN()};
  const std::size_t levels = std::min<std::size_t>(3, spectrum.size());
  for (std::size_t level = 0; level < levels; ++level) out[level] = 0.0;
  for (std::size_t j = 0; j < ising_diag.size(); ++j) {
    for (std::size_t level = 0; level < levels; ++level) {
      if (std::abs(ising_diag[j] - spectrum[level].first) <= kTieTolerance) {
        out[level] += probs[j];
        break;
      }
    }
  }
  return out;
}

}  // namespace

SweepGrid run_sweep(const QuboProblem& problem, const SweepConfig& config) {
  if (config.gamma_values.empty() || config.lambda_values.empty()) {
    throw invalid_input_error("run_sweep: gamma and lambda grids must be nonempty");
  }
  for (double g : config.gamma_values) {
    if (!std::isfinite(g)) throw invalid_input_error("run_sweep: non-finite gamma");
  }
  for (double l : config.lambda_values) {
    if (!std::isfinite(l) || l <= 0.0) {
      throw invalid_input_error("run_sweep: lambda values must be finite and > 0");
    }
  }

  const bool want_levels = has_metric(config, SweepMetric::PByEnergyLevel);
  SolutionRecord solution = brute_force_solve(problem, want_levels);
  const std::vector<double> diag = ising_diagonal(problem);
  const bool inverse_check = problem.n <= 12;

  SweepGrid grid;
  grid.n_gamma = static_cast<int>(config.gamma_values.size());
  grid.n_lambda = static_cast<int>(config.lambda_values.size());
  grid.cells.resize(config.gamma_values.size() * config.lambda_values.size());

  parallel_for(grid.cells.size(), config.threads, [&](std::size_t c) {
    SweepCell& cell = grid.cells[c];
    cell.gamma = config.gamma_values[c / config.lambda_values.size()];
    cell.lambda = config.lambda_values[c % config.lambda_values.size()];

    PerturbedHamiltonian h;
    h.n = problem.n;
    h.ising_diag = diag;
    h.gamma = cell.gamma;
    h.lambda = cell.lambda;

    ValidityReport validity = validity_check(h, inverse_check);
    cell.valid = validity.valid;
    if (!cell.valid) return;

    LandscapeVector lv = solve_landscape(h, config.tol);
    cell.cg_converged = lv.converged;
    if (!lv.converged) return;

    auto dist = sampling_distribution(std::span<const double>(lv.u),
                                      DistributionSource::ExactLandscape);
    if (has_metric(config, SweepMetric::PXstar)) {
      double p = 0.0;
      for (const auto& x : solution.optimizers) p += dist.probs[x.index];
      cell.p_xstar = p;
    }
    if (has_metric(config, SweepMetric::ArgmaxHamming)) {
      const std::uint32_t peak = argmax_index(dist);
      int best = problem.n;
      for (const auto& x : solution.optimizers) {
        best = std::min(best, std::popcount(peak ^ x.index));
      }
      cell.argmax_hd = best;
    }
    if (want_levels) {
      cell.p_levels = level_probabilities(diag, dist.probs, *solution.spectrum);
    }
  });
  return grid;
}

HammingComparison run_hamming_comparison(const QuboProblem& problem, double gamma,
                                         double lambda, int threads) {
  if (problem.n > 12) throw capacity_error("run_hamming_comparison: n > 12");
  SolutionRecord solution = brute_force_solve(problem);
  HammingComparison cmp;
  cmp.x_star = solution.optimizers.front();

  PerturbedHamiltonian h = build_hamiltonian(problem, gamma, lambda);
  LandscapeVector lv = solve_landscape(h);
  cmp.from_u = hamming_profile(sampling_distribution(std::span<const double>(lv.u),
                                                     DistributionSource::ExactLandscape),
                               cmp.x_star);

  Eigen::MatrixXd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  Eigen::VectorXd ground = solver.eigenvectors().col(0);
  std::vector<double> ground_vec(ground.data(), ground.data() + ground.size());
  cmp.from_ground_state =
      hamming_profile(sampling_distribution(std::span<const double>(ground_vec),
                                            DistributionSource::GroundStateOfH),
                      cmp.x_star);

  GridSearchOptions options;
  options.threads = threads;
  GridSearchResult qaoa = grid_search(h.ising_diag, options);
  cmp.qaoa_gamma = qaoa.refined_gamma;
  cmp.qaoa_beta = qaoa.refined_beta;
  QaoaParams params;
  params.gamma = {qaoa.refined_gamma};
  params.beta = {qaoa.refined_beta};
  ComplexState state = qaoa_state(params, h.ising_diag);
  cmp.from_qaoa =
      hamming_profile(sampling_distribution(std::span<const std::complex<double>>(state.amps),
                                            DistributionSource::QaoaState),
                      cmp.x_star);
  return cmp;
}

std::vector<ScalingRecord> run_scaling_study(ProblemKind kind, const ScalingOptions& options) {
  if (kind == ProblemKind::Custom) {
    throw invalid_input_error("run_scaling_study: kind must be random or maxcut");
  }
  if (options.n_values.empty() || options.instances < 1) {
    throw invalid_input_error("run_scaling_study: need n values and instances >= 1");
  }
  const double lambda_ratio =
      (kind == ProblemKind::MaxCut3Regular && !options.use_generic_gamma) ? 0.03 : 0.07;

  std::vector<ScalingRecord> records;
  for (int n : options.n_values) {
    if (n > kDenseMaxN) throw capacity_error("run_scaling_study: n > 14");
    ScalingRecord record;
    record.kind = kind;
    record.n = n;
    record.uniform_baseline = std::pow(2.0, -n);

    struct InstanceResult {
      bool ok = false;
      std::array<double, 3> p{};
      double gamma = 0.0;
    };
    std::vector<InstanceResult> results(static_cast<std::size_t>(options.instances));
    parallel_for(results.size(), options.threads, [&](std::size_t i) {
      std::uint64_t instance_seed =
          mix_seed(options.seed, 0x5ca1e, static_cast<std::uint64_t>(n), i);
      QuboProblem problem = kind == ProblemKind::MaxCut3Regular
                                ? generate_maxcut_3regular(n, instance_seed)
                                : generate_random_qubo(n, instance_seed);
      double gamma = kind == ProblemKind::MaxCut3Regular && !options.use_generic_gamma
                         ? gamma_heuristic_maxcut(n)
                         : gamma_heuristic_generic(problem);
      PerturbedHamiltonian h = build_hamiltonian(problem, gamma, lambda_ratio * gamma);
      LandscapeVector lv = solve_landscape(h);
      if (!lv.converged) return;
      SolutionRecord solution = brute_force_solve(problem, true);
      auto dist = sampling_distribution(std::span<const double>(lv.u),
                                        DistributionSource::ExactLandscape);
      results[i].ok = true;
      results[i].p = level_probabilities(h.ising_diag, dist.probs, *solution.spectrum);
      results[i].gamma = gamma;
    });

    record.mean_p_level = {0.0, 0.0, 0.0};
    double gamma_sum = 0.0;
    for (const auto& r : results) {
      if (!r.ok) {
        ++record.failures;
        continue;
      }
      ++record.instances;
      for (std::size_t level = 0; level < 3; ++level) {
        if (!std::isnan(r.p[level])) record.mean_p_level[level] += r.p[level];
      }
      gamma_sum += r.gamma;
    }
    if (record.instances > 0) {
      for (auto& p : record.mean_p_level) p /= record.instances;
      record.gamma_used = gamma_sum / record.instances;
    }
    records.push_back(std::move(record));
  }
  return records;
}

FockGraph build_fock_graph(const QuboProblem& problem, double gamma, double lambda) {
  if (problem.n > 10) throw capacity_error("build_fock_graph: n > 10");
  PerturbedHamiltonian h = build_hamiltonian(problem, gamma, lambda);
  LandscapeVector lv = solve_landscape(h);

  FockGraph graph;
  graph.n = problem.n;
  const std::size_t dim = h.dim();
  double e_min = h.ising_diag[0], e_max = h.ising_diag[0];
  double u_inf = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    e_min = std::min(e_min, h.ising_diag[j]);
    e_max = std::max(e_max, h.ising_diag[j]);
    u_inf = std::max(u_inf, std::abs(lv.u[j]));
  }
  const double span = e_max - e_min;
  for (std::size_t j = 0; j < dim; ++j) {
    FockGraph::Node node;
    node.id = static_cast<std::uint32_t>(j);
    node.bitstring = Bitstring{node.id, problem.n}.to_string();
    node.energy = span > 0.0 ? (h.ising_diag[j] - e_min) / span : 0.0;
    node.amplitude = u_inf > 0.0 ? std::abs(lv.u[j]) / u_inf : 0.0;
    graph.nodes.push_back(std::move(node));
  }
  for (std::size_t j = 0; j < dim; ++j) {
    for (int k = 0; k < problem.n; ++k) {
      const std::size_t neighbor = j ^ (std::size_t{1} << k);
      if (j < neighbor) {
        graph.edges.emplace_back(static_cast<std::uint32_t>(j),
                                 static_cast<std::uint32_t>(neighbor));
      }
    }
  }
  return graph;
}

ComparisonReport run_comparison(const QuboProblem& problem, double gamma, double lambda,
                                const OptimizeConfig& var_config) {
  ComparisonReport report;
  report.gamma = gamma;
  report.lambda = lambda;

  PerturbedHamiltonian h = build_hamiltonian(problem, gamma, lambda);
  double mean_diag = 0.0;
  for (double d : h.ising_diag) mean_diag += d;
  report.uniform_expectation = mean_diag / static_cast<double>(h.dim());

  LandscapeVector lv = solve_landscape(h);
  report.landscape_converged = lv.converged;
  auto u_dist = sampling_distribution(std::span<const double>(lv.u),
                                      DistributionSource::ExactLandscape);
  report.exact_u_expectation = expectation_ising(h.ising_diag, u_dist);

  report.trace = optimize(h, var_config);
  report.best_fv = report.trace.best_fv;
  RealState ansatz = prepare_ansatz(report.trace.best_params);
  report.ansatz_expectation = expectation_ising(h.ising_diag, ansatz);
  double dot = 0.0, u_norm_sq = 0.0, psi_norm_sq = 0.0;
  for (std::size_t j = 0; j < lv.u.size(); ++j) {
    dot += ansatz.amps[j] * lv.u[j];
    u_norm_sq += lv.u[j] * lv.u[j];
    psi_norm_sq += ansatz.amps[j] * ansatz.amps[j];
  }
  report.ansatz_u_fidelity = std::abs(dot) / std::sqrt(u_norm_sq * psi_norm_sq);

  GridSearchOptions qaoa_options;
  qaoa_options.threads = var_config.threads;
  GridSearchResult qaoa = grid_search(h.ising_diag, qaoa_options);
  report.qaoa_expectation = qaoa.refined_value;
  report.qaoa_gamma = qaoa.refined_gamma;
  report.qaoa_beta = qaoa.refined_beta;
  return report;
}

}  // namespace lq
