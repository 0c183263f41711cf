#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "landscape_qubo/landscape.hpp"
#include "landscape_qubo/qaoa.hpp"
#include "landscape_qubo/qubo.hpp"
#include "landscape_qubo/varprep.hpp"

namespace lq {

enum class SweepMetric { PXstar, ArgmaxHamming, Validity, PByEnergyLevel };

struct SweepConfig {
  std::vector<double> gamma_values;
  std::vector<double> lambda_values;
  double tol = 1e-10;
  std::vector<SweepMetric> metrics = {SweepMetric::PXstar, SweepMetric::ArgmaxHamming,
                                      SweepMetric::Validity};
  int threads = 1;
};

// One (gamma, lambda) cell. Grey-region semantics of the hyperparameter maps:
// a cell with valid == false or cg_converged == false carries no metrics.
struct SweepCell {
  double gamma = 0.0;
  double lambda = 0.0;
  bool valid = false;
  bool cg_converged = false;
  std::optional<double> p_xstar;       // degeneracy-summed over all optimizers
  std::optional<int> argmax_hd;        // min over optimizers of d(argmax, x*)
  std::optional<std::array<double, 3>> p_levels;  // PByEnergyLevel only
};

struct SweepGrid {
  std::vector<SweepCell> cells;  // gamma outer, lambda inner
  int n_gamma = 0;
  int n_lambda = 0;
};

SweepGrid run_sweep(const QuboProblem& problem, const SweepConfig& config);

struct HammingComparison {
  Bitstring x_star;
  HammingProfile from_u;
  HammingProfile from_ground_state;
  HammingProfile from_qaoa;
  double qaoa_gamma = 0.0, qaoa_beta = 0.0;
};

// Profiles from |u>, from the dense ground state of H, and from the refined
// depth-1 QAOA state. n <= 12.
HammingComparison run_hamming_comparison(const QuboProblem& problem, double gamma,
                                         double lambda, int threads = 1);

struct ScalingRecord {
  ProblemKind kind = ProblemKind::RandomDense;
  int n = 0;
  int instances = 0;  // instances that contributed
  int failures = 0;   // generated but excluded (invalid / non-converged)
  // Mean degeneracy-summed probabilities of sampling the 3 lowest distinct
  // energy levels from |u>; missing levels are NaN.
  std::array<double, 3> mean_p_level{};
  double uniform_baseline = 0.0;  // 2^-n
  double gamma_used = 0.0;        // mean heuristic gamma over contributing instances
};

struct ScalingOptions {
  std::vector<int> n_values;
  int instances = 100;
  std::uint64_t seed = 0;
  int threads = 1;
  // Use gamma = 1.1*sum|A| with lambda = 0.07*gamma regardless of kind — the
  // unstructured protocol, for comparing against the MaxCut-aware heuristic
  // on the same instances.
  bool use_generic_gamma = false;
};

// Per instance: generate, pick gamma by the kind heuristic, lambda = 0.07*gamma
// (random) or 0.03*gamma (MaxCut), solve the landscape, record level
// probabilities against the brute-force spectrum.
std::vector<ScalingRecord> run_scaling_study(ProblemKind kind, const ScalingOptions& options);

struct FockGraph {
  int n = 0;
  struct Node {
    std::uint32_t id;
    std::string bitstring;
    double energy;     // (ising_diag - min) / (max - min)
    double amplitude;  // |u| / ||u||_inf
  };
  std::vector<Node> nodes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // single-bit-flip pairs
};

FockGraph build_fock_graph(const QuboProblem& problem, double gamma, double lambda);

struct ComparisonReport {
  double gamma = 0.0, lambda = 0.0;
  double uniform_expectation = 0.0;
  double exact_u_expectation = 0.0;
  double ansatz_expectation = 0.0;
  double qaoa_expectation = 0.0;
  double qaoa_gamma = 0.0, qaoa_beta = 0.0;
  double best_fv = 0.0;
  double ansatz_u_fidelity = 0.0;  // |<psi|u>| / ||u||
  bool landscape_converged = false;
  OptimizationTrace trace;
};

ComparisonReport run_comparison(const QuboProblem& problem, double gamma, double lambda,
                                const OptimizeConfig& var_config);

}  // namespace lq
