#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landscape_qubo/hamiltonian.hpp"
#include "landscape_qubo/qubo.hpp"
#include "landscape_qubo/statevector.hpp"

namespace lq {

// Hardware-efficient ansatz: Hadamard layer, then `layers` repetitions of an
// R_y rotation on every qubit followed by a linear CNOT chain (control i,
// target i+1). theta is layer-major: theta[layer*n + qubit].
struct AnsatzParams {
  int n = 0;
  int layers = 0;
  std::vector<double> theta;

  int parameter_count() const { return layers * n; }
};

struct PrepStats {
  long cnot_count = 0;
  long state_preparations = 0;
};

RealState prepare_ansatz(const AnsatzParams& params, PrepStats* stats = nullptr);

long ansatz_cnot_count(int layers, int n);

// f_v = (<psi|H|psi> - <psi|+>)^2
double cost_fv(const AnsatzParams& params, const PerturbedHamiltonian& h);

// Parameter-shift gradient of f_v using 2*(layers*n)+1 state preparations:
// d<H>/dt = [<H>(t+pi/2) - <H>(t-pi/2)]/2 and, for real states,
// d<psi|+>/dt = [<M>(t+pi/2) - <M>(t-pi/2)]/(4 <psi|+>) with <M> = <psi|+>^2.
// Throws numeric_error if |<psi|+>| < 1e-12.
std::vector<double> gradient_fv(const AnsatzParams& params, const PerturbedHamiltonian& h,
                                PrepStats* stats = nullptr);

inline constexpr double kSingularOverlap = 1e-12;

enum class OptimizeMethod { NelderMead, Gradient };

struct OptimizeConfig {
  int layers = 4;
  int restarts = 10;
  int max_iters = 2000;
  OptimizeMethod method = OptimizeMethod::NelderMead;
  int sample_interval = 200;
  int sample_count = 10;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct TracePoint {
  int iteration = 0;  // 1-based; NM counts cost evaluations, gradient counts steps
  double fv = 0.0;
  bool has_stats = false;
  double mean_cq = 0.0;
  double std_cq = 0.0;
};

struct RestartTrace {
  int restart = 0;
  std::vector<TracePoint> points;
  std::vector<double> final_theta;
  double final_fv = 0.0;
};

struct OptimizationTrace {
  std::vector<RestartTrace> restarts;
  AnsatzParams best_params;
  double best_fv = 0.0;
};

// Runs `restarts` independent seeded initializations with theta ~ U[0, 2pi).
// Non-convergence is visible in the trace, never thrown.
OptimizationTrace optimize(const PerturbedHamiltonian& h, const OptimizeConfig& config);

// Mean and population std of C_Q over `shots` bitstrings drawn from |amps|^2.
std::pair<double, double> sampled_qubo_stats(const RealState& state, const QuboProblem& problem,
                                             int shots, std::uint64_t seed);

}  // namespace lq
