#pragma once

#include <array>
#include <span>
#include <vector>

#include "landscape_qubo/qubo.hpp"
#include "landscape_qubo/statevector.hpp"

namespace lq {

struct QaoaParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  int depth() const { return static_cast<int>(gamma.size()); }
};

// |psi(gamma, beta)> = prod_i U_x(beta_i) U_H(gamma_i) |+> with diagonal
// phases U_H = e^{-i gamma H_Ising} and per-qubit mixers e^{-i beta sigma^x}.
ComplexState qaoa_state(const QaoaParams& params, std::span<const double> ising_diag);

double qaoa_expectation(const QaoaParams& params, std::span<const double> ising_diag);

struct GridSearchResult {
  int resolution = 0;
  std::vector<double> gamma_values;
  std::vector<double> beta_values;
  std::vector<double> grid;  // row-major, gamma outer, beta inner
  double best_gamma = 0.0, best_beta = 0.0, best_value = 0.0;
  double refined_gamma = 0.0, refined_beta = 0.0, refined_value = 0.0;
  std::vector<std::array<double, 3>> path;  // refinement iterates (gamma, beta, value)
};

struct GridSearchOptions {
  int resolution = 100;
  double gamma_lo = 0.0, gamma_hi = 6.283185307179586476925286766559;  // [0, 2pi)
  double beta_lo = 0.0, beta_hi = 3.1415926535897932384626433832795;   // [0, pi)
  int refine_max_evals = 200;
  int threads = 1;
};

// Depth-1 grid over (gamma, beta), then local derivative-free refinement from
// the best cell; refined value never exceeds the grid minimum.
GridSearchResult grid_search(std::span<const double> ising_diag,
                             const GridSearchOptions& options = {});

// 2 * n_e * p, with n_e the number of i<j pairs where a[i][j] != 0.
long qaoa_cnot_count(const QuboProblem& problem, int p);

}  // namespace lq
