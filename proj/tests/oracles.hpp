#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// different summation routes, dense factorizations instead of CG, matrix
// exponentials instead of gate kernels, finite differences instead of shift
// rules, exhaustive grids instead of simplex descent.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "landscape_qubo/hamiltonian.hpp"
#include "landscape_qubo/qubo.hpp"
#include "landscape_qubo/varprep.hpp"

namespace lq::test {

// Edges crossing the partition encoded by the bits of index.
int cut_count(const std::vector<std::pair<int, int>>& edges, std::uint32_t index);

// C_Q via the upper-triangle route sum_i a_ii x_i + 2 sum_{i<j} a_ij x_i x_j —
// a different floating-point route than the library's full double sum.
double qubo_cost_upper(const QuboProblem& problem, std::uint32_t index);

// Dense H assembled from the element rule and solved by LU.
std::vector<double> dense_landscape_solve(const PerturbedHamiltonian& h);

// Dense H matrix built here, not by the library.
Eigen::MatrixXd dense_hamiltonian(const PerturbedHamiltonian& h);

// Central finite differences of f_v.
std::vector<double> fd_gradient_fv(const AnsatzParams& params, const PerturbedHamiltonian& h,
                                   double step = 1e-5);

// p-layer QAOA state via dense unitaries: diagonal phases exactly, the mixer
// as the matrix exponential of the hypercube adjacency (eigendecomposition).
std::vector<std::complex<double>> dense_qaoa_state(const std::vector<double>& gamma,
                                                   const std::vector<double>& beta,
                                                   const std::vector<double>& ising_diag);

// Exhaustive zoomed grid minimization (refines the winning cell's window).
struct GridScanResult {
  std::vector<double> best_x;
  double best_f;
};
GridScanResult grid_scan_minimize(const std::function<double(const std::vector<double>&)>& f,
                                  std::vector<std::pair<double, double>> bounds,
                                  int points_per_dim, int zoom_rounds);

double binomial_coefficient(int n, int k);

}  // namespace lq::test
