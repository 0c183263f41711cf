#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

#include "landscape_qubo/qubo.hpp"

namespace lq {

// H = H_Ising + gamma*I - lambda * sum_i sigma^x_i, kept matrix-free:
// element (J,K) is ising_diag[J]+gamma on the diagonal, -lambda when
// hamming(J,K) == 1, zero otherwise.
struct PerturbedHamiltonian {
  int n = 0;
  std::vector<double> ising_diag;  // 2^n
  double gamma = 0.0;
  double lambda = 0.0;  // > 0

  std::size_t dim() const { return ising_diag.size(); }
};

inline constexpr int kDenseMaxN = 14;

PerturbedHamiltonian build_hamiltonian(const QuboProblem& problem, double gamma, double lambda);

// w[J] = (ising_diag[J]+gamma)*v[J] - lambda * sum_k v[J ^ (1<<k)]
void apply_hamiltonian(const PerturbedHamiltonian& h, std::span<const double> v,
                       std::span<double> out);
std::vector<double> apply_hamiltonian(const PerturbedHamiltonian& h,
                                      const std::vector<double>& v);

Eigen::MatrixXd dense_matrix(const PerturbedHamiltonian& h);  // n <= 14

struct ValidityReport {
  bool diag_nonnegative = false;
  double min_eigenvalue = 0.0;
  bool positive_semidefinite = false;
  std::optional<bool> inverse_entrywise_nonnegative;
  bool valid = false;
};

// diag check is exact; PSD uses a dense symmetric eigensolve with tolerance
// 1e-10 * max|diag|; the entrywise-inverse check is opt-in (O(dim^3) LU).
ValidityReport validity_check(const PerturbedHamiltonian& h, bool check_inverse);

// Gamma offset heuristics. Generic: 1.1 * sum_ij |A_ij| (double sum over all
// ordered pairs). MaxCut 3-regular: 3n/2 + 1.
double gamma_heuristic_generic(const QuboProblem& problem);
double gamma_heuristic_maxcut(int n);

}  // namespace lq
