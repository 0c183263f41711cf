#include "landscape_qubo/hamiltonian.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "landscape_qubo/errors.hpp"

namespace lq {

PerturbedHamiltonian build_hamiltonian(const QuboProblem& problem, double gamma, double lambda) {
  if (!(lambda > 0.0)) {
    throw invalid_input_error("build_hamiltonian: lambda must be > 0");
  }
  if (!std::isfinite(gamma) || !std::isfinite(lambda)) {
    throw invalid_input_error("build_hamiltonian: gamma and lambda must be finite");
  }
  PerturbedHamiltonian h;
  h.n = problem.n;
  h.ising_diag = ising_diagonal(problem);
  h.gamma = gamma;
  h.lambda = lambda;
  return h;
}

void apply_hamiltonian(const PerturbedHamiltonian& h, std::span<const double> v,
                       std::span<double> out) {
  const std::size_t dim = h.dim();
  if (v.size() != dim || out.size() != dim) {
    throw invalid_input_error("apply_hamiltonian: vector length must be 2^n");
  }
  for (std::size_t j = 0; j < dim; ++j) {
    double hop = 0.0;
    for (int k = 0; k < h.n; ++k) {
      hop += v[j ^ (std::size_t{1} << k)];
    }
    out[j] = (h.ising_diag[j] + h.gamma) * v[j] - h.lambda * hop;
  }
}

std::vector<double> apply_hamiltonian(const PerturbedHamiltonian& h,
                                      const std::vector<double>& v) {
  std::vector<double> out(v.size());
  apply_hamiltonian(h, v, out);
  return out;
}

Eigen::MatrixXd dense_matrix(const PerturbedHamiltonian& h) {
  if (h.n > kDenseMaxN) {
    throw capacity_error("dense_matrix: n > 14");
  }
  const auto dim = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    m(j, j) = h.ising_diag[static_cast<std::size_t>(j)] + h.gamma;
    for (int k = 0; k < h.n; ++k) {
      m(j, j ^ (Eigen::Index{1} << k)) = -h.lambda;
    }
  }
  return m;
}

ValidityReport validity_check(const PerturbedHamiltonian& h, bool check_inverse) {
  if (h.n > kDenseMaxN) {
    throw capacity_error("validity_check: n > 14 for eigenvalue/inverse checks");
  }
  ValidityReport report;
  double min_diag = h.ising_diag[0] + h.gamma;
  double max_abs_diag = std::abs(min_diag);
  for (double d : h.ising_diag) {
    double entry = d + h.gamma;
    min_diag = std::min(min_diag, entry);
    max_abs_diag = std::max(max_abs_diag, std::abs(entry));
  }
  report.diag_nonnegative = min_diag >= 0.0;

  Eigen::MatrixXd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  const double tol_psd = 1e-10 * max_abs_diag;
  report.positive_semidefinite = report.min_eigenvalue >= -tol_psd;

  report.valid = report.diag_nonnegative && report.positive_semidefinite;
  if (check_inverse) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible()) {
      report.inverse_entrywise_nonnegative = false;
    } else {
      Eigen::MatrixXd inv = lu.inverse();
      report.inverse_entrywise_nonnegative = inv.minCoeff() >= -1e-9;
    }
    report.valid = report.valid && *report.inverse_entrywise_nonnegative;
  }
  return report;
}

double gamma_heuristic_generic(const QuboProblem& problem) {
  double total = 0.0;
  for (double v : problem.a) total += std::abs(v);
  return 1.1 * total;
}

double gamma_heuristic_maxcut(int n) {
  if (n % 2 != 0) throw invalid_input_error("gamma_heuristic_maxcut: n must be even");
  return 1.5 * n + 1.0;
}

}  // namespace lq
