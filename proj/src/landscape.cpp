#include "landscape_qubo/landscape.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "landscape_qubo/errors.hpp"
#include "landscape_qubo/rng.hpp"

namespace lq {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

double kahan_sum(std::span<const double> values) {
  double sum = 0.0, c = 0.0;
  for (double v : values) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

int infer_n(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw invalid_input_error("distribution length must be a power of two");
  }
  return std::countr_zero(dim);
}

}  // namespace

LandscapeVector solve_landscape(const PerturbedHamiltonian& h, double tol, long max_iter,
                                bool jacobi) {
  if (!(tol > 0.0)) throw invalid_input_error("solve_landscape: tol must be > 0");
  const std::size_t dim = h.dim();
  if (max_iter < 0) max_iter = 10 * static_cast<long>(dim);

  std::vector<double> diag(dim);
  bool jacobi_usable = jacobi;
  for (std::size_t j = 0; j < dim; ++j) {
    diag[j] = h.ising_diag[j] + h.gamma;
    if (diag[j] <= 0.0) jacobi_usable = false;
  }

  const std::vector<double> b(dim, 1.0);
  const double b_norm = std::sqrt(static_cast<double>(dim));
  const double target = tol * b_norm;

  LandscapeVector lv;
  lv.u.assign(dim, 0.0);
  std::vector<double> r = b;  // residual of the zero initial guess
  std::vector<double> z(dim), p(dim), w(dim);
  auto precondition = [&](const std::vector<double>& in, std::vector<double>& out) {
    if (jacobi_usable) {
      for (std::size_t j = 0; j < dim; ++j) out[j] = in[j] / diag[j];
    } else {
      out = in;
    }
  };
  precondition(r, z);
  p = z;
  double rz = dot(r, z);

  std::vector<double> best_x = lv.u;
  double best_res = norm2(r);
  bool stalled = false;
  long iter = 0;
  while (iter < max_iter) {
    double res = norm2(r);
    if (res < best_res) {
      best_res = res;
      best_x = lv.u;
    }
    if (res <= target) {
      // The recursive residual drifts from the true one; confirm and restart
      // the recursion if the confirmation fails.
      apply_hamiltonian(h, lv.u, w);
      for (std::size_t j = 0; j < dim; ++j) r[j] = b[j] - w[j];
      if (norm2(r) <= target) break;
      precondition(r, z);
      p = z;
      rz = dot(r, z);
    }
    apply_hamiltonian(h, p, w);
    double pw = dot(p, w);
    if (!(pw > 0.0) || !std::isfinite(pw)) {
      stalled = true;  // indefinite H: CG has no descent direction
      break;
    }
    double alpha = rz / pw;
    for (std::size_t j = 0; j < dim; ++j) {
      lv.u[j] += alpha * p[j];
      r[j] -= alpha * w[j];
    }
    precondition(r, z);
    double rz_next = dot(r, z);
    double beta = rz_next / rz;
    rz = rz_next;
    if (!std::isfinite(beta)) {
      stalled = true;
      break;
    }
    for (std::size_t j = 0; j < dim; ++j) p[j] = z[j] + beta * p[j];
    ++iter;
  }

  double final_res = norm2(r);
  if (stalled || final_res > best_res) {
    lv.u = best_x;
  }
  apply_hamiltonian(h, lv.u, w);
  for (std::size_t j = 0; j < dim; ++j) w[j] = b[j] - w[j];
  lv.residual_norm = norm2(w);
  lv.iterations = static_cast<int>(iter);
  lv.converged = lv.residual_norm <= target;
  return lv;
}

std::vector<double> solve_landscape_diagonal(const std::vector<double>& ising_diag,
                                             double gamma) {
  std::vector<double> u(ising_diag.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    double d = ising_diag[j] + gamma;
    if (d == 0.0) {
      throw numeric_error("solve_landscape_diagonal: zero diagonal at index " +
                          std::to_string(j));
    }
    u[j] = 1.0 / d;
  }
  return u;
}

LandscapeVector spectral_landscape(const PerturbedHamiltonian& h) {
  if (h.n > 12) throw capacity_error("spectral_landscape: n > 12");
  Eigen::MatrixXd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();
  const auto dim = evals.size();
  for (Eigen::Index beta = 0; beta < dim; ++beta) {
    if (std::abs(evals(beta)) < 1e-12) {
      throw numeric_error("spectral_landscape: near-singular spectrum, |E| < 1e-12");
    }
  }
  // u = V diag(1/E) V^T 1, computed as V * (colsum(V) / E).
  Eigen::VectorXd colsums = evecs.colwise().sum();
  Eigen::VectorXd weights = colsums.array() / evals.array();
  Eigen::VectorXd u = evecs * weights;

  LandscapeVector lv;
  lv.u.assign(u.data(), u.data() + u.size());
  std::vector<double> w(lv.u.size());
  apply_hamiltonian(h, lv.u, w);
  double res = 0.0;
  for (double v : w) res += (v - 1.0) * (v - 1.0);
  lv.residual_norm = std::sqrt(res);
  lv.iterations = 0;
  lv.converged = true;
  return lv;
}

std::vector<double> effective_potential(const LandscapeVector& lv) {
  std::vector<double> w(lv.u.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (lv.u[j] == 0.0) {
      throw numeric_error("effective_potential: u is zero at index " + std::to_string(j));
    }
    w[j] = 1.0 / lv.u[j];
  }
  return w;
}

SamplingDistribution sampling_distribution(std::span<const double> v,
                                           DistributionSource source) {
  std::vector<double> sq(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) sq[j] = v[j] * v[j];
  double total = kahan_sum(sq);
  if (!(total > 0.0)) throw invalid_input_error("sampling_distribution: zero vector");
  SamplingDistribution dist;
  dist.source = source;
  dist.probs.resize(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) dist.probs[j] = sq[j] / total;
  return dist;
}

SamplingDistribution sampling_distribution(std::span<const std::complex<double>> v,
                                           DistributionSource source) {
  std::vector<double> sq(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) sq[j] = std::norm(v[j]);
  double total = kahan_sum(sq);
  if (!(total > 0.0)) throw invalid_input_error("sampling_distribution: zero vector");
  SamplingDistribution dist;
  dist.source = source;
  dist.probs.resize(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) dist.probs[j] = sq[j] / total;
  return dist;
}

std::vector<Bitstring> sample_bitstrings(const SamplingDistribution& dist, int shots,
                                         std::uint64_t seed) {
  if (shots < 1) throw invalid_input_error("sample_bitstrings: shots must be >= 1");
  const int n = infer_n(dist.probs.size());
  std::vector<double> cdf(dist.probs.size());
  double run = 0.0;
  for (std::size_t j = 0; j < dist.probs.size(); ++j) {
    run += dist.probs[j];
    cdf[j] = run;
  }
  Rng rng(mix_seed(seed, 0x5a3fu));
  std::vector<Bitstring> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (int s = 0; s < shots; ++s) {
    double x = rng.uniform() * run;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
    auto idx = static_cast<std::uint32_t>(std::min<std::ptrdiff_t>(
        it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    out.push_back({idx, n});
  }
  return out;
}

BoundReport verify_bound(const PerturbedHamiltonian& h, const LandscapeVector& lv, int k) {
  if (h.n > 12) throw capacity_error("verify_bound: n > 12");
  ValidityReport validity = validity_check(h, false);
  if (!validity.valid) {
    throw numeric_error("verify_bound: bound not applicable, H fails validity conditions");
  }
  Eigen::MatrixXd m = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();
  const auto dim = evals.size();
  k = std::min<int>(k, static_cast<int>(dim));

  BoundReport report;
  for (int beta = 0; beta < k; ++beta) {
    EigenstateBound state;
    state.energy = evals(beta);
    const double inf_norm = evecs.col(beta).cwiseAbs().maxCoeff();
    const double scale = std::abs(evals(beta)) * inf_norm;
    double min_slack = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < dim; ++j) {
      double slack = scale * lv.u[static_cast<std::size_t>(j)] - std::abs(evecs(j, beta));
      min_slack = std::min(min_slack, slack);
      if (slack < -kBoundSlack) ++state.violations;
    }
    state.min_slack = min_slack;
    state.max_violation = std::max(0.0, -min_slack);
    report.max_violation = std::max(report.max_violation, state.max_violation);
    report.states.push_back(state);
  }
  return report;
}

HammingProfile hamming_profile(const SamplingDistribution& dist, const Bitstring& x_star,
                               bool keep_per_bitstring) {
  const int n = infer_n(dist.probs.size());
  if (x_star.n != n) throw invalid_input_error("hamming_profile: length mismatch");
  HammingProfile profile;
  profile.by_distance.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t j = 0; j < dist.probs.size(); ++j) {
    int d = std::popcount(static_cast<std::uint32_t>(j) ^ x_star.index);
    profile.by_distance[static_cast<std::size_t>(d)] += dist.probs[j];
    if (keep_per_bitstring) {
      profile.per_bitstring.push_back({{static_cast<std::uint32_t>(j), n}, dist.probs[j]});
    }
  }
  return profile;
}

std::uint32_t argmax_index(const SamplingDistribution& dist) {
  std::uint32_t best = 0;
  for (std::uint32_t j = 1; j < dist.probs.size(); ++j) {
    if (dist.probs[j] > dist.probs[best]) best = j;
  }
  return best;
}

int argmax_hamming(const SamplingDistribution& dist, const Bitstring& x_star) {
  const int n = infer_n(dist.probs.size());
  if (x_star.n != n) throw invalid_input_error("argmax_hamming: length mismatch");
  return std::popcount(argmax_index(dist) ^ x_star.index);
}

}  // namespace lq
