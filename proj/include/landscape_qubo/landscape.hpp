#pragma once

#include <complex>
#include <span>
#include <vector>

#include "landscape_qubo/hamiltonian.hpp"
#include "landscape_qubo/qubo.hpp"

namespace lq {

// Solution of H u = 1. Component u_J is in units of 1/energy; the |+> form of
// the same equation differs only by the scalar 2^{-n/2}, which normalization
// removes, so the all-ones right-hand side is used throughout.
struct LandscapeVector {
  std::vector<double> u;
  double residual_norm = 0.0;  // ||H u - 1||_2, recomputed at exit
  int iterations = 0;
  bool converged = false;
};

// Conjugate gradient from a zero initial guess, stopping at
// ||H u - 1|| <= tol * ||1||. max_iter < 0 means 10 * 2^n. Indefinite H makes
// CG stall; the best iterate is returned with converged == false, callers in
// sweep code treat that as an invalid-region signal. jacobi enables diagonal
// preconditioning (skipped if any diagonal entry is <= 0).
LandscapeVector solve_landscape(const PerturbedHamiltonian& h, double tol = 1e-10,
                                long max_iter = -1, bool jacobi = false);

// Closed form for the lambda -> 0 limit: u_J = 1/(ising_diag[J] + gamma).
std::vector<double> solve_landscape_diagonal(const std::vector<double>& ising_diag,
                                             double gamma);

// u_J = sum_beta (<J|phi^beta>/E^beta) * sum_m <m|phi^beta> from the full dense
// eigensystem; independent oracle for solve_landscape. n <= 12.
LandscapeVector spectral_landscape(const PerturbedHamiltonian& h);

// W = 1/u elementwise.
std::vector<double> effective_potential(const LandscapeVector& lv);

enum class DistributionSource { ExactLandscape, AnsatzState, QaoaState, GroundStateOfH, Uniform };

struct SamplingDistribution {
  std::vector<double> probs;
  DistributionSource source = DistributionSource::ExactLandscape;
};

// probs[J] = |v[J]|^2 / ||v||^2.
SamplingDistribution sampling_distribution(std::span<const double> v,
                                           DistributionSource source);
SamplingDistribution sampling_distribution(std::span<const std::complex<double>> v,
                                           DistributionSource source);

std::vector<Bitstring> sample_bitstrings(const SamplingDistribution& dist, int shots,
                                         std::uint64_t seed);

struct EigenstateBound {
  double energy = 0.0;
  double min_slack = 0.0;      // min_J (|E| * ||phi||_inf * u_J - |phi_J|)
  double max_violation = 0.0;  // max(0, -min_slack)
  int violations = 0;          // components exceeding the 1e-9 slack allowance
};

struct BoundReport {
  std::vector<EigenstateBound> states;
  double max_violation = 0.0;
};

inline constexpr double kBoundSlack = 1e-9;

// Checks |<J|phi^beta>| <= |E^beta| * ||phi^beta||_inf * u_J + 1e-9 for the k
// lowest eigenpairs of H. Requires a valid H (bound-not-applicable otherwise).
BoundReport verify_bound(const PerturbedHamiltonian& h, const LandscapeVector& lv, int k);

struct HammingProfile {
  std::vector<double> by_distance;  // length n+1
  std::vector<std::pair<Bitstring, double>> per_bitstring;  // optional detail
};

HammingProfile hamming_profile(const SamplingDistribution& dist, const Bitstring& x_star,
                               bool keep_per_bitstring = false);

// Hamming distance from x_star to the most probable bitstring; ties broken by
// lowest index.
int argmax_hamming(const SamplingDistribution& dist, const Bitstring& x_star);
std::uint32_t argmax_index(const SamplingDistribution& dist);

}  // namespace lq
