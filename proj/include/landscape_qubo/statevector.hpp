#pragma once

#include <complex>
#include <span>
#include <vector>

#include "landscape_qubo/hamiltonian.hpp"
#include "landscape_qubo/landscape.hpp"

namespace lq {

// Real-amplitude state: the ansatz circuit (H layer, R_y, CNOT) never leaves
// the real subspace, which halves memory and time for the dominant workload.
struct RealState {
  int n = 0;
  std::vector<double> amps;
};

struct ComplexState {
  int n = 0;
  std::vector<std::complex<double>> amps;
};

RealState plus_state(int n);

// R_y(theta) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]] on one wire.
void apply_ry(RealState& state, int qubit, double theta);

void apply_cnot(RealState& state, int control, int target);
void apply_cnot(ComplexState& state, int control, int target);

// <psi|H|psi> via one matrix-free apply.
double expectation_perturbed(const PerturbedHamiltonian& h, const RealState& state);

// sum_J probs[J] * ising_diag[J]
double expectation_ising(std::span<const double> ising_diag, const SamplingDistribution& dist);
double expectation_ising(std::span<const double> ising_diag, const RealState& state);
double expectation_ising(std::span<const double> ising_diag, const ComplexState& state);

// <psi|+> = 2^{-n/2} * sum_J amps[J]
double overlap_plus(const RealState& state);

double norm(const RealState& state);
double norm(const ComplexState& state);

}  // namespace lq
