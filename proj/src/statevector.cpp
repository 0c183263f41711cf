#include "landscape_qubo/statevector.hpp"

#include <cmath>

#include "landscape_qubo/errors.hpp"

namespace lq {

RealState plus_state(int n) {
  if (n < 1) throw invalid_input_error("plus_state: n must be >= 1");
  if (n > kBruteForceMaxN) throw capacity_error("plus_state: n exceeds the 2^n budget");
  RealState state;
  state.n = n;
  const std::size_t dim = std::size_t{1} << n;
  state.amps.assign(dim, std::pow(2.0, -0.5 * n));
  return state;
}

void apply_ry(RealState& state, int qubit, double theta) {
  if (qubit < 0 || qubit >= state.n) throw invalid_input_error("apply_ry: qubit out of range");
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t dim = state.amps.size();
  for (std::size_t j = 0; j < dim; ++j) {
    if (j & mask) continue;
    double a = state.amps[j];
    double b = state.amps[j | mask];
    state.amps[j] = c * a - s * b;
    state.amps[j | mask] = s * a + c * b;
  }
}

namespace {

template <typename State>
void cnot_impl(State& state, int control, int target) {
  if (control == target) throw invalid_input_error("apply_cnot: control == target");
  if (control < 0 || control >= state.n || target < 0 || target >= state.n) {
    throw invalid_input_error("apply_cnot: qubit out of range");
  }
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  const std::size_t dim = state.amps.size();
  for (std::size_t j = 0; j < dim; ++j) {
    if ((j & cmask) && !(j & tmask)) {
      std::swap(state.amps[j], state.amps[j | tmask]);
    }
  }
}

}  // namespace

void apply_cnot(RealState& state, int control, int target) { cnot_impl(state, control, target); }
void apply_cnot(ComplexState& state, int control, int target) {
  cnot_impl(state, control, target);
}

double expectation_perturbed(const PerturbedHamiltonian& h, const RealState& state) {
  if (h.n != state.n) throw invalid_input_error("expectation_perturbed: size mismatch");
  std::vector<double> w(state.amps.size());
  apply_hamiltonian(h, state.amps, w);
  double out = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) out += state.amps[j] * w[j];
  return out;
}

double expectation_ising(std::span<const double> ising_diag, const SamplingDistribution& dist) {
  if (ising_diag.size() != dist.probs.size()) {
    throw invalid_input_error("expectation_ising: size mismatch");
  }
  double out = 0.0;
  for (std::size_t j = 0; j < ising_diag.size(); ++j) out += dist.probs[j] * ising_diag[j];
  return out;
}

double expectation_ising(std::span<const double> ising_diag, const RealState& state) {
  if (ising_diag.size() != state.amps.size()) {
    throw invalid_input_error("expectation_ising: size mismatch");
  }
  double out = 0.0, total = 0.0;
  for (std::size_t j = 0; j < ising_diag.size(); ++j) {
    double p = state.amps[j] * state.amps[j];
    out += p * ising_diag[j];
    total += p;
  }
  if (!(total > 0.0)) throw invalid_input_error("expectation_ising: zero state");
  return out / total;
}

double expectation_ising(std::span<const double> ising_diag, const ComplexState& state) {
  if (ising_diag.size() != state.amps.size()) {
    throw invalid_input_error("expectation_ising: size mismatch");
  }
  double out = 0.0, total = 0.0;
  for (std::size_t j = 0; j < ising_diag.size(); ++j) {
    double p = std::norm(state.amps[j]);
    out += p * ising_diag[j];
    total += p;
  }
  if (!(total > 0.0)) throw invalid_input_error("expectation_ising: zero state");
  return out / total;
}

double overlap_plus(const RealState& state) {
  double sum = 0.0;
  for (double a : state.amps) sum += a;
  return std::pow(2.0, -0.5 * state.n) * sum;
}

double norm(const RealState& state) {
  double s = 0.0;
  for (double a : state.amps) s += a * a;
  return std::sqrt(s);
}

double norm(const ComplexState& state) {
  double s = 0.0;
  for (const auto& a : state.amps) s += std::norm(a);
  return std::sqrt(s);
}

}  // namespace lq
