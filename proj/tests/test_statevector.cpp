#include <doctest.h>

#include <cmath>
#include <numbers>

#include "landscape_qubo/errors.hpp"
#include "landscape_qubo/rng.hpp"
#include "landscape_qubo/statevector.hpp"

using namespace lq;

TEST_CASE("plus state") {
  RealState one = plus_state(1);
  CHECK(one.amps[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(one.amps[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  RealState two = plus_state(2);
  for (double a : two.amps) CHECK(a == 0.5);
  CHECK(norm(two) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("ry gate basics") {
  RealState zero{1, {1.0, 0.0}};
  apply_ry(zero, 0, 0.0);
  CHECK(zero.amps[0] == 1.0);
  CHECK(zero.amps[1] == 0.0);

  apply_ry(zero, 0, std::numbers::pi);  // |0> -> |1> with amplitude +1
  CHECK(zero.amps[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(zero.amps[1] == doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(3);
  RealState state = plus_state(5);
  for (int i = 0; i < 50; ++i) {
    apply_ry(state, static_cast<int>(rng.below(5)), rng.uniform(-6.0, 6.0));
  }
  CHECK(norm(state) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(apply_ry(state, 5, 0.1), invalid_input_error);
}

TEST_CASE("cnot: involution and |10> -> |11>") {
  RealState state{2, {0.0, 1.0, 0.0, 0.0}};  // bits (1,0), index 1
  apply_cnot(state, 0, 1);
  CHECK(state.amps[3] == 1.0);  // bits (1,1)
  CHECK(state.amps[1] == 0.0);
  apply_cnot(state, 0, 1);
  CHECK(state.amps[1] == 1.0);

  Rng rng(11);
  RealState random = plus_state(4);
  for (int i = 0; i < 20; ++i) apply_ry(random, static_cast<int>(rng.below(4)), rng.uniform());
  RealState copy = random;
  apply_cnot(random, 2, 0);
  apply_cnot(random, 2, 0);
  CHECK(random.amps == copy.amps);

  CHECK_THROWS_AS(apply_cnot(random, 1, 1), invalid_input_error);
}

TEST_CASE("norm preserved across long random gate sequences") {
  Rng rng(21);
  RealState state = plus_state(6);
  for (int i = 0; i < 100; ++i) {
    if (rng.below(3) == 0) {
      int c = static_cast<int>(rng.below(6));
      int t = (c + 1 + static_cast<int>(rng.below(5))) % 6;
      apply_cnot(state, c, t);
    } else {
      apply_ry(state, static_cast<int>(rng.below(6)), rng.uniform(-8.0, 8.0));
    }
  }
  CHECK(norm(state) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("expectation of the perturbed operator") {
  QuboProblem p = generate_random_qubo(4, 19);
  PerturbedHamiltonian h = build_hamiltonian(p, 2.5, 0.6);

  // Basis state: diagonal element; the transverse term has no diagonal part.
  RealState basis{4, std::vector<double>(16, 0.0)};
  basis.amps[9] = 1.0;
  CHECK(expectation_perturbed(h, basis) ==
        doctest::Approx(h.ising_diag[9] + 2.5).epsilon(1e-12));

  RealState plus = plus_state(4);
  double mean = 0.0;
  for (double d : h.ising_diag) mean += d;
  mean /= 16.0;
  CHECK(expectation_perturbed(h, plus) ==
        doctest::Approx(mean + 2.5 - 4 * 0.6).epsilon(1e-12));
}

TEST_CASE("expectation decomposes into ising + gamma - lambda * transverse") {
  QuboProblem p = generate_random_qubo(6, 23);
  PerturbedHamiltonian h = build_hamiltonian(p, 1.5, 0.8);
  Rng rng(37);
  RealState state = plus_state(6);
  for (int i = 0; i < 30; ++i) {
    apply_ry(state, static_cast<int>(rng.below(6)), rng.uniform(-3.0, 3.0));
    if (i % 3 == 0) apply_cnot(state, static_cast<int>(rng.below(5)), 5);
  }
  double transverse = 0.0;
  for (int q = 0; q < 6; ++q) {
    for (std::size_t j = 0; j < state.amps.size(); ++j) {
      transverse += state.amps[j] * state.amps[j ^ (std::size_t{1} << q)];
    }
  }
  double expected = expectation_ising(h.ising_diag, state) + 1.5 - 0.8 * transverse;
  CHECK(expectation_perturbed(h, state) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("expectation_ising endpoints") {
  QuboProblem p = generate_random_qubo(5, 29);
  PerturbedHamiltonian h = build_hamiltonian(p, 1.0, 0.1);
  SolutionRecord record = brute_force_solve(p);

  SamplingDistribution point;
  point.probs.assign(32, 0.0);
  point.probs[record.optimizers.front().index] = 1.0;
  CHECK(expectation_ising(h.ising_diag, point) == record.optimal_cost);

  SamplingDistribution uniform;
  uniform.probs.assign(32, 1.0 / 32.0);
  double mean = 0.0;
  for (double d : h.ising_diag) mean += d;
  mean /= 32.0;
  CHECK(expectation_ising(h.ising_diag, uniform) == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("overlap with |+>") {
  RealState plus = plus_state(3);
  CHECK(overlap_plus(plus) == doctest::Approx(1.0).epsilon(1e-14));

  RealState basis{3, std::vector<double>(8, 0.0)};
  basis.amps[6] = 1.0;
  CHECK(overlap_plus(basis) == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-14));

  RealState orthogonal{1, {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}};
  CHECK(overlap_plus(orthogonal) == doctest::Approx(0.0).epsilon(1e-15));
}
