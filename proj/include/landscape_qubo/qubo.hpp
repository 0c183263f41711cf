#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lq {

enum class ProblemKind { RandomDense, MaxCut3Regular, Custom };

std::string kind_name(ProblemKind kind);
ProblemKind kind_from_name(const std::string& name);

// Basis index over n binary variables, little-endian: variable 1 is bit 0,
// so the single-flip neighbours of J are J ^ (1<<k).
struct Bitstring {
  std::uint32_t index = 0;
  int n = 0;

  int bit(int i) const { return static_cast<int>((index >> i) & 1u); }
  std::string to_string() const;  // bits[0] first, e.g. index 1, n=4 -> "1000"
};

Bitstring bitstring_from_string(const std::string& bits);
int hamming_distance(const Bitstring& x1, const Bitstring& x2);

// Minimize C_Q(x) = x^T A x over x in {0,1}^n. A is dense, symmetric, row-major.
struct QuboProblem {
  int n = 0;
  std::vector<double> a;  // n*n
  ProblemKind kind = ProblemKind::Custom;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<int, int>> edges;  // MaxCut3Regular only, i<j sorted

  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Symmetrizes the matrix; use for externally supplied problems.
QuboProblem make_custom_problem(int n, std::vector<double> matrix);

QuboProblem generate_random_qubo(int n, std::uint64_t seed);
QuboProblem generate_maxcut_3regular(int n, std::uint64_t seed);

double qubo_cost(const QuboProblem& problem, const Bitstring& x);
double qubo_cost(const QuboProblem& problem, std::uint32_t index);

// Diagonal of the Ising operator in the computational basis: entry J is
// C_Q(bitstring(J)), same arithmetic as qubo_cost.
std::vector<double> ising_diagonal(const QuboProblem& problem);

struct SolutionRecord {
  double optimal_cost = 0.0;
  std::vector<Bitstring> optimizers;  // complete degenerate argmin set, ascending index
  std::optional<std::vector<std::pair<double, int>>> spectrum;  // (cost, multiplicity)
};

// Absolute tolerance for grouping degenerate spectrum levels.
inline constexpr double kTieTolerance = 1e-9;
inline constexpr int kBruteForceMaxN = 24;

SolutionRecord brute_force_solve(const QuboProblem& problem, bool with_spectrum = false);

}  // namespace lq
