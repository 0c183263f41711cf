#include "landscape_qubo/qubo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "landscape_qubo/errors.hpp"
#include "landscape_qubo/rng.hpp"

namespace lq {

std::string kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::RandomDense: return "random_dense";
    case ProblemKind::MaxCut3Regular: return "maxcut_3regular";
    case ProblemKind::Custom: return "custom";
  }
  return "custom";
}

ProblemKind kind_from_name(const std::string& name) {
  if (name == "random_dense") return ProblemKind::RandomDense;
  if (name == "maxcut_3regular") return ProblemKind::MaxCut3Regular;
  if (name == "custom") return ProblemKind::Custom;
  throw invalid_input_error("unknown problem kind: " + name);
}

std::string Bitstring::to_string() const {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Bitstring bitstring_from_string(const std::string& bits) {
  if (bits.empty() || bits.size() > 32) {
    throw invalid_input_error("bitstring length must be in [1, 32]");
  }
  Bitstring x;
  x.n = static_cast<int>(bits.size());
  for (int i = 0; i < x.n; ++i) {
    char c = bits[static_cast<std::size_t>(i)];
    if (c == '1') {
      x.index |= (1u << i);
    } else if (c != '0') {
      throw invalid_input_error("bitstring must contain only 0/1");
    }
  }
  return x;
}

int hamming_distance(const Bitstring& x1, const Bitstring& x2) {
  if (x1.n != x2.n) throw invalid_input_error("hamming_distance: length mismatch");
  return std::popcount(x1.index ^ x2.index);
}

QuboProblem make_custom_problem(int n, std::vector<double> matrix) {
  if (n < 1) throw invalid_input_error("problem size must be >= 1");
  if (matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw invalid_input_error("matrix must be n*n");
  }
  QuboProblem p;
  p.n = n;
  p.a = std::move(matrix);
  p.kind = ProblemKind::Custom;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (p.at(i, j) + p.at(j, i));
      p.at(i, j) = v;
      p.at(j, i) = v;
    }
  }
  return p;
}

QuboProblem generate_random_qubo(int n, std::uint64_t seed) {
  if (n < 1) throw invalid_input_error("problem size must be >= 1");
  QuboProblem p;
  p.n = n;
  p.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  p.kind = ProblemKind::RandomDense;
  p.seed = seed;
  Rng rng(mix_seed(seed, 0x71b0u, static_cast<std::uint64_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = rng.uniform(-1.0, 1.0);
      p.at(i, j) = v;
      p.at(j, i) = v;
    }
  }
  return p;
}

namespace {

// Configuration/pairing model: three stubs per vertex, shuffled and paired;
// rejected on self-loops or multi-edges.
bool try_pairing(int n, Rng& rng, std::vector<std::pair<int, int>>& edges) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(3 * n));
  for (int v = 0; v < n; ++v) {
    stubs.push_back(v);
    stubs.push_back(v);
    stubs.push_back(v);
  }
  for (std::size_t i = stubs.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(stubs[i], stubs[j]);
  }
  std::set<std::pair<int, int>> seen;
  edges.clear();
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) return false;
    auto e = std::minmax(u, v);
    if (!seen.insert({e.first, e.second}).second) return false;
    edges.emplace_back(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  return true;
}

}  // namespace

QuboProblem generate_maxcut_3regular(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw invalid_input_error("3-regular MaxCut requires even n >= 4");
  }
  Rng rng(mix_seed(seed, 0x3e96u, static_cast<std::uint64_t>(n)));
  std::vector<std::pair<int, int>> edges;
  bool ok = false;
  for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
    ok = try_pairing(n, rng, edges);
  }
  if (!ok) throw numeric_error("3-regular pairing failed after 1000 attempts");

  QuboProblem p;
  p.n = n;
  p.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  p.kind = ProblemKind::MaxCut3Regular;
  p.seed = seed;
  p.edges = std::move(edges);
  // Minimization form C_Q(x) = sum_{(i,j) in E} (2 x_i x_j - x_i - x_j) = -cut(x).
  for (int v = 0; v < n; ++v) p.at(v, v) = -3.0;
  for (const auto& [u, v] : p.edges) {
    p.at(u, v) = 1.0;
    p.at(v, u) = 1.0;
  }
  return p;
}

namespace {

// Shared evaluation for qubo_cost and ising_diagonal: the spec demands exact
// (bitwise) agreement between the classical cost and the operator diagonal,
// so both must run the same summation order (set bits ascending, i outer).
double cost_at_index(const QuboProblem& problem, std::uint32_t index) {
  int set_bits[32];
  int count = 0;
  std::uint32_t rest = index;
  while (rest != 0) {
    int b = std::countr_zero(rest);
    set_bits[count++] = b;
    rest &= rest - 1;
  }
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      total += problem.at(set_bits[i], set_bits[j]);
    }
  }
  return total;
}

}  // namespace

double qubo_cost(const QuboProblem& problem, const Bitstring& x) {
  if (x.n != problem.n) throw invalid_input_error("qubo_cost: bitstring length mismatch");
  return cost_at_index(problem, x.index);
}

double qubo_cost(const QuboProblem& problem, std::uint32_t index) {
  return cost_at_index(problem, index);
}

std::vector<double> ising_diagonal(const QuboProblem& problem) {
  if (problem.n > kBruteForceMaxN) {
    throw capacity_error("ising_diagonal: n exceeds the 2^n memory budget");
  }
  const std::size_t dim = std::size_t{1} << problem.n;
  std::vector<double> diag(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    diag[j] = cost_at_index(problem, static_cast<std::uint32_t>(j));
  }
  return diag;
}

SolutionRecord brute_force_solve(const QuboProblem& problem, bool with_spectrum) {
  if (problem.n > kBruteForceMaxN) {
    throw capacity_error("brute_force_solve: n > 24");
  }
  const std::size_t dim = std::size_t{1} << problem.n;
  SolutionRecord record;
  record.optimal_cost = cost_at_index(problem, 0);
  record.optimizers.push_back({0, problem.n});
  std::vector<double> costs;
  if (with_spectrum) costs.resize(dim);
  if (with_spectrum) costs[0] = record.optimal_cost;
  for (std::size_t j = 1; j < dim; ++j) {
    double c = cost_at_index(problem, static_cast<std::uint32_t>(j));
    if (with_spectrum) costs[j] = c;
    if (c < record.optimal_cost) {
      record.optimal_cost = c;
      record.optimizers.clear();
      record.optimizers.push_back({static_cast<std::uint32_t>(j), problem.n});
    } else if (c == record.optimal_cost) {
      record.optimizers.push_back({static_cast<std::uint32_t>(j), problem.n});
    }
  }
  if (with_spectrum) {
    std::sort(costs.begin(), costs.end());
    std::vector<std::pair<double, int>> spectrum;
    for (double c : costs) {
      if (!spectrum.empty() && c - spectrum.back().first <= kTieTolerance) {
        ++spectrum.back().second;
      } else {
        spectrum.emplace_back(c, 1);
      }
    }
    record.spectrum = std::move(spectrum);
  }
  return record;
}

}  // namespace lq
