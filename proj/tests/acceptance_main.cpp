// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any hard criterion fails. Criterion 11's n=10 half is reported, not
// asserted (restart spread mirrors the optimizer's, not the method's, quality).
//
//   acceptance [--cli PATH] [--threads N]
//
// --cli points at the landscape-qubo binary for the determinism criterion;
// omitted, that criterion is skipped and reported as such (still a failure,
// the ctest registration always passes the path).

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "landscape_qubo/experiments.hpp"
#include "landscape_qubo/nelder_mead.hpp"
#include "landscape_qubo/parallel.hpp"
#include "landscape_qubo/rng.hpp"
#include "landscape_qubo/serialization.hpp"
#include "oracles.hpp"

using namespace lq;

namespace {

struct Criterion {
  int id;
  bool pass;
  bool soft = false;
  std::string detail;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

double rel_inf_error(const std::vector<double>& got, const std::vector<double>& want) {
  double err = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < got.size(); ++j) {
    err = std::max(err, std::abs(got[j] - want[j]));
    scale = std::max(scale, std::abs(want[j]));
  }
  return err / scale;
}

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

PerturbedHamiltonian heuristic_random(int n, std::uint64_t seed, QuboProblem* out = nullptr) {
  QuboProblem p = generate_random_qubo(n, seed);
  double gamma = gamma_heuristic_generic(p);
  if (out) *out = p;
  return build_hamiltonian(p, gamma, 0.07 * gamma);
}

// 1. CG == dense LU == spectral formula, 1e-8 relative, < 60 s.
Criterion criterion_oracle_triangle(int threads) {
  const auto start = std::chrono::steady_clock::now();
  const int instances = 50;
  std::vector<double> errors(instances, 1.0);
  parallel_for(instances, threads, [&](std::size_t i) {
    int n = 4 + static_cast<int>(i % 7);
    PerturbedHamiltonian h = heuristic_random(n, 1000 + i);
    LandscapeVector cg = solve_landscape(h);
    if (!cg.converged) return;
    LandscapeVector spectral = spectral_landscape(h);
    std::vector<double> dense = test::dense_landscape_solve(h);
    errors[i] = std::max({rel_inf_error(cg.u, dense), rel_inf_error(cg.u, spectral.u),
                          rel_inf_error(spectral.u, dense)});
  });
  double worst = *std::max_element(errors.begin(), errors.end());
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = worst < 1e-8 && elapsed < 60.0;
  return {1, pass, false,
          fmt("oracle triangle: max pairwise rel err %.2e (50 instances, %.1f s < 60 s)", worst,
              elapsed)};
}

// 2. Diagonal closed form to 1e-12 on 20 instances.
Criterion criterion_diagonal() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    int n = 4 + static_cast<int>(i % 7);
    QuboProblem p = generate_random_qubo(n, 2000 + i);
    auto diag = ising_diagonal(p);
    double gamma = gamma_heuristic_generic(p);
    auto u = solve_landscape_diagonal(diag, gamma);
    for (std::size_t j = 0; j < u.size(); ++j) {
      double expect = 1.0 / (diag[j] + gamma);
      worst = std::max(worst, std::abs(u[j] - expect) / std::abs(expect));
    }
  }
  return {2, worst <= 1e-12,
          false, fmt("diagonal closed form: max rel err %.2e <= 1e-12 (20 instances)", worst)};
}

// 3. Eigenstate bound, k = 4 lowest, zero violations beyond 1e-9 slack.
Criterion criterion_bound_suite(int threads) {
  const int instances = 50;
  std::vector<double> violations(instances, 0.0);
  std::vector<int> valid(instances, 0);
  parallel_for(instances, threads, [&](std::size_t i) {
    int n = 4 + static_cast<int>(i % 7);
    PerturbedHamiltonian h = heuristic_random(n, 3000 + i);
    if (!validity_check(h, false).valid) return;
    valid[i] = 1;
    LandscapeVector lv = solve_landscape(h);
    BoundReport report = verify_bound(h, lv, 4);
    violations[i] = report.max_violation;
  });
  int valid_count = 0;
  double worst = 0.0;
  for (int i = 0; i < instances; ++i) {
    valid_count += valid[i];
    worst = std::max(worst, violations[i]);
  }
  bool pass = valid_count == instances && worst == 0.0;
  return {3, pass, false,
          fmt("bound suite: %d/50 valid instances, max violation %.2e beyond 1e-9 slack",
              valid_count, worst)};
}

// 4. M-matrix property: diag-nonneg + PSD implies entrywise-nonnegative inverse.
Criterion criterion_m_matrix(int threads) {
  const int instances = 50;
  std::vector<int> status(instances, -1);  // -1 skipped, 0 fail, 1 pass
  parallel_for(instances, threads, [&](std::size_t i) {
    int n = 4 + static_cast<int>(i % 7);
    PerturbedHamiltonian h = heuristic_random(n, 4000 + i);
    ValidityReport basic = validity_check(h, false);
    if (!(basic.diag_nonnegative && basic.positive_semidefinite)) return;
    ValidityReport full = validity_check(h, true);
    status[i] = *full.inverse_entrywise_nonnegative ? 1 : 0;
  });
  int checked = 0, failed = 0;
  for (int s : status) {
    if (s >= 0) ++checked;
    if (s == 0) ++failed;
  }
  return {4, failed == 0 && checked == instances, false,
          fmt("M-matrix property: %d/50 diag+PSD instances, %d inverse failures", checked,
              failed)};
}

// 5. Parameter-shift vs finite differences over 50 points; prep accounting.
Criterion criterion_gradient(int threads) {
  const int points = 50;
  std::vector<double> errors(points, 0.0);
  std::vector<int> prep_ok(points, 1);
  parallel_for(points, threads, [&](std::size_t i) {
    int n = 2 + static_cast<int>(i % 7);  // up to n = 8
    QuboProblem p = generate_random_qubo(n, 5000 + i);
    double gamma = gamma_heuristic_generic(p);
    PerturbedHamiltonian h = build_hamiltonian(p, gamma, 0.07 * gamma);
    Rng rng(mix_seed(42, i));
    AnsatzParams params{n, 4, {}};
    params.theta.resize(static_cast<std::size_t>(4 * n));
    for (double& t : params.theta) t = rng.uniform(0.0, 2.0 * std::numbers::pi);

    PrepStats stats;
    std::vector<double> shift = gradient_fv(params, h, &stats);
    prep_ok[i] = stats.state_preparations == 2 * (4 * n) + 1 ? 1 : 0;
    std::vector<double> fd = test::fd_gradient_fv(params, h);
    double scale = 0.0;
    for (double g : fd) scale = std::max(scale, std::abs(g));
    if (scale < 1e-12) return;
    double err = 0.0;
    for (std::size_t k = 0; k < fd.size(); ++k) err = std::max(err, std::abs(shift[k] - fd[k]));
    errors[i] = err / scale;
  });
  double worst = *std::max_element(errors.begin(), errors.end());
  bool preps = std::all_of(prep_ok.begin(), prep_ok.end(), [](int v) { return v == 1; });
  bool pass = worst < 1e-5 && preps;
  return {5, pass, false,
          fmt("gradient check: max rel err %.2e < 1e-5 (50 points); preparations 2LN+1 %s",
              worst, preps ? "exact" : "WRONG")};
}

// 6. Zero-angle ansatz == |+> to 1e-12; CNOT count 4(n-1) = 36 at n = 10.
Criterion criterion_ansatz_identity() {
  AnsatzParams params{10, 4, std::vector<double>(40, 0.0)};
  PrepStats stats;
  RealState state = prepare_ansatz(params, &stats);
  const double amp = std::pow(2.0, -5.0);
  double worst = 0.0;
  for (double a : state.amps) worst = std::max(worst, std::abs(a - amp));
  bool pass = worst <= 1e-12 && stats.cnot_count == 36 && ansatz_cnot_count(4, 10) == 36;
  return {6, pass, false,
          fmt("ansatz identity: max |amp - 2^-5| = %.2e <= 1e-12; CNOTs per prep = %ld (36)",
              worst, stats.cnot_count)};
}

// 7. QAOA state vs dense-unitary oracle at 20 points; CNOT formula 30/90.
Criterion criterion_qaoa_oracle(int threads) {
  const int points = 20;
  std::vector<double> errors(points, 0.0);
  parallel_for(points, threads, [&](std::size_t i) {
    int n = 2 + static_cast<int>(i % 7);  // up to n = 8
    QuboProblem p = generate_random_qubo(n, 6000 + i);
    auto diag = ising_diagonal(p);
    Rng rng(mix_seed(43, i));
    QaoaParams params{{rng.uniform(0.0, 2.0 * std::numbers::pi)},
                      {rng.uniform(0.0, std::numbers::pi)}};
    ComplexState state = qaoa_state(params, diag);
    auto expect = test::dense_qaoa_state(params.gamma, params.beta, diag);
    double err = 0.0;
    for (std::size_t j = 0; j < expect.size(); ++j) {
      err = std::max(err, std::abs(state.amps[j] - expect[j]));
    }
    errors[i] = err;
  });
  double worst = *std::max_element(errors.begin(), errors.end());
  long maxcut_count = qaoa_cnot_count(generate_maxcut_3regular(10, 1), 1);
  long dense_count = qaoa_cnot_count(generate_random_qubo(10, 1), 1);
  bool pass = worst <= 1e-10 && maxcut_count == 30 && dense_count == 90;
  return {7, pass, false,
          fmt("QAOA oracle: max amplitude err %.2e <= 1e-10 (20 points); CNOTs %ld/%ld (30/90)",
              worst, maxcut_count, dense_count)};
}

// 8. Exact-|u> <H_Ising> <= refined p=1 QAOA on >= 80% of 100 instances per kind.
Criterion criterion_comparative(int threads) {
  const auto start = std::chrono::steady_clock::now();
  const int instances = 100;
  std::string detail;
  bool pass = true;
  for (ProblemKind kind : {ProblemKind::RandomDense, ProblemKind::MaxCut3Regular}) {
    std::vector<int> wins(instances, -1);
    parallel_for(instances, threads, [&](std::size_t i) {
      QuboProblem p = kind == ProblemKind::MaxCut3Regular
                          ? generate_maxcut_3regular(10, 7000 + i)
                          : generate_random_qubo(10, 7000 + i);
      double gamma = kind == ProblemKind::MaxCut3Regular ? gamma_heuristic_maxcut(10)
                                                         : gamma_heuristic_generic(p);
      double lambda = (kind == ProblemKind::MaxCut3Regular ? 0.03 : 0.07) * gamma;
      PerturbedHamiltonian h = build_hamiltonian(p, gamma, lambda);
      LandscapeVector lv = solve_landscape(h);
      if (!lv.converged) return;
      auto dist = sampling_distribution(std::span<const double>(lv.u),
                                        DistributionSource::ExactLandscape);
      double u_value = expectation_ising(h.ising_diag, dist);
      GridSearchResult qaoa = grid_search(h.ising_diag);
      wins[i] = u_value <= qaoa.refined_value ? 1 : 0;
    });
    int solved = 0, won = 0;
    for (int w : wins) {
      if (w >= 0) ++solved;
      if (w == 1) ++won;
    }
    double fraction = static_cast<double>(won) / instances;
    pass = pass && solved == instances && fraction >= 0.80;
    detail += fmt("%s %.0f%% (%d/%d) ", kind == ProblemKind::MaxCut3Regular ? "maxcut" : "random",
                  100.0 * fraction, won, instances);
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  pass = pass && elapsed < 1800.0;
  return {8, pass, false,
          fmt("comparative claim: exact-u <= QAOA on %s(>= 80%% each, %.0f s < 1800 s)",
              detail.c_str(), elapsed)};
}

// 9. Small-lambda valid regime: argmax == optimizer >= 90%; P(x*) > 2^-n on 100%.
Criterion criterion_sampling(int threads) {
  const int instances = 100;
  std::vector<int> match(instances, 0), above(instances, 0), usable(instances, 0);
  parallel_for(instances, threads, [&](std::size_t i) {
    QuboProblem p = generate_random_qubo(10, 8000 + i);
    SolutionRecord record = brute_force_solve(p);
    double gamma = 1.1 * -record.optimal_cost;  // offset tuned toward -E*
    PerturbedHamiltonian h = build_hamiltonian(p, gamma, 0.1);
    if (!validity_check(h, false).valid) return;
    LandscapeVector lv = solve_landscape(h);
    if (!lv.converged) return;
    usable[i] = 1;
    auto dist = sampling_distribution(std::span<const double>(lv.u),
                                      DistributionSource::ExactLandscape);
    double p_xstar = 0.0;
    for (const auto& x : record.optimizers) p_xstar += dist.probs[x.index];
    above[i] = p_xstar > std::pow(2.0, -10) ? 1 : 0;
    const std::uint32_t peak = argmax_index(dist);
    for (const auto& x : record.optimizers) {
      if (peak == x.index) match[i] = 1;
    }
  });
  int usable_count = 0, matches = 0, above_count = 0;
  for (int i = 0; i < instances; ++i) {
    usable_count += usable[i];
    matches += match[i];
    above_count += above[i];
  }
  bool pass = usable_count == instances && matches >= 90 && above_count == instances;
  return {9, pass, false,
          fmt("sampling claim: argmax==x* on %d/100 (>= 90), P(x*) > 2^-10 on %d/100 (== 100)",
              matches, above_count)};
}

// 10. MaxCut heuristic advantage: Gamma = 3n/2+1 beats 1.1*sum|A| at every n.
Criterion criterion_maxcut_heuristic(int threads) {
  std::string detail;
  bool pass = true;
  for (int n : {6, 8, 10}) {
    ScalingOptions options;
    options.n_values = {n};
    options.instances = 100;
    options.seed = 90;
    options.threads = threads;
    auto structured = run_scaling_study(ProblemKind::MaxCut3Regular, options);
    options.use_generic_gamma = true;
    auto generic = run_scaling_study(ProblemKind::MaxCut3Regular, options);
    double s = structured[0].mean_p_level[0];
    double g = generic[0].mean_p_level[0];
    pass = pass && s > g && structured[0].instances == 100 && generic[0].instances == 100;
    detail += fmt("n=%d %.4f>%.4f ", n, s, g);
  }
  return {10, pass, false, fmt("maxcut heuristic advantage: mean P(x*) %s", detail.c_str())};
}

// 11. Toys within 1e-6 of exhaustive grid optima (hard); n=10 within-10%% soft.
Criterion criterion_variational(int threads) {
  // n = 1 toy, one layer, one parameter.
  PerturbedHamiltonian h1 = build_hamiltonian(make_custom_problem(1, {-1.0}), 2.0, 0.5);
  auto objective1 = [&](const std::vector<double>& theta) {
    AnsatzParams params{1, 1, theta};
    return cost_fv(params, h1);
  };
  auto oracle1 = test::grid_scan_minimize(objective1, {{0.0, 2.0 * std::numbers::pi}}, 4001, 4);
  OptimizeConfig toy_config;
  toy_config.layers = 1;
  toy_config.restarts = 4;
  toy_config.max_iters = 500;
  toy_config.seed = 11;
  toy_config.threads = threads;
  OptimizationTrace trace1 = optimize(h1, toy_config);
  double gap1 = std::abs(trace1.best_fv - oracle1.best_f);

  // n = 2 toy, one layer, two parameters plus the entangler.
  QuboProblem p2 = make_custom_problem(2, {1.0, -2.0, -2.0, 1.0});
  PerturbedHamiltonian h2 = build_hamiltonian(p2, 6.6, 0.4);
  auto objective2 = [&](const std::vector<double>& theta) {
    AnsatzParams params{2, 1, theta};
    return cost_fv(params, h2);
  };
  auto oracle2 = test::grid_scan_minimize(
      objective2, {{0.0, 2.0 * std::numbers::pi}, {0.0, 2.0 * std::numbers::pi}}, 301, 6);
  OptimizationTrace trace2 = optimize(h2, toy_config);
  double gap2 = std::abs(trace2.best_fv - oracle2.best_f);

  bool hard_pass = gap1 <= 1e-6 && gap2 <= 1e-6;

  // n = 10, paper-scale run; reported, not asserted.
  QuboProblem p10;
  {
    QuboProblem p = generate_random_qubo(10, 424242);
    p10 = p;
  }
  SolutionRecord record = brute_force_solve(p10);
  PerturbedHamiltonian h10 = build_hamiltonian(p10, 1.1 * -record.optimal_cost, 0.3);
  LandscapeVector lv = solve_landscape(h10);
  auto dist = sampling_distribution(std::span<const double>(lv.u),
                                    DistributionSource::ExactLandscape);
  double target = expectation_ising(h10.ising_diag, dist);
  OptimizeConfig full;
  full.seed = 12;
  full.threads = threads;
  OptimizationTrace trace10 = optimize(h10, full);
  int close = 0, with_stats = 0;
  for (const auto& restart : trace10.restarts) {
    double final_mean = 0.0;
    bool found = false;
    for (const auto& point : restart.points) {
      if (point.has_stats) {
        final_mean = point.mean_cq;
        found = true;
      }
    }
    if (!found) continue;
    ++with_stats;
    if (std::abs(final_mean - target) <= 0.10 * std::abs(target)) ++close;
  }
  return {11, hard_pass, false,
          fmt("variational: toy gaps %.1e/%.1e <= 1e-6; n=10 soft report: %d/%d restarts "
              "within 10%% of <u|H|u> = %.3f",
              gap1, gap2, close, with_stats, target)};
}

// 12. CLI determinism: identical invocations produce byte-identical files.
Criterion criterion_cli_determinism(const std::string& cli) {
  if (cli.empty()) {
    return {12, false, false, "CLI determinism: skipped, --cli not given"};
  }
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "landscape-qubo-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto path = [&](const std::string& name) { return (dir / name).string(); };

  auto run_cmd = [&](const std::string& args) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    return std::system(cmd.c_str());
  };
  auto slurp = [](const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  if (run_cmd("generate --kind random --n 6 --seed 5 --out " + path("p.json")) != 0) {
    return {12, false, false, "CLI determinism: generate failed"};
  }
  if (run_cmd("generate --kind maxcut --n 6 --seed 5 --out " + path("mc.json")) != 0) {
    return {12, false, false, "CLI determinism: maxcut generate failed"};
  }
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen2.json", "generate --kind random --n 6 --seed 5 --out "},
      {"sol.json", "brute-force --spectrum --problem " + path("p.json") + " --out "},
      {"u.json", "landscape --problem " + path("p.json") + " --out "},
      {"dist.csv", "landscape --format csv --problem " + path("p.json") + " --out "},
      {"sweep.csv",
       "sweep --gamma-steps 4 --lambda-steps 3 --problem " + path("p.json") + " --out "},
      {"ham.csv", "hamming --problem " + path("p.json") + " --out "},
      {"scal.csv", "scaling --kind random --n-values 4 5 --instances 5 --seed 2 --out "},
      {"tr.csv", "variational --restarts 2 --max-iters 120 --sample-interval 40 --seed 3 "
                 "--problem " + path("p.json") + " --out "},
      {"grid.csv", "qaoa --resolution 12 --problem " + path("mc.json") + " --out "},
      {"fock.json", "fock-graph --problem " + path("p.json") + " --out "},
      {"fock.dot", "fock-graph --format dot --problem " + path("p.json") + " --out "},
      {"cmp.json", "compare --restarts 2 --max-iters 150 --seed 3 --problem " + path("p.json") +
                       " --out "},
  };
  for (const auto& [file, prefix] : commands) {
    std::string first = path(file);
    std::string second = path("again-" + file);
    if (run_cmd(prefix + first) != 0 || run_cmd(prefix + second) != 0) {
      return {12, false, false, "CLI determinism: command failed: " + file};
    }
    if (slurp(first) != slurp(second)) {
      return {12, false, false, "CLI determinism: outputs differ for " + file};
    }
  }
  fs::remove_all(dir);
  return {12, true, false,
          fmt("CLI determinism: %zu command pairs byte-identical", commands.size())};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  int threads = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) cli = argv[++i];
    if (arg == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
  }
  if (threads <= 0) threads = default_thread_count();

  std::vector<Criterion> results;
  results.push_back(criterion_oracle_triangle(threads));
  results.push_back(criterion_diagonal());
  results.push_back(criterion_bound_suite(threads));
  results.push_back(criterion_m_matrix(threads));
  results.push_back(criterion_gradient(threads));
  results.push_back(criterion_ansatz_identity());
  results.push_back(criterion_qaoa_oracle(threads));
  results.push_back(criterion_comparative(threads));
  results.push_back(criterion_sampling(threads));
  results.push_back(criterion_maxcut_heuristic(threads));
  results.push_back(criterion_variational(threads));
  results.push_back(criterion_cli_determinism(cli));

  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%2d/12] %s %s\n", r.id, r.pass ? "PASS" : "FAIL", r.detail.c_str());
    if (!r.pass && !r.soft) ++failures;
  }
  std::printf("acceptance: %d/12 criteria passed in %.0f s\n",
              static_cast<int>(results.size()) - failures, now_seconds());
  return failures == 0 ? 0 : 1;
}
