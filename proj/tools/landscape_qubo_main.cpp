// landscape-qubo: approximate QUBO solving by sampling the localization
// landscape of a perturbed Ising operator, with variational preparation and a
// depth-1 QAOA baseline. File formats are documented in docs/formats.md.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "landscape_qubo/errors.hpp"
#include "landscape_qubo/experiments.hpp"
#include "landscape_qubo/serialization.hpp"

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
  std::string format;  // json | csv | dot, default depends on the command
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw lq::invalid_input_error("cannot open output file: " + path);
  return out;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

std::string pick_format(const GlobalOptions& globals, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  std::string format = globals.format.empty() ? fallback : globals.format;
  for (const char* a : allowed) {
    if (format == a) return format;
  }
  throw lq::invalid_input_error("unsupported --format for this command: " + format);
}

// Fill hyperparameters from the kind heuristics when not given explicitly.
std::pair<double, double> resolve_hyperparameters(const lq::QuboProblem& problem,
                                                  std::optional<double> gamma,
                                                  std::optional<double> lambda) {
  double g = gamma ? *gamma
                   : (problem.kind == lq::ProblemKind::MaxCut3Regular
                          ? lq::gamma_heuristic_maxcut(problem.n)
                          : lq::gamma_heuristic_generic(problem));
  double l = lambda ? *lambda
                    : (problem.kind == lq::ProblemKind::MaxCut3Regular ? 0.03 : 0.07) * g;
  return {g, l};
}

int run(int argc, char** argv) {
  CLI::App app{"QUBO solving via the localization landscape of a perturbed Ising operator"};
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOptions globals;
  app.add_option("--seed", globals.seed, "Generator seed (default 0)");
  app.add_option("--threads", globals.threads,
                 "Worker threads for sweeps/grids (default 1, 0 = hardware)");
  app.add_option("--out", globals.out, "Output file path");
  app.add_option("--format", globals.format, "Output format: json, csv or dot");

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a problem instance");
  std::string gen_kind = "random";
  int gen_n = 10;
  generate->add_option("--kind", gen_kind, "random | maxcut")->required();
  generate->add_option("--n", gen_n, "Number of binary variables")->required();

  // brute-force
  auto* brute = app.add_subcommand("brute-force", "Exhaustive exact solve");
  std::string bf_problem;
  bool bf_spectrum = false;
  brute->add_option("--problem", bf_problem, "Problem JSON")->required();
  brute->add_flag("--spectrum", bf_spectrum, "Include the grouped (cost, multiplicity) spectrum");

  // landscape
  auto* landscape = app.add_subcommand("landscape", "Solve H u = 1 by conjugate gradient");
  std::string ls_problem;
  std::optional<double> ls_gamma, ls_lambda;
  double ls_tol = 1e-10;
  long ls_max_iter = -1;
  bool ls_jacobi = false;
  landscape->add_option("--problem", ls_problem, "Problem JSON")->required();
  landscape->add_option("--gamma", ls_gamma, "Diagonal offset (default: kind heuristic)");
  landscape->add_option("--lambda", ls_lambda, "Transverse coupling (default: 0.07/0.03 gamma)");
  landscape->add_option("--tol", ls_tol, "Relative residual tolerance (default 1e-10)");
  landscape->add_option("--max-iter", ls_max_iter, "Iteration cap (default 10*2^n)");
  landscape->add_flag("--jacobi", ls_jacobi, "Diagonal preconditioning");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Hyperparameter map of P(x*) and argmax distance");
  std::string sw_problem;
  std::optional<double> sw_gamma_min, sw_gamma_max;
  int sw_gamma_steps = 21;
  double sw_lambda_min = 0.1, sw_lambda_max = 2.0;
  int sw_lambda_steps = 20;
  double sw_tol = 1e-10;
  bool sw_levels = false;
  sweep->add_option("--problem", sw_problem, "Problem JSON")->required();
  sweep->add_option("--gamma-min", sw_gamma_min, "Default 0");
  sweep->add_option("--gamma-max", sw_gamma_max, "Default 2x the kind heuristic");
  sweep->add_option("--gamma-steps", sw_gamma_steps, "Default 21");
  sweep->add_option("--lambda-min", sw_lambda_min, "Default 0.1 (must be > 0)");
  sweep->add_option("--lambda-max", sw_lambda_max, "Default 2");
  sweep->add_option("--lambda-steps", sw_lambda_steps, "Default 20");
  sweep->add_option("--tol", sw_tol, "CG tolerance");
  sweep->add_flag("--levels", sw_levels, "Record degeneracy-summed level probabilities");

  // hamming
  auto* hamming = app.add_subcommand("hamming", "Profiles from |u>, ground state of H, QAOA");
  std::string hm_problem;
  std::optional<double> hm_gamma, hm_lambda;
  hamming->add_option("--problem", hm_problem, "Problem JSON")->required();
  hamming->add_option("--gamma", hm_gamma, "Default: kind heuristic");
  hamming->add_option("--lambda", hm_lambda, "Default: ratio heuristic");

  // scaling
  auto* scaling = app.add_subcommand("scaling", "Level-probability means across problem sizes");
  std::string sc_kind = "random";
  std::vector<int> sc_n_values;
  int sc_instances = 100;
  bool sc_generic = false;
  scaling->add_option("--kind", sc_kind, "random | maxcut")->required();
  scaling->add_option("--n-values", sc_n_values, "Problem sizes, e.g. --n-values 6 8 10")
      ->required();
  scaling->add_option("--instances", sc_instances, "Instances per size (default 100)");
  scaling->add_flag("--generic-gamma", sc_generic,
                    "Use the unstructured 1.1*sum|A| heuristic regardless of kind");

  // variational
  auto* variational = app.add_subcommand("variational", "Optimize the landscape-preparation ansatz");
  std::string vr_problem, vr_config;
  std::optional<double> vr_gamma, vr_lambda;
  lq::OptimizeConfig vr_opts;
  variational->add_option("--problem", vr_problem, "Problem JSON")->required();
  variational->add_option("--config", vr_config, "Optimizer config JSON (overrides flags)");
  variational->add_option("--gamma", vr_gamma, "Default: kind heuristic");
  variational->add_option("--lambda", vr_lambda, "Default: ratio heuristic");
  variational->add_option("--layers", vr_opts.layers, "Ansatz layers (default 4)");
  variational->add_option("--restarts", vr_opts.restarts, "Random restarts (default 10)");
  variational->add_option("--max-iters", vr_opts.max_iters, "Budget per restart (default 2000)");
  std::string vr_method = "nelder-mead";
  variational->add_option("--method", vr_method, "nelder-mead | gradient");
  variational->add_option("--sample-interval", vr_opts.sample_interval, "Default 200");
  variational->add_option("--sample-count", vr_opts.sample_count, "Default 10");

  // qaoa
  auto* qaoa = app.add_subcommand("qaoa", "Depth-1 QAOA grid search with local refinement");
  std::string qa_problem;
  lq::GridSearchOptions qa_options;
  qaoa->add_option("--problem", qa_problem, "Problem JSON")->required();
  qaoa->add_option("--resolution", qa_options.resolution, "Grid resolution (default 100)");
  qaoa->add_option("--gamma-min", qa_options.gamma_lo, "Default 0");
  qaoa->add_option("--gamma-max", qa_options.gamma_hi, "Default 2*pi");
  qaoa->add_option("--beta-min", qa_options.beta_lo, "Default 0");
  qaoa->add_option("--beta-max", qa_options.beta_hi, "Default pi");
  qaoa->add_option("--refine-evals", qa_options.refine_max_evals,
                   "Refinement budget (default 200)");

  // fock-graph
  auto* fock = app.add_subcommand("fock-graph", "Hypercube graph with energy/landscape colors");
  std::string fg_problem;
  std::optional<double> fg_gamma, fg_lambda;
  fock->add_option("--problem", fg_problem, "Problem JSON")->required();
  fock->add_option("--gamma", fg_gamma, "Default: kind heuristic");
  fock->add_option("--lambda", fg_lambda, "Default: ratio heuristic");

  // compare
  auto* compare = app.add_subcommand("compare", "Uniform / exact-u / ansatz / QAOA references");
  std::string cp_problem, cp_config;
  std::optional<double> cp_gamma, cp_lambda;
  lq::OptimizeConfig cp_opts;
  std::string cp_method = "nelder-mead";
  compare->add_option("--problem", cp_problem, "Problem JSON")->required();
  compare->add_option("--config", cp_config, "Optimizer config JSON (overrides flags)");
  compare->add_option("--gamma", cp_gamma, "Default: kind heuristic");
  compare->add_option("--lambda", cp_lambda, "Default: ratio heuristic");
  compare->add_option("--layers", cp_opts.layers, "Ansatz layers (default 4)");
  compare->add_option("--restarts", cp_opts.restarts, "Random restarts (default 10)");
  compare->add_option("--max-iters", cp_opts.max_iters, "Budget per restart (default 2000)");
  compare->add_option("--method", cp_method, "nelder-mead | gradient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (globals.out.empty()) throw lq::invalid_input_error("--out is required");

  if (*generate) {
    lq::QuboProblem problem;
    if (gen_kind == "random") {
      problem = lq::generate_random_qubo(gen_n, globals.seed);
    } else if (gen_kind == "maxcut") {
      problem = lq::generate_maxcut_3regular(gen_n, globals.seed);
    } else {
      throw lq::invalid_input_error("--kind must be random or maxcut");
    }
    lq::save_problem(problem, globals.out);
  } else if (*brute) {
    lq::QuboProblem problem = lq::load_problem(bf_problem);
    lq::SolutionRecord record = lq::brute_force_solve(problem, bf_spectrum);
    write_json(globals.out, lq::solution_to_json(record, problem.n));
  } else if (*landscape) {
    lq::QuboProblem problem = lq::load_problem(ls_problem);
    auto [gamma, lambda] = resolve_hyperparameters(problem, ls_gamma, ls_lambda);
    lq::PerturbedHamiltonian h = lq::build_hamiltonian(problem, gamma, lambda);
    lq::LandscapeVector lv = lq::solve_landscape(h, ls_tol, ls_max_iter, ls_jacobi);
    std::string format = pick_format(globals, "json", {"json", "csv"});
    if (format == "json") {
      write_json(globals.out, lq::landscape_to_json(h, lv));
    } else {
      auto dist = lq::sampling_distribution(std::span<const double>(lv.u),
                                            lq::DistributionSource::ExactLandscape);
      auto out = open_out(globals.out);
      lq::write_distribution_csv(out, dist, problem.n);
    }
    if (!lv.converged) {
      std::cerr << "landscape: CG did not reach tolerance (residual " << lv.residual_norm
                << "); partial output written\n";
      return 4;
    }
  } else if (*sweep) {
    lq::QuboProblem problem = lq::load_problem(sw_problem);
    double heuristic = problem.kind == lq::ProblemKind::MaxCut3Regular
                           ? lq::gamma_heuristic_maxcut(problem.n)
                           : lq::gamma_heuristic_generic(problem);
    double gmin = sw_gamma_min.value_or(0.0);
    double gmax = sw_gamma_max.value_or(2.0 * heuristic);
    if (sw_gamma_steps < 1 || sw_lambda_steps < 1) {
      throw lq::invalid_input_error("sweep: step counts must be >= 1");
    }
    lq::SweepConfig config;
    config.tol = sw_tol;
    config.threads = globals.threads;
    for (int i = 0; i < sw_gamma_steps; ++i) {
      config.gamma_values.push_back(
          sw_gamma_steps == 1 ? gmin : gmin + (gmax - gmin) * i / (sw_gamma_steps - 1));
    }
    for (int i = 0; i < sw_lambda_steps; ++i) {
      config.lambda_values.push_back(sw_lambda_steps == 1
                                         ? sw_lambda_min
                                         : sw_lambda_min + (sw_lambda_max - sw_lambda_min) * i /
                                                               (sw_lambda_steps - 1));
    }
    if (sw_levels) config.metrics.push_back(lq::SweepMetric::PByEnergyLevel);
    lq::SweepGrid grid = lq::run_sweep(problem, config);
    std::string format = pick_format(globals, "csv", {"json", "csv"});
    if (format == "csv") {
      auto out = open_out(globals.out);
      lq::write_sweep_csv(out, grid, sw_levels);
    } else {
      write_json(globals.out, lq::sweep_to_json(grid));
    }
  } else if (*hamming) {
    lq::QuboProblem problem = lq::load_problem(hm_problem);
    auto [gamma, lambda] = resolve_hyperparameters(problem, hm_gamma, hm_lambda);
    lq::HammingComparison cmp =
        lq::run_hamming_comparison(problem, gamma, lambda, globals.threads);
    std::string format = pick_format(globals, "csv", {"json", "csv"});
    if (format == "csv") {
      auto out = open_out(globals.out);
      lq::write_hamming_csv(out, cmp);
    } else {
      write_json(globals.out, lq::hamming_to_json(cmp));
    }
  } else if (*scaling) {
    lq::ProblemKind kind;
    if (sc_kind == "random") {
      kind = lq::ProblemKind::RandomDense;
    } else if (sc_kind == "maxcut") {
      kind = lq::ProblemKind::MaxCut3Regular;
    } else {
      throw lq::invalid_input_error("--kind must be random or maxcut");
    }
    lq::ScalingOptions options;
    options.n_values = sc_n_values;
    options.instances = sc_instances;
    options.seed = globals.seed;
    options.threads = globals.threads;
    options.use_generic_gamma = sc_generic;
    auto records = lq::run_scaling_study(kind, options);
    std::string format = pick_format(globals, "csv", {"json", "csv"});
    if (format == "csv") {
      auto out = open_out(globals.out);
      lq::write_scaling_csv(out, records);
    } else {
      write_json(globals.out, lq::scaling_to_json(records));
    }
  } else if (*variational) {
    lq::QuboProblem problem = lq::load_problem(vr_problem);
    auto [gamma, lambda] = resolve_hyperparameters(problem, vr_gamma, vr_lambda);
    lq::OptimizeConfig config = vr_opts;
    if (vr_method == "gradient") config.method = lq::OptimizeMethod::Gradient;
    if (!vr_config.empty()) {
      std::ifstream in(vr_config);
      if (!in) throw lq::invalid_input_error("cannot open config file: " + vr_config);
      nlohmann::json j;
      in >> j;
      config = lq::optimize_config_from_json(j);
    }
    if (config.seed == 0) config.seed = globals.seed;
    config.threads = globals.threads;
    lq::PerturbedHamiltonian h = lq::build_hamiltonian(problem, gamma, lambda);
    lq::OptimizationTrace trace = lq::optimize(h, config);
    std::string format = pick_format(globals, "csv", {"csv"});
    auto out = open_out(globals.out);
    lq::write_trace_csv(out, trace);
  } else if (*qaoa) {
    lq::QuboProblem problem = lq::load_problem(qa_problem);
    auto diag = lq::ising_diagonal(problem);
    qa_options.threads = globals.threads;
    lq::GridSearchResult result = lq::grid_search(diag, qa_options);
    std::string format = pick_format(globals, "csv", {"json", "csv"});
    if (format == "csv") {
      auto out = open_out(globals.out);
      lq::write_grid_csv(out, result);
    } else {
      write_json(globals.out, lq::grid_to_json(result));
    }
  } else if (*fock) {
    lq::QuboProblem problem = lq::load_problem(fg_problem);
    auto [gamma, lambda] = resolve_hyperparameters(problem, fg_gamma, fg_lambda);
    lq::FockGraph graph = lq::build_fock_graph(problem, gamma, lambda);
    std::string format = pick_format(globals, "json", {"json", "dot"});
    if (format == "json") {
      write_json(globals.out, lq::fock_graph_to_json(graph));
    } else {
      auto out = open_out(globals.out);
      lq::write_fock_graph_dot(out, graph);
    }
  } else if (*compare) {
    lq::QuboProblem problem = lq::load_problem(cp_problem);
    auto [gamma, lambda] = resolve_hyperparameters(problem, cp_gamma, cp_lambda);
    lq::OptimizeConfig config = cp_opts;
    if (cp_method == "gradient") config.method = lq::OptimizeMethod::Gradient;
    if (!cp_config.empty()) {
      std::ifstream in(cp_config);
      if (!in) throw lq::invalid_input_error("cannot open config file: " + cp_config);
      nlohmann::json j;
      in >> j;
      config = lq::optimize_config_from_json(j);
    }
    if (config.seed == 0) config.seed = globals.seed;
    config.threads = globals.threads;
    lq::ComparisonReport report = lq::run_comparison(problem, gamma, lambda, config);
    write_json(globals.out, lq::comparison_to_json(report));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lq::invalid_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lq::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lq::numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
