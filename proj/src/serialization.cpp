#include "landscape_qubo/serialization.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "landscape_qubo/errors.hpp"

namespace lq {

std::string format_double(double value) {
  // Shortest round-trip representation, shared by JSON and CSV writers.
  return nlohmann::json(value).dump();
}

nlohmann::json problem_to_json(const QuboProblem& problem) {
  nlohmann::json j;
  j["n"] = problem.n;
  j["kind"] = kind_name(problem.kind);
  if (problem.seed) {
    j["seed"] = *problem.seed;
  } else {
    j["seed"] = nullptr;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < problem.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < problem.n; ++k) row.push_back(problem.at(i, k));
    rows.push_back(std::move(row));
  }
  j["a"] = std::move(rows);
  if (problem.kind == ProblemKind::MaxCut3Regular) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : problem.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
  } else {
    j["edges"] = nullptr;
  }
  return j;
}

QuboProblem problem_from_json(const nlohmann::json& j) {
  QuboProblem p;
  try {
    p.n = j.at("n").get<int>();
    p.kind = kind_from_name(j.at("kind").get<std::string>());
    if (j.contains("seed") && !j.at("seed").is_null()) {
      p.seed = j.at("seed").get<std::uint64_t>();
    }
    const auto& rows = j.at("a");
    if (p.n < 1 || static_cast<int>(rows.size()) != p.n) {
      throw invalid_input_error("problem: matrix must be n rows");
    }
    p.a.resize(static_cast<std::size_t>(p.n) * p.n);
    for (int i = 0; i < p.n; ++i) {
      if (static_cast<int>(rows[i].size()) != p.n) {
        throw invalid_input_error("problem: matrix row length mismatch");
      }
      for (int k = 0; k < p.n; ++k) p.at(i, k) = rows[i][k].get<double>();
    }
    if (j.contains("edges") && !j.at("edges").is_null()) {
      for (const auto& e : j.at("edges")) {
        p.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input_error(std::string("problem JSON: ") + e.what());
  }

  for (int i = 0; i < p.n; ++i) {
    for (int k = i + 1; k < p.n; ++k) {
      if (p.at(i, k) != p.at(k, i)) {
        throw invalid_input_error("problem: matrix must be symmetric");
      }
    }
  }
  if (p.kind == ProblemKind::MaxCut3Regular) {
    if (p.n % 2 != 0) throw invalid_input_error("maxcut problem: n must be even");
    std::vector<int> degree(static_cast<std::size_t>(p.n), 0);
    for (const auto& [u, v] : p.edges) {
      if (u < 0 || v < 0 || u >= p.n || v >= p.n || u == v) {
        throw invalid_input_error("maxcut problem: edge endpoints out of range");
      }
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(v)];
    }
    for (int d : degree) {
      if (d != 3) throw invalid_input_error("maxcut problem: every vertex degree must be 3");
    }
    // The matrix is derived data; make sure it matches the edge list.
    for (int i = 0; i < p.n; ++i) {
      for (int k = 0; k < p.n; ++k) {
        double expected = 0.0;
        if (i == k) expected = -3.0;
        for (const auto& [u, v] : p.edges) {
          if ((u == i && v == k) || (u == k && v == i)) expected = 1.0;
        }
        if (p.at(i, k) != expected) {
          throw invalid_input_error("maxcut problem: matrix does not match edges");
        }
      }
    }
  } else if (p.kind == ProblemKind::RandomDense) {
    for (double v : p.a) {
      if (!(v >= -1.0 && v <= 1.0)) {
        throw invalid_input_error("random_dense problem: entries must lie in [-1, 1]");
      }
    }
  }
  return p;
}

QuboProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input_error("cannot open problem file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input_error(std::string("problem JSON parse: ") + e.what());
  }
  return problem_from_json(j);
}

void save_problem(const QuboProblem& problem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw invalid_input_error("cannot write problem file: " + path);
  out << problem_to_json(problem).dump(2) << "\n";
}

nlohmann::json solution_to_json(const SolutionRecord& record, int n) {
  nlohmann::json j;
  j["optimal_cost"] = record.optimal_cost;
  nlohmann::json optimizers = nlohmann::json::array();
  for (const auto& x : record.optimizers) {
    optimizers.push_back({{"index", x.index}, {"bits", x.to_string()}});
  }
  j["optimizers"] = std::move(optimizers);
  j["degeneracy"] = record.optimizers.size();
  j["n"] = n;
  if (record.spectrum) {
    nlohmann::json spectrum = nlohmann::json::array();
    for (const auto& [cost, mult] : *record.spectrum) spectrum.push_back({cost, mult});
    j["spectrum"] = std::move(spectrum);
  }
  return j;
}

nlohmann::json landscape_to_json(const PerturbedHamiltonian& h, const LandscapeVector& lv) {
  nlohmann::json j;
  j["n"] = h.n;
  j["gamma"] = h.gamma;
  j["lambda"] = h.lambda;
  j["u"] = lv.u;
  j["residual"] = lv.residual_norm;
  j["iterations"] = lv.iterations;
  return j;
}

void write_distribution_csv(std::ostream& out, const SamplingDistribution& dist, int n) {
  out << "index,bitstring,probability\n";
  for (std::size_t j = 0; j < dist.probs.size(); ++j) {
    Bitstring x{static_cast<std::uint32_t>(j), n};
    out << j << ',' << x.to_string() << ',' << format_double(dist.probs[j]) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const OptimizationTrace& trace) {
  out << "restart,iteration,fv,mean_cq,std_cq\n";
  for (const auto& restart : trace.restarts) {
    for (const auto& point : restart.points) {
      out << restart.restart << ',' << point.iteration << ',' << format_double(point.fv) << ',';
      if (point.has_stats) {
        out << format_double(point.mean_cq) << ',' << format_double(point.std_cq);
      } else {
        out << ',';
      }
      out << '\n';
    }
  }
}

nlohmann::json optimize_config_to_json(const OptimizeConfig& config) {
  nlohmann::json j;
  j["layers"] = config.layers;
  j["restarts"] = config.restarts;
  j["max_iters"] = config.max_iters;
  j["method"] = config.method == OptimizeMethod::NelderMead ? "nelder-mead" : "gradient";
  j["sample_interval"] = config.sample_interval;
  j["sample_count"] = config.sample_count;
  j["seed"] = config.seed;
  return j;
}

OptimizeConfig optimize_config_from_json(const nlohmann::json& j) {
  OptimizeConfig config;
  try {
    if (j.contains("layers")) config.layers = j.at("layers").get<int>();
    if (j.contains("restarts")) config.restarts = j.at("restarts").get<int>();
    if (j.contains("max_iters")) config.max_iters = j.at("max_iters").get<int>();
    if (j.contains("method")) {
      std::string method = j.at("method").get<std::string>();
      if (method == "nelder-mead") {
        config.method = OptimizeMethod::NelderMead;
      } else if (method == "gradient") {
        config.method = OptimizeMethod::Gradient;
      } else {
        throw invalid_input_error("config: method must be nelder-mead or gradient");
      }
    }
    if (j.contains("sample_interval")) {
      config.sample_interval = j.at("sample_interval").get<int>();
    }
    if (j.contains("sample_count")) config.sample_count = j.at("sample_count").get<int>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input_error(std::string("config JSON: ") + e.what());
  }
  return config;
}

void write_grid_csv(std::ostream& out, const GridSearchResult& result) {
  out << "gamma,beta,expectation\n";
  for (std::size_t gi = 0; gi < result.gamma_values.size(); ++gi) {
    for (std::size_t bi = 0; bi < result.beta_values.size(); ++bi) {
      out << format_double(result.gamma_values[gi]) << ','
          << format_double(result.beta_values[bi]) << ','
          << format_double(result.grid[gi * result.beta_values.size() + bi]) << '\n';
    }
  }
}

nlohmann::json grid_to_json(const GridSearchResult& result) {
  nlohmann::json j;
  j["resolution"] = result.resolution;
  j["gamma_values"] = result.gamma_values;
  j["beta_values"] = result.beta_values;
  j["grid"] = result.grid;
  j["best"] = {{"gamma", result.best_gamma},
               {"beta", result.best_beta},
               {"value", result.best_value}};
  j["refined"] = {{"gamma", result.refined_gamma},
                  {"beta", result.refined_beta},
                  {"value", result.refined_value}};
  nlohmann::json path = nlohmann::json::array();
  for (const auto& step : result.path) path.push_back({step[0], step[1], step[2]});
  j["path"] = std::move(path);
  return j;
}

namespace {

void write_sweep_cell(std::ostream& out, const SweepCell& cell, bool with_levels) {
  out << format_double(cell.gamma) << ',' << format_double(cell.lambda) << ','
      << (cell.valid ? 1 : 0) << ',' << (cell.cg_converged ? 1 : 0) << ',';
  if (cell.p_xstar) out << format_double(*cell.p_xstar);
  out << ',';
  if (cell.argmax_hd) out << *cell.argmax_hd;
  if (with_levels) {
    for (int level = 0; level < 3; ++level) {
      out << ',';
      if (cell.p_levels && !std::isnan((*cell.p_levels)[static_cast<std::size_t>(level)])) {
        out << format_double((*cell.p_levels)[static_cast<std::size_t>(level)]);
      }
    }
  }
  out << '\n';
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepGrid& grid, bool with_levels) {
  out << "gamma,lambda,valid,cg_converged,p_xstar,argmax_hd";
  if (with_levels) out << ",p_level0,p_level1,p_level2";
  out << '\n';
  for (const auto& cell : grid.cells) write_sweep_cell(out, cell, with_levels);
}

nlohmann::json sweep_to_json(const SweepGrid& grid) {
  nlohmann::json j;
  j["n_gamma"] = grid.n_gamma;
  j["n_lambda"] = grid.n_lambda;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& cell : grid.cells) {
    nlohmann::json c;
    c["gamma"] = cell.gamma;
    c["lambda"] = cell.lambda;
    c["valid"] = cell.valid;
    c["cg_converged"] = cell.cg_converged;
    c["p_xstar"] = cell.p_xstar ? nlohmann::json(*cell.p_xstar) : nlohmann::json(nullptr);
    c["argmax_hd"] = cell.argmax_hd ? nlohmann::json(*cell.argmax_hd) : nlohmann::json(nullptr);
    if (cell.p_levels) {
      c["p_levels"] = *cell.p_levels;
    }
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j;
}

namespace {

void write_profile_rows(std::ostream& out, const char* source, const HammingProfile& profile) {
  for (std::size_t d = 0; d < profile.by_distance.size(); ++d) {
    out << source << ',' << d << ',' << format_double(profile.by_distance[d]) << '\n';
  }
}

nlohmann::json profile_to_json(const HammingProfile& profile) {
  return nlohmann::json(profile.by_distance);
}

}  // namespace

void write_hamming_csv(std::ostream& out, const HammingComparison& cmp) {
  out << "source,distance,probability\n";
  write_profile_rows(out, "u", cmp.from_u);
  write_profile_rows(out, "ground_state", cmp.from_ground_state);
  write_profile_rows(out, "qaoa", cmp.from_qaoa);
}

nlohmann::json hamming_to_json(const HammingComparison& cmp) {
  nlohmann::json j;
  j["x_star"] = cmp.x_star.to_string();
  j["u"] = profile_to_json(cmp.from_u);
  j["ground_state"] = profile_to_json(cmp.from_ground_state);
  j["qaoa"] = profile_to_json(cmp.from_qaoa);
  j["qaoa_params"] = {{"gamma", cmp.qaoa_gamma}, {"beta", cmp.qaoa_beta}};
  return j;
}

void write_scaling_csv(std::ostream& out, const std::vector<ScalingRecord>& records) {
  out << "kind,n,instances,failures,p_level0,p_level1,p_level2,uniform\n";
  for (const auto& r : records) {
    out << kind_name(r.kind) << ',' << r.n << ',' << r.instances << ',' << r.failures;
    for (double p : r.mean_p_level) {
      out << ',';
      if (!std::isnan(p)) out << format_double(p);
    }
    out << ',' << format_double(r.uniform_baseline) << '\n';
  }
}

nlohmann::json scaling_to_json(const std::vector<ScalingRecord>& records) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["kind"] = kind_name(r.kind);
    j["n"] = r.n;
    j["instances"] = r.instances;
    j["failures"] = r.failures;
    nlohmann::json levels = nlohmann::json::array();
    for (double p : r.mean_p_level) {
      levels.push_back(std::isnan(p) ? nlohmann::json(nullptr) : nlohmann::json(p));
    }
    j["mean_p_level"] = std::move(levels);
    j["uniform"] = r.uniform_baseline;
    j["mean_gamma"] = r.gamma_used;
    list.push_back(std::move(j));
  }
  return list;
}

nlohmann::json fock_graph_to_json(const FockGraph& graph) {
  nlohmann::json j;
  j["n"] = graph.n;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : graph.nodes) {
    nodes.push_back({{"id", node.id},
                     {"bitstring", node.bitstring},
                     {"energy", node.energy},
                     {"amplitude", node.amplitude}});
  }
  j["nodes"] = std::move(nodes);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

void write_fock_graph_dot(std::ostream& out, const FockGraph& graph) {
  out << "graph fock {\n";
  for (const auto& node : graph.nodes) {
    out << "  n" << node.id << " [label=\"" << node.bitstring << "\" energy=\""
        << format_double(node.energy) << "\" amplitude=\"" << format_double(node.amplitude)
        << "\"];\n";
  }
  for (const auto& [a, b] : graph.edges) {
    out << "  n" << a << " -- n" << b << ";\n";
  }
  out << "}\n";
}

nlohmann::json comparison_to_json(const ComparisonReport& report) {
  nlohmann::json j;
  j["gamma"] = report.gamma;
  j["lambda"] = report.lambda;
  j["landscape_converged"] = report.landscape_converged;
  j["expectations"] = {{"uniform", report.uniform_expectation},
                       {"exact_u", report.exact_u_expectation},
                       {"ansatz", report.ansatz_expectation},
                       {"qaoa", report.qaoa_expectation}};
  j["qaoa_params"] = {{"gamma", report.qaoa_gamma}, {"beta", report.qaoa_beta}};
  j["best_fv"] = report.best_fv;
  j["ansatz_u_fidelity"] = report.ansatz_u_fidelity;
  nlohmann::json restarts = nlohmann::json::array();
  for (const auto& restart : report.trace.restarts) {
    nlohmann::json r;
    r["restart"] = restart.restart;
    r["final_fv"] = restart.final_fv;
    nlohmann::json points = nlohmann::json::array();
    for (const auto& point : restart.points) {
      nlohmann::json p;
      p["iteration"] = point.iteration;
      p["fv"] = point.fv;
      if (point.has_stats) {
        p["mean_cq"] = point.mean_cq;
        p["std_cq"] = point.std_cq;
      }
      points.push_back(std::move(p));
    }
    r["points"] = std::move(points);
    restarts.push_back(std::move(r));
  }
  j["trace"] = std::move(restarts);
  return j;
}

}  // namespace lq
