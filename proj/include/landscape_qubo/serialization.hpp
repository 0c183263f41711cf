#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "landscape_qubo/experiments.hpp"
#include "landscape_qubo/landscape.hpp"
#include "landscape_qubo/qaoa.hpp"
#include "landscape_qubo/qubo.hpp"
#include "landscape_qubo/varprep.hpp"

namespace lq {

// Problem JSON: {"n", "kind", "seed", "a", "edges"} — dense row-major matrix,
// both triangles; edges only for maxcut_3regular. See docs/formats.md.
nlohmann::json problem_to_json(const QuboProblem& problem);
QuboProblem problem_from_json(const nlohmann::json& j);
QuboProblem load_problem(const std::string& path);
void save_problem(const QuboProblem& problem, const std::string& path);

nlohmann::json solution_to_json(const SolutionRecord& record, int n);

// Landscape export: {"n", "gamma", "lambda", "u", "residual", "iterations"}.
nlohmann::json landscape_to_json(const PerturbedHamiltonian& h, const LandscapeVector& lv);

// CSV: index,bitstring,probability
void write_distribution_csv(std::ostream& out, const SamplingDistribution& dist, int n);

// CSV: restart,iteration,fv,mean_cq,std_cq (stats blank off-interval)
void write_trace_csv(std::ostream& out, const OptimizationTrace& trace);

nlohmann::json optimize_config_to_json(const OptimizeConfig& config);
OptimizeConfig optimize_config_from_json(const nlohmann::json& j);

// CSV: gamma,beta,expectation (row-major over the grid)
void write_grid_csv(std::ostream& out, const GridSearchResult& result);
nlohmann::json grid_to_json(const GridSearchResult& result);

// CSV: gamma,lambda,valid,cg_converged,p_xstar,argmax_hd[,p_level0..2]
void write_sweep_csv(std::ostream& out, const SweepGrid& grid, bool with_levels);
nlohmann::json sweep_to_json(const SweepGrid& grid);

// CSV: source,distance,probability
void write_hamming_csv(std::ostream& out, const HammingComparison& cmp);
nlohmann::json hamming_to_json(const HammingComparison& cmp);

// CSV: kind,n,instances,failures,p_level0,p_level1,p_level2,uniform
void write_scaling_csv(std::ostream& out, const std::vector<ScalingRecord>& records);
nlohmann::json scaling_to_json(const std::vector<ScalingRecord>& records);

nlohmann::json fock_graph_to_json(const FockGraph& graph);
void write_fock_graph_dot(std::ostream& out, const FockGraph& graph);

nlohmann::json comparison_to_json(const ComparisonReport& report);

// Doubles are printed via nlohmann's shortest-roundtrip formatting; CSV uses
// the same to keep byte-identical re-runs.
std::string format_double(double value);

}  // namespace lq
