#pragma once

#include <functional>
#include <vector>

namespace lq {

struct NelderMeadOptions {
  int max_evals = 1000;
  double f_tol = 1e-12;       // stop when the simplex value spread falls below
  double initial_step = 0.5;  // per-coordinate offset for the initial simplex
};

struct NelderMeadResult {
  std::vector<double> best_x;
  double best_f = 0.0;
  int evals = 0;
};

using ObjectiveFn = std::function<double(const std::vector<double>&)>;
// Called once per objective evaluation, in evaluation order (1-based index).
using EvalObserver = std::function<void(int eval_index, const std::vector<double>& x, double f)>;

// Downhill simplex with Gao-Han adaptive coefficients for dim > 2 (standard
// coefficients otherwise, where the adaptive shrink factor degenerates).
NelderMeadResult nelder_mead(const ObjectiveFn& f, std::vector<double> x0,
                             const NelderMeadOptions& options,
                             const EvalObserver& observer = {});

}  // namespace lq
