#include "landscape_qubo/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "landscape_qubo/errors.hpp"

namespace lq {

NelderMeadResult nelder_mead(const ObjectiveFn& f, std::vector<double> x0,
                             const NelderMeadOptions& options, const EvalObserver& observer) {
  const int dim = static_cast<int>(x0.size());
  if (dim < 1) throw invalid_input_error("nelder_mead: empty parameter vector");

  // Gao & Han adaptive coefficients; the adaptive shrink factor 1 - 1/dim
  // degenerates to 0 at dim == 1, so small dimensions use the textbook values.
  const double d = static_cast<double>(dim);
  const double refl = 1.0;
  const double expand = dim > 2 ? 1.0 + 2.0 / d : 2.0;
  const double contract = dim > 2 ? 0.75 - 0.5 / d : 0.5;
  const double shrink = dim > 2 ? 1.0 - 1.0 / d : 0.5;

  NelderMeadResult result;
  result.best_f = std::numeric_limits<double>::infinity();
  auto eval = [&](const std::vector<double>& x) {
    double fx = f(x);
    ++result.evals;
    if (observer) observer(result.evals, x, fx);
    if (fx < result.best_f) {
      result.best_f = fx;
      result.best_x = x;
    }
    return fx;
  };

  std::vector<std::vector<double>> simplex(static_cast<std::size_t>(dim) + 1, x0);
  std::vector<double> fvals(static_cast<std::size_t>(dim) + 1);
  fvals[0] = eval(simplex[0]);
  for (int i = 0; i < dim && result.evals < options.max_evals; ++i) {
    simplex[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] +=
        options.initial_step;
    fvals[static_cast<std::size_t>(i) + 1] = eval(simplex[static_cast<std::size_t>(i) + 1]);
  }

  std::vector<std::size_t> order(simplex.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto sort_order = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });
  };

  std::vector<double> centroid(static_cast<std::size_t>(dim));
  std::vector<double> candidate(static_cast<std::size_t>(dim));
  while (result.evals < options.max_evals) {
    sort_order();
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];
    if (fvals[worst] - fvals[best] <= options.f_tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] == worst) continue;
      for (int k = 0; k < dim; ++k) {
        centroid[static_cast<std::size_t>(k)] += simplex[order[i]][static_cast<std::size_t>(k)];
      }
    }
    for (double& c : centroid) c /= d;

    auto blend = [&](double t) {
      for (int k = 0; k < dim; ++k) {
        candidate[static_cast<std::size_t>(k)] =
            centroid[static_cast<std::size_t>(k)] +
            t * (centroid[static_cast<std::size_t>(k)] -
                 simplex[worst][static_cast<std::size_t>(k)]);
      }
    };

    blend(refl);
    double f_refl = eval(candidate);
    if (f_refl < fvals[best]) {
      std::vector<double> reflected = candidate;
      blend(expand);
      double f_exp = eval(candidate);
      if (f_exp < f_refl) {
        simplex[worst] = candidate;
        fvals[worst] = f_exp;
      } else {
        simplex[worst] = reflected;
        fvals[worst] = f_refl;
      }
    } else if (f_refl < fvals[second_worst]) {
      simplex[worst] = candidate;
      fvals[worst] = f_refl;
    } else {
      bool outside = f_refl < fvals[worst];
      blend(outside ? contract * refl : -contract);
      double f_con = eval(candidate);
      if (f_con < std::min(f_refl, fvals[worst])) {
        simplex[worst] = candidate;
        fvals[worst] = f_con;
      } else {
        for (std::size_t i = 1; i < order.size(); ++i) {
          if (result.evals >= options.max_evals) break;
          auto& vertex = simplex[order[i]];
          for (int k = 0; k < dim; ++k) {
            vertex[static_cast<std::size_t>(k)] =
                simplex[best][static_cast<std::size_t>(k)] +
                shrink * (vertex[static_cast<std::size_t>(k)] -
                          simplex[best][static_cast<std::size_t>(k)]);
          }
          fvals[order[i]] = eval(vertex);
        }
      }
    }
  }

  if (result.best_x.empty()) result.best_x = std::move(x0);
  return result;
}

}  // namespace lq
