#include "simplex_nodes/optimize.hpp"
#include "simplex_nodes/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace simplex_nodes::optimize
{

double evaluate_alpha(int dim, int order, double alpha, double h,
                      const lebesgue::SweepOptions& sweep)
{
  const NodeSet nodes = warpblend::shifted_nodes(
      dim, order, warpblend::WarpParams::tied(alpha));
  return lebesgue::lebesgue_constant(nodes, h, sweep).lambda_est;
}

OptimizationResult optimize_alpha(int dim, int order, double h, int budget,
                                  const OptimizeOptions& options)
{
  if (dim < 1 || dim > max_dim || order < 1 || order > 20)
  {
    throw Error(ErrorKind::invalid_argument,
                "optimize_alpha: need 1 <= d <= 4 and 1 <= p <= 20");
  }
  if (budget < 10)
  {
    throw Error(ErrorKind::invalid_argument,
                "optimize_alpha: budget must be at least 10, got "
                    + std::to_string(budget));
  }
  lebesgue::sample_grid(dim, h);
  const double search_h = options.search_h > 0.0 ? options.search_h : h;

  OptimizationResult result;
  result.dim = dim;
  result.order = order;
  result.h = h;
  result.search_h = search_h;

  int spent = 0;
  auto objective = [&](double alpha, double spacing)
  {
    double value;
    try
    {
      value = evaluate_alpha(dim, order, alpha, spacing, options.sweep);
    }
    catch (const Error& e)
    {
      if (e.kind() != ErrorKind::invalid_node)
        throw;
      value = std::numeric_limits<double>::infinity();
    }
    result.trace.push_back({alpha, value, spacing});
    ++spent;
    return value;
  };

  const int scan = std::min(13, budget);
  const double step = (alpha_max - alpha_min) / (scan - 1);
  double best_alpha = alpha_min;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < scan; ++k)
  {
    const double alpha = alpha_min + k * step;
    const double value = objective(alpha, search_h);
    if (value < best)
    {
      best = value;
      best_alpha = alpha;
    }
  }

  // Golden-section search on the scan bracket.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(alpha_min, best_alpha - step);
  double b = std::min(alpha_max, best_alpha + step);
  if (std::isfinite(best) && spent + 2 <= budget)
  {
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c, search_h);
    double fd = objective(d, search_h);
    while (b - a >= alpha_resolution && spent < budget)
    {
      if (fc <= fd)
      {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = objective(c, search_h);
      }
      else
      {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = objective(d, search_h);
      }
    }
  }

  double alpha_star = best_alpha;
  double lambda_star = best;
  for (const auto& entry : result.trace)
  {
    if (entry.lambda < lambda_star)
    {
      lambda_star = entry.lambda;
      alpha_star = entry.alpha;
    }
  }

  if (search_h != h)
    lambda_star = objective(alpha_star, h);

  result.alpha_star = alpha_star;
  result.lambda_star = lambda_star;
  return result;
}

} // namespace simplex_nodes::optimize
