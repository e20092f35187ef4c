#pragma once

#include "simplex_nodes/lebesgue.hpp"

#include <vector>

namespace simplex_nodes::optimize
{

struct TraceEntry
{
  double alpha = 0.0;
  double lambda = 0.0; // inf when the warp produced an invalid node set
  double h = 0.0;
};

struct OptimizationResult
{
  int dim = 0;
  int order = 0;
  double alpha_star = 0.0;
  double lambda_star = 0.0;
  double h = 0.0;        // spacing of lambda_star
  double search_h = 0.0; // spacing used while searching
  std::vector<TraceEntry> trace;
};

struct OptimizeOptions
{
  /// Spacing for the search; 0 searches at h. The final Lambda is always
  /// evaluated at h.
  double search_h = 0.0;
  lebesgue::SweepOptions sweep{};
};

/// Lambda of the warp/blend nodes with alpha = beta = gamma = alpha.
/// Throws ErrorKind::invalid_node if the warp leaves the simplex.
double evaluate_alpha(int dim, int order, double alpha, double h,
                      const lebesgue::SweepOptions& sweep = {});

inline constexpr double alpha_min = 0.0;
inline constexpr double alpha_max = 3.0;
inline constexpr double alpha_resolution = 1e-3;

/// Scans 13 equally spaced alpha in [0, 3], then narrows the bracket around
/// the best scan point by golden-section search until it is narrower than
/// alpha_resolution or `budget` evaluations have been spent.
OptimizationResult optimize_alpha(int dim, int order, double h, int budget = 40,
                                  const OptimizeOptions& options = {});

} // namespace simplex_nodes::optimize
