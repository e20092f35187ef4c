#pragma once

#include "simplex_nodes/geometry.hpp"
#include "simplex_nodes/nodal.hpp"
#include "simplex_nodes/warpblend.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace simplex_nodes::lebesgue
{

/// Uniform barycentric lattice of step h = 1/n over the closed simplex.
/// The points are generated lazily; points() materialises them.
struct SampleGrid
{
  int dim = 0;
  double h = 0.0;
  int n = 0;

  std::int64_t size() const { return node_count(dim, n); }
  std::vector<BarycentricPoint> points() const;
};

/// Throws ErrorKind::invalid_argument unless 1/h is an integer within 1e-9.
SampleGrid sample_grid(int dim, double h);

/// Grid spacing used for a given order: 0.01 up to p = 5, 0.02 up to p = 9,
/// 0.04 beyond.
double default_spacing(int order);

struct SweepOptions
{
  /// Worker threads; 0 reads SIMPLEX_NODES_THREADS, falling back to the
  /// hardware concurrency.
  int threads = 0;
  /// Visit only points with non-increasing weights. Exact for node sets
  /// that are invariant under permutation of the barycentric weights, and
  /// about (d+1)! times cheaper.
  bool symmetric = false;
  /// Re-sample at h/10 around the maximiser.
  bool refine = false;
};

struct LebesgueReport
{
  int dim = 0;
  int order = 0;
  std::optional<warpblend::WarpParams> params; // set when the nodes were warped
  double h = 0.0;
  double lambda_est = 0.0;
  BarycentricPoint argmax;
  std::int64_t samples = 0;
  double elapsed = 0.0; // seconds
};

/// max over the sample grid of sum_i |l_i|. Ties go to the first grid point
/// in walk order, so the report does not depend on the thread count.
LebesgueReport lebesgue_constant(const NodeSet& nodes, double h,
                                 const SweepOptions& options = {});
LebesgueReport lebesgue_constant(const VandermondeSystem& system, double h,
                                 const SweepOptions& options = {});

/// sum_i |l_i(pt)|.
double lebesgue_function(const VandermondeSystem& system,
                         const BarycentricPoint& pt);
double lebesgue_function(const NodeSet& nodes, const BarycentricPoint& pt);
double lebesgue_function(const NodeSet& nodes, const Point& r);

/// Worker count after applying the SIMPLEX_NODES_THREADS fallback.
int resolve_threads(int requested);

} // namespace simplex_nodes::lebesgue
