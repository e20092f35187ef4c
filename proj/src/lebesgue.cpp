#include "simplex_nodes/lebesgue.hpp"
#include "simplex_nodes/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace simplex_nodes::lebesgue
{
namespace
{
constexpr int W = VandermondeSystem::block_width;
constexpr std::size_t chunk_points = std::size_t(W) * 256;

struct BlockMax
{
  double value = -1.0;
  std::size_t index = 0;
};

bool sorted_descending(const std::array<int, max_dim + 1>& counts, int dim)
{
  for (int k = 0; k < dim; ++k)
    if (counts[k] < counts[k + 1])
      return false;
  return true;
}

// Max of sum |l| over pts, ties to the lowest index. Blocks of W points are
// handed out to workers; their maxima are combined in block order.
BlockMax sweep(const VandermondeSystem& system,
               const std::vector<BarycentricPoint>& pts, int threads)
{
  const std::size_t n = system.size();
  const std::size_t blocks = (pts.size() + W - 1) / W;
  std::vector<BlockMax> results(blocks);

  auto run = [&](std::atomic<std::size_t>& next)
  {
    std::vector<double> work(n * W);
    double sums[W];
    for (std::size_t b = next++; b < blocks; b = next++)
    {
      const std::size_t start = b * W;
      const int count = int(std::min<std::size_t>(W, pts.size() - start));
      system.solve_block(pts.data() + start, count, work.data());
      std::fill(sums, sums + W, 0.0);
      for (std::size_t r = 0; r < n; ++r)
      {
        const double* row = work.data() + r * W;
        for (int c = 0; c < W; ++c)
          sums[c] += std::abs(row[c]);
      }
      BlockMax best;
      for (int c = 0; c < count; ++c)
      {
        if (sums[c] > best.value)
        {
          best.value = sums[c];
          best.index = start + c;
        }
      }
      results[b] = best;
    }
  };

  std::atomic<std::size_t> next{0};
  const int workers = int(std::min<std::size_t>(threads, blocks));
  if (workers <= 1)
  {
    run(next);
  }
  else
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] { run(next); });
  }

  BlockMax best;
  for (const auto& r : results)
    if (r.value > best.value)
      best = r;
  return best;
}

BarycentricPoint lattice_point(const std::array<int, max_dim + 1>& counts,
                               int dim, int n)
{
  BarycentricPoint pt;
  pt.dim = dim;
  for (int k = 0; k <= dim; ++k)
    pt.lambda[k] = double(counts[k]) / n;
  return pt;
}

// Points argmax + (h/10) m with integer m, sum m = 0, |m_k| <= 10 for the
// first d weights, kept when inside the simplex.
std::vector<BarycentricPoint> refine_points(const BarycentricPoint& centre,
                                            double h)
{
  const int dim = centre.dim;
  const double step = h / 10.0;
  constexpr int reach = 10;
  std::vector<BarycentricPoint> out;
  std::array<int, max_dim> m{};
  m.fill(-reach);
  while (true)
  {
    BarycentricPoint pt = centre;
    int total = 0;
    bool inside = true;
    for (int k = 0; k < dim; ++k)
    {
      pt.lambda[k] = centre.lambda[k] + step * m[k];
      total += m[k];
    }
    pt.lambda[dim] = centre.lambda[dim] - step * total;
    for (int k = 0; k <= dim; ++k)
    {
      if (pt.lambda[k] < -1e-12)
        inside = false;
      pt.lambda[k] = std::max(pt.lambda[k], 0.0);
    }
    if (inside)
      out.push_back(pt);

    int k = dim - 1;
    while (k >= 0 && m[k] == reach)
      m[k--] = -reach;
    if (k < 0)
      break;
    ++m[k];
  }
  return out;
}
} // namespace

//-----------------------------------------------------------------------------
int resolve_threads(int requested)
{
  if (requested > 0)
    return requested;
  if (const char* env = std::getenv("SIMPLEX_NODES_THREADS"))
  {
    const int v = std::atoi(env);
    if (v > 0)
      return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double default_spacing(int order)
{
  if (order <= 5)
    return 0.01;
  if (order <= 9)
    return 0.02;
  return 0.04;
}

SampleGrid sample_grid(int dim, double h)
{
  if (dim < 1 || dim > max_dim)
  {
    throw Error(ErrorKind::invalid_argument,
                "sample_grid: dimension must be in [1, 4], got "
                    + std::to_string(dim));
  }
  if (!(h > 0.0 && h <= 1.0))
  {
    throw Error(ErrorKind::invalid_argument,
                "sample_grid: spacing must be in (0, 1]");
  }
  const double inv = 1.0 / h;
  const double n = std::round(inv);
  if (std::abs(inv - n) > 1e-9)
  {
    throw Error(ErrorKind::invalid_argument,
                "sample_grid: 1/h must be an integer, got 1/"
                    + std::to_string(h));
  }
  return {dim, h, int(n)};
}

std::vector<BarycentricPoint> SampleGrid::points() const
{
  std::vector<BarycentricPoint> out;
  out.reserve(std::size_t(size()));
  for (LatticeWalker walk(dim, n); !walk.done(); walk.advance())
    out.push_back(lattice_point(walk.counts(), dim, n));
  return out;
}

//-----------------------------------------------------------------------------
LebesgueReport lebesgue_constant(const VandermondeSystem& system, double h,
                                 const SweepOptions& options)
{
  const auto t0 = std::chrono::steady_clock::now();
  const SampleGrid grid = sample_grid(system.dim(), h);
  const int threads = resolve_threads(options.threads);

  LebesgueReport report;
  report.dim = system.dim();
  report.order = system.order();
  report.h = h;

  std::vector<BarycentricPoint> chunk;
  chunk.reserve(chunk_points);
  double best = -1.0;
  auto flush = [&]
  {
    if (chunk.empty())
      return;
    const BlockMax m = sweep(system, chunk, threads);
    if (m.value > best)
    {
      best = m.value;
      report.argmax = chunk[m.index];
    }
    report.samples += std::int64_t(chunk.size());
    chunk.clear();
  };

  for (LatticeWalker walk(grid.dim, grid.n); !walk.done(); walk.advance())
  {
    if (options.symmetric && !sorted_descending(walk.counts(), grid.dim))
      continue;
    chunk.push_back(lattice_point(walk.counts(), grid.dim, grid.n));
    if (chunk.size() == chunk_points)
      flush();
  }
  flush();

  if (options.refine)
  {
    chunk = refine_points(report.argmax, h);
    flush();
  }

  report.lambda_est = best;
  report.elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

LebesgueReport lebesgue_constant(const NodeSet& nodes, double h,
                                 const SweepOptions& options)
{
  const auto t0 = std::chrono::steady_clock::now();
  const VandermondeSystem system(nodes);
  LebesgueReport report = lebesgue_constant(system, h, options);
  report.elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

//-----------------------------------------------------------------------------
double lebesgue_function(const VandermondeSystem& system,
                         const BarycentricPoint& pt)
{
  double sum = 0.0;
  for (double l : system.lagrange_eval(pt))
    sum += std::abs(l);
  return sum;
}

double lebesgue_function(const NodeSet& nodes, const BarycentricPoint& pt)
{
  return lebesgue_function(VandermondeSystem(nodes), pt);
}

double lebesgue_function(const NodeSet& nodes, const Point& r)
{
  return lebesgue_function(
      nodes, cart_to_bary(reference_simplex(nodes.dim), r));
}

} // namespace simplex_nodes::lebesgue
