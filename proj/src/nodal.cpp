#include "simplex_nodes/nodal.hpp"
#include "simplex_nodes/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace simplex_nodes
{
namespace
{
constexpr int W = VandermondeSystem::block_width;

void check_distinct(const NodeSet& nodes)
{
  for (std::size_t a = 0; a < nodes.cart.size(); ++a)
  {
    for (std::size_t b = a + 1; b < nodes.cart.size(); ++b)
    {
      double d2 = 0.0;
      for (int c = 0; c < nodes.dim; ++c)
      {
        const double d = nodes.cart[a].x[c] - nodes.cart[b].x[c];
        d2 += d * d;
      }
      if (std::sqrt(d2) <= 1e-12)
      {
        throw Error(ErrorKind::singular_matrix,
                    "Vandermonde: nodes " + std::to_string(a) + " and "
                        + std::to_string(b) + " coincide");
      }
    }
  }
}

void check_inside(const BarycentricPoint& pt, int dim)
{
  if (pt.dim != dim)
  {
    throw Error(ErrorKind::invalid_argument,
                "lagrange_eval: point dimension " + std::to_string(pt.dim)
                    + " does not match system dimension "
                    + std::to_string(dim));
  }
  for (int k = 0; k <= dim; ++k)
  {
    if (pt.lambda[k] < -1e-9)
    {
      throw Error(ErrorKind::outside_simplex,
                  "lagrange_eval: point outside simplex");
    }
  }
}

// In-place solve of L U x = b for W right-hand sides stored row-major
// (row i holds component i of every right-hand side).
void substitute(const RowMatrix& lower, const RowMatrix& upper, double* x)
{
  const int n = int(lower.rows());
  for (int i = 0; i < n; ++i)
  {
    double acc[W];
    double* xi = x + std::size_t(i) * W;
    for (int c = 0; c < W; ++c)
      acc[c] = xi[c];
    const double* li = lower.data() + std::size_t(i) * n;
    for (int j = 0; j < i; ++j)
    {
      const double l = li[j];
      const double* xj = x + std::size_t(j) * W;
      for (int c = 0; c < W; ++c)
        acc[c] -= l * xj[c];
    }
    for (int c = 0; c < W; ++c)
      xi[c] = acc[c];
  }
  for (int i = n - 1; i >= 0; --i)
  {
    double acc[W];
    double* xi = x + std::size_t(i) * W;
    for (int c = 0; c < W; ++c)
      acc[c] = xi[c];
    const double* ui = upper.data() + std::size_t(i) * n;
    for (int j = i + 1; j < n; ++j)
    {
      const double u = ui[j];
      const double* xj = x + std::size_t(j) * W;
      for (int c = 0; c < W; ++c)
        acc[c] -= u * xj[c];
    }
    const double d = ui[i];
    for (int c = 0; c < W; ++c)
      xi[c] = acc[c] / d;
  }
}
} // namespace

//-----------------------------------------------------------------------------
VandermondeSystem::VandermondeSystem(const NodeSet& nodes)
    : _dim(nodes.dim), _order(nodes.order), _basis(nodes.dim, nodes.order)
{
  const auto n = std::int64_t(_basis.size());
  if (std::int64_t(nodes.size()) != n)
  {
    throw Error(ErrorKind::invalid_argument,
                "Vandermonde: expected " + std::to_string(n) + " nodes, got "
                    + std::to_string(nodes.size()));
  }
  check_distinct(nodes);

  RowMatrix rows(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    _basis.eval(to_collapsed_domain(nodes.bary[i]), rows.data() + i * n);
  _matrix = rows;

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(_matrix.transpose());
  const Eigen::MatrixXd& packed = lu.matrixLU();
  const double vmax = _matrix.cwiseAbs().maxCoeff();
  for (std::int64_t i = 0; i < n; ++i)
  {
    if (!(std::abs(packed(i, i)) >= 1e-13 * vmax))
    {
      throw Error(ErrorKind::singular_matrix,
                  "Vandermonde: pivot " + std::to_string(i)
                      + " below tolerance (degenerate node set)");
    }
  }

  _lower = packed.triangularView<Eigen::UnitLower>();
  _upper = packed.triangularView<Eigen::Upper>();
  _gather.resize(n);
  const auto& idx = lu.permutationP().indices();
  for (std::int64_t i = 0; i < n; ++i)
    _gather[idx(i)] = int(i);

  _log_abs_det = 0.0;
  for (std::int64_t i = 0; i < n; ++i)
    _log_abs_det += std::log(std::abs(packed(i, i)));
  _abs_det = std::exp(_log_abs_det);
  // rcond() estimates the 1-norm condition of V^T, i.e. the inf-norm one of V.
  const double rc = lu.rcond();
  _condition = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
}
//-----------------------------------------------------------------------------
double VandermondeSystem::factorization_residual() const
{
  const Eigen::MatrixXd l = _lower;
  const Eigen::MatrixXd u = _upper;
  const Eigen::MatrixXd lu = l * u;
  Eigen::MatrixXd restored(lu.rows(), lu.cols());
  for (Eigen::Index r = 0; r < lu.rows(); ++r)
    restored.row(_gather[r]) = lu.row(r);
  return (restored - _matrix.transpose()).norm() / _matrix.norm();
}
//-----------------------------------------------------------------------------
void VandermondeSystem::solve_block(const BarycentricPoint* pts, int count,
                                    double* work) const
{
  const std::size_t n = size();
  double psi[1024];
  std::vector<double> heap;
  double* col = psi;
  if (n > 1024)
  {
    heap.resize(n);
    col = heap.data();
  }
  for (int c = 0; c < W; ++c)
  {
    if (c >= count)
    {
      for (std::size_t r = 0; r < n; ++r)
        work[r * W + c] = 0.0;
      continue;
    }
    _basis.eval(to_collapsed_domain(pts[c]), col);
    for (std::size_t r = 0; r < n; ++r)
      work[r * W + c] = col[_gather[r]];
  }
  substitute(_lower, _upper, work);
}
//-----------------------------------------------------------------------------
std::vector<double>
VandermondeSystem::lagrange_eval(const BarycentricPoint& pt) const
{
  check_inside(pt, _dim);
  std::vector<double> work(size() * W);
  solve_block(&pt, 1, work.data());
  std::vector<double> out(size());
  for (std::size_t r = 0; r < size(); ++r)
    out[r] = work[r * W];
  return out;
}

std::vector<double> VandermondeSystem::lagrange_eval(const Point& r) const
{
  return lagrange_eval(cart_to_bary(reference_simplex(_dim), r));
}
//-----------------------------------------------------------------------------
RowMatrix
VandermondeSystem::lagrange_eval_batch(std::span<const BarycentricPoint> pts) const
{
  for (const auto& pt : pts)
    check_inside(pt, _dim);
  const std::size_t n = size();
  RowMatrix out(pts.size(), n);
  std::vector<double> work(n * W);
  for (std::size_t start = 0; start < pts.size(); start += W)
  {
    const int count = int(std::min<std::size_t>(W, pts.size() - start));
    solve_block(pts.data() + start, count, work.data());
    for (int c = 0; c < count; ++c)
      for (std::size_t r = 0; r < n; ++r)
        out(start + c, r) = work[r * W + c];
  }
  return out;
}

} // namespace simplex_nodes
