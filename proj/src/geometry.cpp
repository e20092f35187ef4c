#include "simplex_nodes/geometry.hpp"
#include "simplex_nodes/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace simplex_nodes
{
namespace
{
void check_dim(int dim)
{
  if (dim < 1 || dim > max_dim)
  {
    throw Error(ErrorKind::invalid_argument,
                "dimension must be in [1, 4], got " + std::to_string(dim));
  }
}

Point make_point(std::initializer_list<double> xs)
{
  Point p;
  p.dim = int(xs.size());
  std::copy(xs.begin(), xs.end(), p.x.begin());
  return p;
}

ReferenceSimplex build_simplex(int dim)
{
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  const double s10 = std::sqrt(10.0);

  ReferenceSimplex s;
  s.dim = dim;
  switch (dim)
  {
  case 1:
    s.vertices[0] = make_point({-1.0});
    s.vertices[1] = make_point({1.0});
    s.vertex_of_lambda = {1, 0};
    break;
  case 2:
    s.vertices[0] = make_point({-1.0, -1.0 / s3});
    s.vertices[1] = make_point({1.0, -1.0 / s3});
    s.vertices[2] = make_point({0.0, 2.0 / s3});
    s.vertex_of_lambda = {2, 0, 1};
    break;
  case 3:
    s.vertices[0] = make_point({-1.0, -1.0 / s3, -1.0 / s6});
    s.vertices[1] = make_point({1.0, -1.0 / s3, -1.0 / s6});
    s.vertices[2] = make_point({0.0, 2.0 / s3, -1.0 / s6});
    s.vertices[3] = make_point({0.0, 0.0, 3.0 / s6});
    s.vertex_of_lambda = {3, 2, 0, 1};
    break;
  case 4:
    s.vertices[0] = make_point({-1.0, -1.0 / s3, -1.0 / s6, -1.0 / s10});
    s.vertices[1] = make_point({1.0, -1.0 / s3, -1.0 / s6, -1.0 / s10});
    s.vertices[2] = make_point({0.0, 2.0 / s3, -1.0 / s6, -1.0 / s10});
    s.vertices[3] = make_point({0.0, 0.0, 3.0 / s6, -1.0 / s10});
    s.vertices[4] = make_point({0.0, 0.0, 0.0, 4.0 / s10});
    s.vertex_of_lambda = {4, 3, 2, 0, 1};
    break;
  default:
    check_dim(dim);
  }

  const int n = dim + 1;
  Eigen::MatrixXd m(n, n);
  for (int k = 0; k < n; ++k)
  {
    const Point& v = s.vertices[s.vertex_of_lambda[k]];
    for (int c = 0; c < dim; ++c)
      m(c, k) = v.x[c];
    m(dim, k) = 1.0;
  }
  const Eigen::MatrixXd inv = m.inverse();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.inverse[i * n + j] = inv(i, j);
  return s;
}

// Free (looped) and dependent barycentric weights of the equidistant lattice.
struct LatticeLayout
{
  std::array<int, max_dim> free;
  int dependent;
};

LatticeLayout lattice_layout(int dim)
{
  switch (dim)
  {
  case 1:
    return {{0}, 1};
  case 2:
    return {{0, 2}, 1};
  case 3:
    return {{0, 1, 3}, 2};
  default:
    return {{0, 1, 2, 4}, 3};
  }
}

double max_norm(const BarycentricPoint& a, const BarycentricPoint& b)
{
  double d = 0.0;
  for (int k = 0; k <= a.dim; ++k)
    d = std::max(d, std::abs(a.lambda[k] - b.lambda[k]));
  return d;
}

// Sorted-by-lambda^1 lookup structure for nearest-point queries.
class NearestFinder
{
public:
  explicit NearestFinder(std::span<const BarycentricPoint> pts) : _pts(pts)
  {
    _order.resize(pts.size());
    std::iota(_order.begin(), _order.end(), std::size_t(0));
    std::sort(_order.begin(), _order.end(), [&](std::size_t a, std::size_t b)
              { return pts[a].lambda[0] < pts[b].lambda[0]; });
    _keys.reserve(pts.size());
    for (std::size_t i : _order)
      _keys.push_back(pts[i].lambda[0]);
  }

  double nearest(const BarycentricPoint& q) const
  {
    double best = std::numeric_limits<double>::infinity();
    const auto start = std::lower_bound(_keys.begin(), _keys.end(), q.lambda[0])
                       - _keys.begin();
    for (std::ptrdiff_t i = start; i < std::ptrdiff_t(_keys.size()); ++i)
    {
      if (_keys[i] - q.lambda[0] > best)
        break;
      best = std::min(best, max_norm(q, _pts[_order[i]]));
    }
    for (std::ptrdiff_t i = start - 1; i >= 0; --i)
    {
      if (q.lambda[0] - _keys[i] > best)
        break;
      best = std::min(best, max_norm(q, _pts[_order[i]]));
    }
    return best;
  }

private:
  std::span<const BarycentricPoint> _pts;
  std::vector<std::size_t> _order;
  std::vector<double> _keys;
};

double one_sided_distance(std::span<const BarycentricPoint> from,
                          const NearestFinder& to)
{
  double d = 0.0;
  for (const auto& q : from)
    d = std::max(d, to.nearest(q));
  return d;
}
} // namespace

//-----------------------------------------------------------------------------
const ReferenceSimplex& reference_simplex(int dim)
{
  check_dim(dim);
  static const std::array<ReferenceSimplex, max_dim> simplices
      = {build_simplex(1), build_simplex(2), build_simplex(3), build_simplex(4)};
  return simplices[dim - 1];
}
//-----------------------------------------------------------------------------
std::int64_t node_count(int dim, int order)
{
  check_dim(dim);
  if (order < 0)
  {
    throw Error(ErrorKind::invalid_argument,
                "order must be non-negative, got " + std::to_string(order));
  }
  // Product of consecutive integers divided incrementally stays exact.
  std::int64_t n = 1;
  for (int k = 1; k <= dim; ++k)
    n = n * (order + k) / k;
  return n;
}
//-----------------------------------------------------------------------------
Point bary_to_cart(const ReferenceSimplex& simplex, const BarycentricPoint& pt)
{
  if (pt.dim != simplex.dim)
  {
    throw Error(ErrorKind::invalid_argument,
                "bary_to_cart: dimension mismatch (" + std::to_string(pt.dim)
                    + " vs " + std::to_string(simplex.dim) + ")");
  }
  Point r;
  r.dim = simplex.dim;
  for (int k = 0; k <= simplex.dim; ++k)
  {
    const Point& v = simplex.vertices[simplex.vertex_of_lambda[k]];
    for (int c = 0; c < simplex.dim; ++c)
      r.x[c] += pt.lambda[k] * v.x[c];
  }
  return r;
}
//-----------------------------------------------------------------------------
BarycentricPoint cart_to_bary_unchecked(const ReferenceSimplex& simplex,
                                        const Point& r)
{
  if (r.dim != simplex.dim)
  {
    throw Error(ErrorKind::invalid_argument,
                "cart_to_bary: dimension mismatch (" + std::to_string(r.dim)
                    + " vs " + std::to_string(simplex.dim) + ")");
  }
  const int n = simplex.dim + 1;
  BarycentricPoint b;
  b.dim = simplex.dim;
  for (int i = 0; i < n; ++i)
  {
    double v = simplex.inverse[i * n + simplex.dim];
    for (int c = 0; c < simplex.dim; ++c)
      v += simplex.inverse[i * n + c] * r.x[c];
    b.lambda[i] = v;
  }
  return b;
}
//-----------------------------------------------------------------------------
BarycentricPoint cart_to_bary(const ReferenceSimplex& simplex, const Point& r,
                              double tol)
{
  BarycentricPoint b = cart_to_bary_unchecked(simplex, r);
  for (int k = 0; k <= b.dim; ++k)
  {
    if (b.lambda[k] < -tol)
    {
      throw Error(ErrorKind::outside_simplex,
                  "cart_to_bary: point outside simplex (lambda"
                      + std::to_string(k + 1) + " = "
                      + std::to_string(b.lambda[k]) + ")");
    }
  }
  return b;
}
//-----------------------------------------------------------------------------
Point to_collapsed_domain(const BarycentricPoint& pt)
{
  const ReferenceSimplex& s = reference_simplex(pt.dim);
  Point r;
  r.dim = pt.dim;
  r.x.fill(-1.0);
  for (int k = 0; k <= pt.dim; ++k)
  {
    const int v = s.vertex_of_lambda[k];
    if (v > 0)
      r.x[v - 1] += 2.0 * pt.lambda[k];
  }
  for (int c = pt.dim; c < max_dim; ++c)
    r.x[c] = 0.0;
  return r;
}
//-----------------------------------------------------------------------------
LatticeWalker::LatticeWalker(int dim, int n) : _dim(dim), _n(n)
{
  check_dim(dim);
  if (n < 0)
    throw Error(ErrorKind::invalid_argument, "lattice size must be >= 0");
  const LatticeLayout layout = lattice_layout(dim);
  _free = layout.free;
  _dependent = layout.dependent;
  _counts.fill(0);
  _counts[_dependent] = n;
}

void LatticeWalker::advance()
{
  // Odometer over the free weights, innermost (last) fastest.
  int sum = _n - _counts[_dependent];
  for (int f = _dim - 1; f >= 0; --f)
  {
    int& c = _counts[_free[f]];
    if (sum < _n)
    {
      ++c;
      _counts[_dependent] = _n - sum - 1;
      return;
    }
    sum -= c;
    c = 0;
  }
  _done = true;
}
//-----------------------------------------------------------------------------
NodeSet equidistant_nodes(int dim, int order)
{
  check_dim(dim);
  if (order < 1 || order > 20)
  {
    throw Error(ErrorKind::invalid_argument,
                "equidistant_nodes: order must be in [1, 20], got "
                    + std::to_string(order));
  }
  std::vector<BarycentricPoint> bary;
  bary.reserve(node_count(dim, order));
  for (LatticeWalker w(dim, order); !w.done(); w.advance())
  {
    BarycentricPoint b;
    b.dim = dim;
    for (int k = 0; k <= dim; ++k)
      b.lambda[k] = double(w.counts()[k]) / order;
    bary.push_back(b);
  }
  return make_node_set(dim, order, std::move(bary), NodeOrdering::lattice);
}
//-----------------------------------------------------------------------------
NodeSet make_node_set(int dim, int order, std::vector<BarycentricPoint> bary,
                      NodeOrdering ordering)
{
  const ReferenceSimplex& s = reference_simplex(dim);
  NodeSet nodes;
  nodes.dim = dim;
  nodes.order = order;
  nodes.ordering = ordering;
  nodes.cart.reserve(bary.size());
  for (const auto& b : bary)
    nodes.cart.push_back(bary_to_cart(s, b));
  nodes.bary = std::move(bary);
  return nodes;
}
//-----------------------------------------------------------------------------
double set_distance(std::span<const BarycentricPoint> lhs,
                    std::span<const BarycentricPoint> rhs)
{
  if (lhs.size() != rhs.size())
    return std::numeric_limits<double>::infinity();
  if (lhs.empty())
    return 0.0;
  const NearestFinder to_rhs(rhs);
  const NearestFinder to_lhs(lhs);
  return std::max(one_sided_distance(lhs, to_rhs),
                  one_sided_distance(rhs, to_lhs));
}
//-----------------------------------------------------------------------------
double permutation_defect(const NodeSet& nodes)
{
  const int n = nodes.dim + 1;
  std::array<int, max_dim + 1> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  const NearestFinder finder(nodes.bary);
  std::vector<BarycentricPoint> permuted(nodes.bary.size());
  double defect = 0.0;
  while (std::next_permutation(perm.begin(), perm.begin() + n))
  {
    for (std::size_t i = 0; i < nodes.bary.size(); ++i)
    {
      permuted[i].dim = nodes.dim;
      for (int k = 0; k < n; ++k)
        permuted[i].lambda[k] = nodes.bary[i].lambda[perm[k]];
    }
    defect = std::max(defect, one_sided_distance(permuted, finder));
  }
  return defect;
}

} // namespace simplex_nodes
