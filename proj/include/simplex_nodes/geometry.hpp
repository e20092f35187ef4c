#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace simplex_nodes
{

inline constexpr int max_dim = 4;

/// Point in R^d, d <= 4. Unused trailing entries are zero.
struct Point
{
  int dim = 0;
  std::array<double, max_dim> x{};

  std::span<const double> coords() const { return {x.data(), std::size_t(dim)}; }
};

/// d+1 barycentric weights lambda^1..lambda^{d+1}, stored 0-based.
struct BarycentricPoint
{
  int dim = 0;
  std::array<double, max_dim + 1> lambda{};

  std::span<const double> values() const
  {
    return {lambda.data(), std::size_t(dim + 1)};
  }
};

/// How the nodes of a NodeSet are ordered.
enum class NodeOrdering
{
  lattice,  ///< equidistant-lattice loop order, outermost index first
  external, ///< as read from a file or supplied by the caller
};

/// Ordered node set for (dim, order), in barycentric and Cartesian form.
struct NodeSet
{
  int dim = 0;
  int order = 0;
  std::vector<BarycentricPoint> bary;
  std::vector<Point> cart;
  NodeOrdering ordering = NodeOrdering::lattice;

  std::size_t size() const { return bary.size(); }
};

/// Equilateral reference simplex with edge length 2, centred at the origin.
///
/// The barycentric weight lambda^{k} multiplies vertex
/// vertices[vertex_of_lambda[k]]; the pairing is permuted differently in
/// each dimension (e.g. r = l4 v1 + l5 v2 + l3 v3 + l2 v4 + l1 v5 for d = 4)
/// and node tables depend on it.
struct ReferenceSimplex
{
  int dim = 0;
  std::array<Point, max_dim + 1> vertices{};
  std::array<int, max_dim + 1> vertex_of_lambda{};
  // Affine inverse: lambda = inverse * [r; 1], row-major (d+1)x(d+1).
  std::array<double, (max_dim + 1) * (max_dim + 1)> inverse{};
};

/// The reference simplex of dimension d (1..4). Immutable, shared.
const ReferenceSimplex& reference_simplex(int dim);

/// N_p = prod_{k=1..d}(p+k) / d!.
std::int64_t node_count(int dim, int order);

Point bary_to_cart(const ReferenceSimplex& simplex, const BarycentricPoint& pt);

/// Inverse of bary_to_cart. Throws ErrorKind::outside_simplex when any
/// weight is below -tol.
BarycentricPoint cart_to_bary(const ReferenceSimplex& simplex, const Point& r,
                              double tol = 1e-9);

/// Same map without the inside check.
BarycentricPoint cart_to_bary_unchecked(const ReferenceSimplex& simplex,
                                        const Point& r);

/// Coordinates on the right-angled reference simplex
/// {x_i >= -1, sum x_i <= 2 - d} used by the collapsed-coordinate maps.
/// Vertex v_k of the equilateral simplex maps to -1 + 2 e_{k-1} (v_1 to the
/// all -1 corner).
Point to_collapsed_domain(const BarycentricPoint& pt);

/// Visits the barycentric lattice {counts >= 0, sum counts = n} in the
/// equidistant-node loop order: the free weights (lambda1,lambda3 in 2D;
/// lambda1,lambda2,lambda4 in 3D; lambda1,lambda2,lambda3,lambda5 in 4D) are
/// nested loops with the first outermost, the remaining weight is dependent.
class LatticeWalker
{
public:
  LatticeWalker(int dim, int n);

  /// Integer weights of the current point, lambda ordering.
  const std::array<int, max_dim + 1>& counts() const { return _counts; }
  bool done() const { return _done; }
  void advance();

  int dim() const { return _dim; }
  int n() const { return _n; }

private:
  int _dim;
  int _n;
  bool _done = false;
  std::array<int, max_dim + 1> _counts{};
  std::array<int, max_dim> _free{};
  int _dependent = 0;
};

/// Equidistant lattice nodes, count node_count(dim, order).
NodeSet equidistant_nodes(int dim, int order);

/// Builds a NodeSet from barycentric points, filling Cartesian coordinates.
NodeSet make_node_set(int dim, int order, std::vector<BarycentricPoint> bary,
                      NodeOrdering ordering = NodeOrdering::external);

/// Largest distance (max-norm over barycentric weights) from a point of
/// `lhs` to its nearest point of `rhs`, and vice versa. Used for
/// order-insensitive set comparison.
double set_distance(std::span<const BarycentricPoint> lhs,
                    std::span<const BarycentricPoint> rhs);

/// Maximum set_distance between the node set and any permutation of its
/// barycentric weights.
double permutation_defect(const NodeSet& nodes);

} // namespace simplex_nodes
