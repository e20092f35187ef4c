#pragma once

#include "simplex_nodes/geometry.hpp"

#include <array>
#include <span>
#include <vector>

/// Warp-and-blend node construction on the line, triangle, tetrahedron and
/// pentatope. Each level warps its facets with the construction one
/// dimension down and blends the facet warps into the interior.
namespace simplex_nodes::warpblend
{

/// Blend-shape parameters of the triangle (alpha), tetrahedron (beta) and
/// pentatope (gamma) levels.
struct WarpParams
{
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  /// alpha = beta = gamma = value.
  static WarpParams tied(double value) { return {value, value, value}; }
};

/// Tolerance below which a barycentric weight counts as zero: blend factors
/// with a numerator under it vanish, and points with such a weight lie on
/// the corresponding facet.
inline constexpr double zero_weight_tol = 1e-14;

/// w(r) = sum_i (r_i^LGL - r_i^e) l_i^e(r) on the equidistant grid of order p,
/// and its quotient by 1 - r^2 evaluated by deflating the factors (1 -+ r)
/// out of the Lagrange basis, which is exact at r = +-1.
class Warp1D
{
public:
  explicit Warp1D(int p);

  int order() const { return _p; }
  double warp(double r) const;
  double modified(double r) const;

  const std::vector<double>& equidistant() const { return _equi; }
  const std::vector<double>& lgl() const { return _lgl; }

private:
  int _p;
  std::vector<double> _equi;
  std::vector<double> _lgl;
  std::vector<double> _shift;      // r^LGL - r^e
  std::vector<double> _lagr_denom; // prod_{j != i} (x_i - x_j)
  std::vector<double> _defl_denom; // same without the endpoint factors
};

double warp_1d(int p, double r);
double warp_1d_modified(int p, double r);

/// Orthonormal tangent vectors of one facet, dimension `dim` ambient.
template <int Dim>
struct TangentFrame
{
  std::array<std::array<double, Dim>, Dim - 1> t;
};

/// Edge tangents t^1..t^3 of the triangle.
const std::array<TangentFrame<2>, 3>& triangle_frames();
/// Face tangents t^{f,1}, t^{f,2} of the tetrahedron, f = 1..4.
const std::array<TangentFrame<3>, 4>& tet_frames();
/// Facet tangents t^{f,1..3} of the pentatope, f = 1..5.
const std::array<TangentFrame<4>, 5>& pentatope_frames();

/// Facet f of the d-simplex receives the (d-1)-level warp evaluated at these
/// barycentric weights (0-based indices into lambda), in this order.
const std::array<std::array<int, 3>, 3>& triangle_edge_arguments();
const std::array<std::array<int, 3>, 4>& tet_face_arguments();
const std::array<std::array<int, 4>, 5>& pentatope_facet_arguments();

/// Evaluator for the combined warp/blend displacement g at one order.
/// Immutable and thread-safe.
class WarpBlend
{
public:
  WarpBlend(int p, const WarpParams& params);

  int order() const { return _warp.order(); }
  const WarpParams& params() const { return _params; }
  const Warp1D& warp1d() const { return _warp; }

  std::array<double, 2> triangle(std::span<const double, 3> lambda) const;
  std::array<double, 3> tet(std::span<const double, 4> lambda) const;
  std::array<double, 4> pentatope(std::span<const double, 5> lambda) const;

  /// Displacement of a point of the d-simplex, d = 1..4.
  Point displacement(const BarycentricPoint& pt) const;

private:
  Warp1D _warp;
  WarpParams _params;
};

/// Blend factor 2 l_a / (2 l_a + l_f), zero when l_a < zero_weight_tol.
double blend_factor(double lambda_a, double lambda_f);

std::array<double, 2> triangle_warp(int p, const WarpParams& params,
                                    std::span<const double, 3> lambda);
/// (g1, g2): triangle_warp in the triangle's own frame, i.e. the same pair.
std::array<double, 2> triangle_warp_components(int p, const WarpParams& params,
                                               std::span<const double, 3> lambda);
std::array<double, 3> tet_warp(int p, const WarpParams& params,
                               std::span<const double, 4> lambda);
std::array<double, 3> tet_warp_components(int p, const WarpParams& params,
                                          std::span<const double, 4> lambda);
std::array<double, 4> pentatope_warp(int p, const WarpParams& params,
                                     std::span<const double, 5> lambda);

/// Equidistant lattice moved by the warp/blend displacement. d = 1 gives the
/// LGL nodes. Weights that are zero on the lattice stay exactly zero.
/// Throws ErrorKind::invalid_node if a shifted weight drops below -1e-9.
NodeSet shifted_nodes(int dim, int p, const WarpParams& params);

} // namespace simplex_nodes::warpblend
