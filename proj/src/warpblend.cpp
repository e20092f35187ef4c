#include "simplex_nodes/warpblend.hpp"
#include "simplex_nodes/error.hpp"
#include "simplex_nodes/jacobi.hpp"

#include <cmath>
#include <string>

namespace simplex_nodes::warpblend
{
namespace
{
void check_order(int p)
{
  if (p < 1 || p > 20)
  {
    throw Error(ErrorKind::invalid_argument,
                "warp: order must be in [1, 20], got " + std::to_string(p));
  }
}

void check_params(const WarpParams& params)
{
  if (!(params.alpha >= 0.0 && params.beta >= 0.0 && params.gamma >= 0.0))
  {
    throw Error(ErrorKind::invalid_argument,
                "warp parameters must be non-negative");
  }
}

// Index of the first weight below zero_weight_tol, or -1.
template <std::size_t N>
int first_zero_weight(std::span<const double, N> lambda)
{
  for (std::size_t k = 0; k < N; ++k)
    if (lambda[k] < zero_weight_tol)
      return int(k);
  return -1;
}
} // namespace

//-----------------------------------------------------------------------------
Warp1D::Warp1D(int p) : _p(p)
{
  check_order(p);
  _lgl = jacobi::lgl_nodes(p).nodes;
  _equi.resize(p + 1);
  _shift.resize(p + 1);
  for (int i = 0; i <= p; ++i)
  {
    _equi[i] = -1.0 + 2.0 * i / p;
    _shift[i] = _lgl[i] - _equi[i];
  }
  _shift.front() = 0.0;
  _shift.back() = 0.0;

  _lagr_denom.assign(p + 1, 1.0);
  _defl_denom.assign(p + 1, 1.0);
  for (int i = 0; i <= p; ++i)
  {
    for (int j = 0; j <= p; ++j)
    {
      if (j == i)
        continue;
      _lagr_denom[i] *= _equi[i] - _equi[j];
      if (j != 0 && j != p)
        _defl_denom[i] *= _equi[i] - _equi[j];
    }
  }
}

double Warp1D::warp(double r) const
{
  double w = 0.0;
  for (int i = 1; i < _p; ++i)
  {
    double num = 1.0;
    for (int j = 0; j <= _p; ++j)
      if (j != i)
        num *= r - _equi[j];
    w += _shift[i] * num / _lagr_denom[i];
  }
  return w;
}

double Warp1D::modified(double r) const
{
  // l_i(r) / (1 - r^2) = -prod_{j != i,0,p} (r - x_j) / (x_j...) / ((x_i+1)(x_i-1))
  double w = 0.0;
  for (int i = 1; i < _p; ++i)
  {
    double num = 1.0;
    for (int j = 1; j < _p; ++j)
      if (j != i)
        num *= r - _equi[j];
    const double ends = (_equi[i] + 1.0) * (_equi[i] - 1.0);
    w -= _shift[i] * num / (_defl_denom[i] * ends);
  }
  return w;
}

double warp_1d(int p, double r) { return Warp1D(p).warp(r); }

double warp_1d_modified(int p, double r) { return Warp1D(p).modified(r); }

//-----------------------------------------------------------------------------
const std::array<TangentFrame<2>, 3>& triangle_frames()
{
  static const double h = std::sqrt(3.0) / 2.0;
  static const std::array<TangentFrame<2>, 3> frames = {{
      {{{{1.0, 0.0}}}},
      {{{{-0.5, h}}}},
      {{{{-0.5, -h}}}},
  }};
  return frames;
}

const std::array<TangentFrame<3>, 4>& tet_frames()
{
  static const double s2 = std::sqrt(2.0);
  static const double s3 = std::sqrt(3.0);
  static const std::array<TangentFrame<3>, 4> frames = {{
      {{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}}},
      {{{{1.0, 0.0, 0.0}, {0.0, 1.0 / 3.0, 4.0 / (3.0 * s2)}}}},
      {{{{-0.5, 3.0 / (2.0 * s3), 0.0},
         {-1.0 / (2.0 * s3), -1.0 / 6.0, 4.0 / (3.0 * s2)}}}},
      {{{{0.5, 3.0 / (2.0 * s3), 0.0},
         {1.0 / (2.0 * s3), -1.0 / 6.0, 4.0 / (3.0 * s2)}}}},
  }};
  return frames;
}

const std::array<TangentFrame<4>, 5>& pentatope_frames()
{
  static const double s2 = std::sqrt(2.0);
  static const double s3 = std::sqrt(3.0);
  static const double s6 = std::sqrt(6.0);
  static const double s15 = std::sqrt(15.0);
  static const double s18 = std::sqrt(18.0);
  static const std::array<TangentFrame<4>, 5> frames = {{
      {{{{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}}}},
      {{{{1.0, 0.0, 0.0, 0.0},
         {0.0, 1.0, 0.0, 0.0},
         {0.0, 0.0, 0.25, s15 / 4.0}}}},
      {{{{1.0, 0.0, 0.0, 0.0},
         {0.0, 1.0 / 3.0, 4.0 / (3.0 * s2), 0.0},
         {0.0, 1.0 / s18, -1.0 / 12.0, s15 / 4.0}}}},
      {{{{-0.5, 3.0 / (2.0 * s3), 0.0, 0.0},
         {-1.0 / (2.0 * s3), -1.0 / 6.0, 4.0 / (3.0 * s2), 0.0},
         {-s6 / 12.0, -s2 / 12.0, -1.0 / 12.0, s15 / 4.0}}}},
      {{{{0.5, 3.0 / (2.0 * s3), 0.0, 0.0},
         {1.0 / (2.0 * s3), -1.0 / 6.0, 4.0 / (3.0 * s2), 0.0},
         {s6 / 12.0, -s2 / 12.0, -1.0 / 12.0, s15 / 4.0}}}},
  }};
  return frames;
}

// Edge e: {opposite weight, plus, minus}; argument = lambda[plus] -
// lambda[minus], blend = 4 lambda[plus] lambda[minus].
const std::array<std::array<int, 3>, 3>& triangle_edge_arguments()
{
  static const std::array<std::array<int, 3>, 3> args = {{
      {0, 2, 1},
      {1, 0, 2},
      {2, 1, 0},
  }};
  return args;
}

// Face f (opposite lambda^{f+1}) sees the triangle at these weights.
const std::array<std::array<int, 3>, 4>& tet_face_arguments()
{
  static const std::array<std::array<int, 3>, 4> args = {{
      {1, 2, 3},
      {0, 2, 3},
      {0, 3, 1},
      {0, 2, 1},
  }};
  return args;
}

// Facet f (opposite lambda^{f+1}) sees the tetrahedron at these weights.
const std::array<std::array<int, 4>, 5>& pentatope_facet_arguments()
{
  static const std::array<std::array<int, 4>, 5> args = {{
      {1, 2, 3, 4},
      {0, 2, 3, 4},
      {0, 1, 3, 4},
      {0, 1, 4, 2},
      {0, 1, 3, 2},
  }};
  return args;
}

double blend_factor(double lambda_a, double lambda_f)
{
  if (lambda_a < zero_weight_tol)
    return 0.0;
  return 2.0 * lambda_a / (2.0 * lambda_a + lambda_f);
}

//-----------------------------------------------------------------------------
WarpBlend::WarpBlend(int p, const WarpParams& params) : _warp(p), _params(params)
{
  check_params(params);
}

std::array<double, 2> WarpBlend::triangle(std::span<const double, 3> lambda) const
{
  const auto& frames = triangle_frames();
  const auto& args = triangle_edge_arguments();
  std::array<double, 2> g{0.0, 0.0};
  for (int e = 0; e < 3; ++e)
  {
    const double lo = lambda[args[e][0]];
    const double lp = lambda[args[e][1]];
    const double lm = lambda[args[e][2]];
    const double blend = 4.0 * lp * lm;
    if (blend == 0.0)
      continue;
    const double scale = (1.0 + (_params.alpha * lo) * (_params.alpha * lo))
                         * blend * _warp.modified(lp - lm);
    g[0] += scale * frames[e].t[0][0];
    g[1] += scale * frames[e].t[0][1];
  }
  return g;
}

std::array<double, 3> WarpBlend::tet(std::span<const double, 4> lambda) const
{
  const auto& frames = tet_frames();
  const auto& args = tet_face_arguments();

  auto face_warp = [&](int f)
  {
    const std::array<double, 3> sub
        = {lambda[args[f][0]], lambda[args[f][1]], lambda[args[f][2]]};
    const auto g = triangle(sub);
    std::array<double, 3> w{};
    for (int c = 0; c < 3; ++c)
      w[c] = g[0] * frames[f].t[0][c] + g[1] * frames[f].t[1][c];
    return w;
  };

  // On the boundary the displacement is the warp of a face containing the
  // point; faces sharing an edge agree there.
  if (const int f = first_zero_weight(lambda); f >= 0)
    return face_warp(f);

  std::array<double, 3> g{};
  for (int f = 0; f < 4; ++f)
  {
    double blend = 1.0 + (_params.beta * lambda[f]) * (_params.beta * lambda[f]);
    for (int a = 0; a < 4; ++a)
      if (a != f)
        blend *= blend_factor(lambda[a], lambda[f]);
    if (blend == 0.0)
      continue;
    const auto w = face_warp(f);
    for (int c = 0; c < 3; ++c)
      g[c] += blend * w[c];
  }
  return g;
}

std::array<double, 4>
WarpBlend::pentatope(std::span<const double, 5> lambda) const
{
  const auto& frames = pentatope_frames();
  const auto& args = pentatope_facet_arguments();

  auto facet_warp = [&](int f)
  {
    const std::array<double, 4> sub = {lambda[args[f][0]], lambda[args[f][1]],
                                       lambda[args[f][2]], lambda[args[f][3]]};
    const auto g = tet(sub);
    std::array<double, 4> w{};
    for (int c = 0; c < 4; ++c)
    {
      w[c] = g[0] * frames[f].t[0][c] + g[1] * frames[f].t[1][c]
             + g[2] * frames[f].t[2][c];
    }
    return w;
  };

  if (const int f = first_zero_weight(lambda); f >= 0)
    return facet_warp(f);

  std::array<double, 4> g{};
  for (int f = 0; f < 5; ++f)
  {
    double blend
        = 1.0 + (_params.gamma * lambda[f]) * (_params.gamma * lambda[f]);
    for (int a = 0; a < 5; ++a)
      if (a != f)
        blend *= blend_factor(lambda[a], lambda[f]);
    if (blend == 0.0)
      continue;
    const auto w = facet_warp(f);
    for (int c = 0; c < 4; ++c)
      g[c] += blend * w[c];
  }
  return g;
}

Point WarpBlend::displacement(const BarycentricPoint& pt) const
{
  Point d;
  d.dim = pt.dim;
  const double* l = pt.lambda.data();
  switch (pt.dim)
  {
  case 1:
    // r = lambda1 v2 + lambda2 v1 = lambda1 - lambda2
    d.x[0] = _warp.warp(l[0] - l[1]);
    break;
  case 2:
  {
    const auto g = triangle(std::span<const double, 3>(l, 3));
    d.x[0] = g[0];
    d.x[1] = g[1];
    break;
  }
  case 3:
  {
    const auto g = tet(std::span<const double, 4>(l, 4));
    std::copy(g.begin(), g.end(), d.x.begin());
    break;
  }
  case 4:
  {
    const auto g = pentatope(std::span<const double, 5>(l, 5));
    std::copy(g.begin(), g.end(), d.x.begin());
    break;
  }
  default:
    throw Error(ErrorKind::invalid_argument,
                "warp: dimension must be in [1, 4], got "
                    + std::to_string(pt.dim));
  }
  return d;
}

//-----------------------------------------------------------------------------
std::array<double, 2> triangle_warp(int p, const WarpParams& params,
                                    std::span<const double, 3> lambda)
{
  return WarpBlend(p, params).triangle(lambda);
}

std::array<double, 2> triangle_warp_components(int p, const WarpParams& params,
                                               std::span<const double, 3> lambda)
{
  // The triangle's own frame is the Cartesian frame of the reference triangle.
  return triangle_warp(p, params, lambda);
}

std::array<double, 3> tet_warp(int p, const WarpParams& params,
                               std::span<const double, 4> lambda)
{
  return WarpBlend(p, params).tet(lambda);
}

std::array<double, 3> tet_warp_components(int p, const WarpParams& params,
                                          std::span<const double, 4> lambda)
{
  return tet_warp(p, params, lambda);
}

std::array<double, 4> pentatope_warp(int p, const WarpParams& params,
                                     std::span<const double, 5> lambda)
{
  return WarpBlend(p, params).pentatope(lambda);
}

//-----------------------------------------------------------------------------
NodeSet shifted_nodes(int dim, int p, const WarpParams& params)
{
  const NodeSet lattice = equidistant_nodes(dim, p);
  const WarpBlend warp(p, params);
  const ReferenceSimplex& simplex = reference_simplex(dim);
  const int n = dim + 1;

  NodeSet out = lattice;
  for (std::size_t i = 0; i < lattice.size(); ++i)
  {
    const BarycentricPoint& base = lattice.bary[i];
    const Point g = warp.displacement(base);
    for (int c = 0; c < dim; ++c)
      out.cart[i].x[c] += g.x[c];

    BarycentricPoint& b = out.bary[i];
    for (int k = 0; k < n; ++k)
    {
      // Facets are invariant under the warp; keep lattice zeros exact.
      if (base.lambda[k] == 0.0)
        continue;
      double delta = 0.0;
      for (int c = 0; c < dim; ++c)
        delta += simplex.inverse[k * n + c] * g.x[c];
      b.lambda[k] += delta;
      if (b.lambda[k] < -1e-9)
      {
        throw Error(ErrorKind::invalid_node,
                    "shifted_nodes: node " + std::to_string(i)
                        + " left the simplex (lambda" + std::to_string(k + 1)
                        + " = " + std::to_string(b.lambda[k]) + ")");
      }
    }
  }
  return out;
}

} // namespace simplex_nodes::warpblend
