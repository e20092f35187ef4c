#include "simplex_nodes/modal.hpp"
#include "simplex_nodes/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace simplex_nodes::modal
{
namespace
{
constexpr int max_order = 20;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// 2*(1+num)/den - 1 with the singular limit -1.
double collapsed_ratio(double num, double den)
{
  if (std::abs(den) < singular_tol)
    return -1.0;
  return clamp_unit(2.0 * (1.0 + num) / den - 1.0);
}

double normalisation(int dim)
{
  switch (dim)
  {
  case 1:
    return 1.0;
  case 2:
    return std::numbers::sqrt2;
  case 3:
    return 2.0 * std::numbers::sqrt2;
  default:
    return 8.0;
  }
}

void check_order(int dim, int p)
{
  if (dim < 1 || dim > max_dim)
  {
    throw Error(ErrorKind::invalid_argument,
                "dimension must be in [1, 4], got " + std::to_string(dim));
  }
  if (p < 0 || p > max_order)
  {
    throw Error(ErrorKind::invalid_argument,
                "order must be in [0, 20], got " + std::to_string(p));
  }
}

void check_admissible(int dim, int p, const MultiIndex& mi)
{
  bool ok = mi.dim == dim;
  for (int c = 0; c < max_dim; ++c)
  {
    if (mi.exps[c] < 0 || (c >= dim && mi.exps[c] != 0))
      ok = false;
  }
  if (!ok || mi.total() > p)
  {
    throw Error(ErrorKind::index_out_of_bounds,
                "multi-index (" + std::to_string(mi.exps[0]) + ","
                    + std::to_string(mi.exps[1]) + ","
                    + std::to_string(mi.exps[2]) + ","
                    + std::to_string(mi.exps[3])
                    + ") not admissible for d=" + std::to_string(dim)
                    + ", p=" + std::to_string(p));
  }
}

double ipow(double x, int n)
{
  double r = 1.0;
  for (int k = 0; k < n; ++k)
    r *= x;
  return r;
}
} // namespace

//-----------------------------------------------------------------------------
CollapsedCoords collapse(int dim, const Point& r)
{
  CollapsedCoords cc;
  cc.dim = dim;
  const auto& x = r.x;
  switch (dim)
  {
  case 1:
    cc.values[0] = clamp_unit(x[0]);
    break;
  case 2:
    cc.values[0] = collapsed_ratio(x[0], 1.0 - x[1]);
    cc.values[1] = clamp_unit(x[1]);
    break;
  case 3:
    // a = -2(1+r)/(s+t) - 1 == 2(1+r)/(-(s+t)) - 1
    cc.values[0] = collapsed_ratio(x[0], -(x[1] + x[2]));
    cc.values[1] = collapsed_ratio(x[1], 1.0 - x[2]);
    cc.values[2] = clamp_unit(x[2]);
    break;
  case 4:
    cc.values[0] = collapsed_ratio(x[0], -(x[1] + x[2] + x[3] + 1.0));
    cc.values[1] = collapsed_ratio(x[1], -(x[2] + x[3]));
    cc.values[2] = collapsed_ratio(x[2], 1.0 - x[3]);
    cc.values[3] = clamp_unit(x[3]);
    break;
  default:
    throw Error(ErrorKind::invalid_argument,
                "collapse: dimension must be in [1, 4], got "
                    + std::to_string(dim));
  }
  return cc;
}
//-----------------------------------------------------------------------------
std::array<Rational, 15> indexing_coefficients(int p)
{
  const std::int64_t q = p;
  return {
      Rational(2 * q * q * q + 15 * q * q + 35 * q + 25, 12), // C1  i
      Rational(-6 * q * q - 30 * q - 35, 24),                 // C2  i^2
      Rational(2 * q + 5, 12),                                // C3  i^3
      Rational(-1, 24),                                       // C4  i^4
      Rational(3 * q * q + 12 * q + 11, 6),                   // C5  j
      Rational(-q - 2),                                       // C6  ij
      Rational(1, 2),                                         // C7  i^2 j
      Rational(-q - 2, 2),                                    // C8  j^2
      Rational(1, 2),                                         // C9  i j^2
      Rational(1, 6),                                         // C10 j^3
      Rational(2 * q + 3, 2),                                 // C11 k
      Rational(-1),                                           // C12 ik
      Rational(-1),                                           // C13 jk
      Rational(-1, 2),                                        // C14 k^2
      Rational(1),                                            // C15 q
  };
}
//-----------------------------------------------------------------------------
Rational scaled_index_offset(int p, const MultiIndex& mi,
                             const std::array<Rational, 15>& coeffs)
{
  check_admissible(4, p, mi);
  const std::int64_t i = mi.exps[0], j = mi.exps[1], k = mi.exps[2],
                     q = mi.exps[3];
  const std::array<std::int64_t, 15> monomials = {
      i, i * i, i * i * i, i * i * i * i, j, i * j, i * i * j, j * j,
      i * j * j, j * j * j, k, i * k, j * k, k * k, q};
  Rational sum(0);
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    sum += (coeffs[n] * std::int64_t(24)) * monomials[n];
  return sum;
}
//-----------------------------------------------------------------------------
std::int64_t modal_index(int p, const MultiIndex& mi,
                         const std::array<Rational, 15>& coeffs)
{
  const Rational offset = scaled_index_offset(p, mi, coeffs) / std::int64_t(24);
  if (offset.denominator() != 1)
  {
    throw Error(ErrorKind::index_out_of_bounds,
                "modal_index: index polynomial is not integral at this "
                "multi-index");
  }
  return 1 + offset.numerator();
}
//-----------------------------------------------------------------------------
std::int64_t modal_index(int dim, int p, const MultiIndex& mi)
{
  check_order(dim, p);
  check_admissible(dim, p, mi);
  const std::int64_t i = mi.exps[0], j = mi.exps[1], k = mi.exps[2];
  const std::int64_t q = p;
  switch (dim)
  {
  case 1:
    return 1 + i;
  case 2:
    // m = 1 + ((2p+3)/2) i - i^2/2 + j
    return 1 + ((2 * q + 3) * i - i * i) / 2 + j;
  case 3:
  {
    // 6(m-1) = (3p^2+12p+11) i - 3(p+2) i^2 + i^3 + 3(2p+3) j - 3 j^2
    //          - 6 ij + 6 k
    const std::int64_t six = (3 * q * q + 12 * q + 11) * i - 3 * (q + 2) * i * i
                             + i * i * i + 3 * (2 * q + 3) * j - 3 * j * j
                             - 6 * i * j + 6 * k;
    return 1 + six / 6;
  }
  default:
    return modal_index(p, mi, indexing_coefficients(p));
  }
}
//-----------------------------------------------------------------------------
std::vector<MultiIndex> enumerate_multi_indices(int dim, int p)
{
  check_order(dim, p);
  std::vector<MultiIndex> out;
  const int jmax = dim >= 2 ? p : 0;
  const int kmax = dim >= 3 ? p : 0;
  const int qmax = dim >= 4 ? p : 0;
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= std::min(jmax, p - i); ++j)
      for (int k = 0; k <= std::min(kmax, p - i - j); ++k)
        for (int q = 0; q <= std::min(qmax, p - i - j - k); ++q)
          out.push_back(MultiIndex{dim, {i, j, k, q}});
  return out;
}
//-----------------------------------------------------------------------------
std::vector<MultiIndex> indices_by_mode(int dim, int p)
{
  const auto all = enumerate_multi_indices(dim, p);
  std::vector<MultiIndex> by_mode(all.size());
  std::vector<bool> seen(all.size(), false);
  for (const auto& mi : all)
  {
    const std::int64_t m = modal_index(dim, p, mi);
    if (m < 1 || m > std::int64_t(all.size()) || seen[m - 1])
    {
      throw Error(ErrorKind::index_out_of_bounds,
                  "modal index map is not a bijection at m="
                      + std::to_string(m));
    }
    seen[m - 1] = true;
    by_mode[m - 1] = mi;
  }
  return by_mode;
}
//-----------------------------------------------------------------------------
double basis_eval(int dim, int p, const MultiIndex& mi, const Point& r)
{
  check_order(dim, p);
  check_admissible(dim, p, mi);
  const CollapsedCoords cc = collapse(dim, r);
  const int i = mi.exps[0], j = mi.exps[1], k = mi.exps[2], q = mi.exps[3];

  double value = normalisation(dim) * jacobi::eval({0, 0, i}, cc.values[0]);
  if (dim >= 2)
  {
    const double b = cc.values[1];
    value *= jacobi::eval({2 * i + 1, 0, j}, b) * ipow(1.0 - b, i);
  }
  if (dim >= 3)
  {
    const double c = cc.values[2];
    value *= jacobi::eval({2 * (i + j) + 2, 0, k}, c) * ipow(1.0 - c, i + j);
  }
  if (dim >= 4)
  {
    const double e = cc.values[3];
    value *= jacobi::eval({2 * (i + j + k) + 3, 0, q}, e)
             * ipow(1.0 - e, i + j + k);
  }
  return value;
}
//-----------------------------------------------------------------------------
std::vector<double> basis_vector(int dim, int p, const Point& r)
{
  const BasisEvaluator evaluator(dim, p);
  std::vector<double> out(evaluator.size());
  evaluator.eval(r, out.data());
  return out;
}
//-----------------------------------------------------------------------------
BasisEvaluator::BasisEvaluator(int dim, int p)
    : _dim(dim), _p(p), _modes(indices_by_mode(dim, p)),
      _first(0, 0, p)
{
  if (dim >= 2)
    for (int i = 0; i <= p; ++i)
      _second.emplace_back(2 * i + 1, 0, p - i);
  if (dim >= 3)
    for (int s = 0; s <= p; ++s)
      _third.emplace_back(2 * s + 2, 0, p - s);
  if (dim >= 4)
    for (int s = 0; s <= p; ++s)
      _fourth.emplace_back(2 * s + 3, 0, p - s);
}

void BasisEvaluator::eval(const Point& r, double* out, std::size_t stride) const
{
  constexpr int n = max_order + 1;
  double pa[n];
  double pb[n][n];
  double pc[n][n];
  double pe[n][n];
  double wb[n], wc[n], we[n];

  const CollapsedCoords cc = collapse(_dim, r);
  _first.eval_all(cc.values[0], pa);
  if (_dim >= 2)
  {
    const double omb = 1.0 - cc.values[1];
    wb[0] = 1.0;
    for (int i = 0; i <= _p; ++i)
    {
      _second[i].eval_all(cc.values[1], pb[i]);
      if (i > 0)
        wb[i] = wb[i - 1] * omb;
    }
  }
  if (_dim >= 3)
  {
    const double omc = 1.0 - cc.values[2];
    wc[0] = 1.0;
    for (int s = 0; s <= _p; ++s)
    {
      _third[s].eval_all(cc.values[2], pc[s]);
      if (s > 0)
        wc[s] = wc[s - 1] * omc;
    }
  }
  if (_dim >= 4)
  {
    const double ome = 1.0 - cc.values[3];
    we[0] = 1.0;
    for (int s = 0; s <= _p; ++s)
    {
      _fourth[s].eval_all(cc.values[3], pe[s]);
      if (s > 0)
        we[s] = we[s - 1] * ome;
    }
  }

  const double scale = normalisation(_dim);
  for (std::size_t m = 0; m < _modes.size(); ++m)
  {
    const auto& e = _modes[m].exps;
    double v = scale * pa[e[0]];
    if (_dim >= 2)
      v *= pb[e[0]][e[1]] * wb[e[0]];
    if (_dim >= 3)
      v *= pc[e[0] + e[1]][e[2]] * wc[e[0] + e[1]];
    if (_dim >= 4)
      v *= pe[e[0] + e[1] + e[2]][e[3]] * we[e[0] + e[1] + e[2]];
    out[m * stride] = v;
  }
}

} // namespace simplex_nodes::modal
