#include "simplex_nodes/jacobi.hpp"
#include "simplex_nodes/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace simplex_nodes::jacobi
{
namespace
{
void check_params(int alpha, int beta, int n)
{
  if (alpha < 0 || beta < 0 || n < 0)
  {
    throw Error(ErrorKind::invalid_argument,
                "jacobi: parameters must be non-negative (alpha="
                    + std::to_string(alpha) + ", beta=" + std::to_string(beta)
                    + ", n=" + std::to_string(n) + ")");
  }
}

double p0_value(int alpha, int beta)
{
  const double ab = alpha + beta;
  return std::sqrt(std::pow(2.0, -ab - 1.0) * std::tgamma(ab + 2.0)
                   / (std::tgamma(alpha + 1.0) * std::tgamma(beta + 1.0)));
}

double p1_scale(int alpha, int beta, double p0)
{
  return 0.5 * p0
         * std::sqrt((alpha + beta + 3.0) / ((alpha + 1.0) * (beta + 1.0)));
}
} // namespace

double recurrence_a(int alpha, int beta, int n)
{
  const double h = 2.0 * n + alpha + beta;
  return 2.0 / h
         * std::sqrt(n * (n + alpha + beta) * double(n + alpha) * (n + beta)
                     / ((h - 1.0) * (h + 1.0)));
}

double recurrence_b(int alpha, int beta, int n)
{
  const double h = 2.0 * n + alpha + beta;
  return -double(alpha * alpha - beta * beta) / (h * (h + 2.0));
}

//-----------------------------------------------------------------------------
Recurrence::Recurrence(int alpha, int beta, int nmax)
    : _nmax(nmax), _a(nmax + 2, 0.0), _b(nmax + 2, 0.0)
{
  check_params(alpha, beta, nmax);
  _p0 = p0_value(alpha, beta);
  _p1_scale = p1_scale(alpha, beta, _p0);
  _p1_slope = alpha + beta + 2.0;
  _p1_shift = alpha - beta;
  for (int n = 1; n <= nmax + 1; ++n)
  {
    _a[n] = recurrence_a(alpha, beta, n);
    _b[n] = recurrence_b(alpha, beta, n);
  }
}
//-----------------------------------------------------------------------------
void Recurrence::eval_all(double x, double* out) const
{
  out[0] = _p0;
  if (_nmax == 0)
    return;
  out[1] = _p1_scale * (_p1_slope * x + _p1_shift);
  for (int n = 1; n < _nmax; ++n)
    out[n + 1] = (x * out[n] - _a[n] * out[n - 1] - _b[n] * out[n]) / _a[n + 1];
}
//-----------------------------------------------------------------------------
double eval(const JacobiParams& params, double x)
{
  check_params(params.alpha, params.beta, params.n);
  if (!(std::abs(x) <= 1.0 + 1e-12))
  {
    throw Error(ErrorKind::invalid_argument,
                "jacobi: x=" + std::to_string(x) + " outside [-1,1]");
  }
  const Recurrence rec(params.alpha, params.beta, params.n);
  std::vector<double> values(params.n + 1);
  rec.eval_all(x, values.data());
  return values.back();
}
//-----------------------------------------------------------------------------
std::vector<double> eval_batch(const JacobiParams& params,
                               std::span<const double> xs)
{
  check_params(params.alpha, params.beta, params.n);
  const Recurrence rec(params.alpha, params.beta, params.n);
  std::vector<double> values(params.n + 1);
  std::vector<double> result;
  result.reserve(xs.size());
  for (double x : xs)
  {
    if (!(std::abs(x) <= 1.0 + 1e-12))
    {
      throw Error(ErrorKind::invalid_argument,
                  "jacobi: x=" + std::to_string(x) + " outside [-1,1]");
    }
    rec.eval_all(x, values.data());
    result.push_back(values.back());
  }
  return result;
}
//-----------------------------------------------------------------------------
LglNodes lgl_nodes(int p)
{
  if (p < 1 || p > 40)
  {
    throw Error(ErrorKind::invalid_argument,
                "lgl_nodes: order must be in [1, 40], got " + std::to_string(p));
  }

  LglNodes result{p, std::vector<double>(p + 1)};
  result.nodes.front() = -1.0;
  result.nodes.back() = 1.0;
  if (p == 1)
    return result;

  // Interior nodes are the roots of P_{p-1}^{(1,1)}; its derivative is
  // sqrt(n(n+3)) P_{n-1}^{(2,2)} for the orthonormal family.
  const int n = p - 1;
  const Recurrence f(1, 1, n);
  const Recurrence df(2, 2, std::max(n - 1, 0));
  const double dscale = std::sqrt(double(n) * (n + 3));
  std::vector<double> fv(n + 1), dv(n + 1);

  for (int i = 1; i < p; ++i)
  {
    double x = -std::cos(std::numbers::pi * i / p);
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter)
    {
      f.eval_all(x, fv.data());
      df.eval_all(x, dv.data());
      const double step = fv[n] / (dscale * dv[n - 1]);
      x -= step;
      if (std::abs(step) < 1e-16)
      {
        converged = true;
        break;
      }
      // Newton stalls at the last ulp; accept once the step is at roundoff.
      if (iter > 3 && std::abs(step) <= 4 * std::numeric_limits<double>::epsilon())
      {
        converged = true;
        break;
      }
    }
    f.eval_all(x, fv.data());
    df.eval_all(x, dv.data());
    const double residual = std::abs(fv[n]) / (dscale * std::abs(dv[n - 1]));
    if (!converged || residual > 1e-14)
    {
      throw Error(ErrorKind::no_convergence,
                  "lgl_nodes: Newton iteration failed for p=" + std::to_string(p)
                      + ", root " + std::to_string(i));
    }
    result.nodes[i] = x;
  }

  // Enforce exact mirror symmetry.
  for (int i = 1; i <= p / 2; ++i)
  {
    const double x = 0.5 * (result.nodes[p - i] - result.nodes[i]);
    result.nodes[i] = -x;
    result.nodes[p - i] = x;
  }
  if (p % 2 == 0)
    result.nodes[p / 2] = 0.0;
  return result;
}

} // namespace simplex_nodes::jacobi
