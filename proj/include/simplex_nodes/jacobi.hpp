#pragma once

#include <span>
#include <vector>

namespace simplex_nodes::jacobi
{

/// Parameters of an orthonormal Jacobi polynomial P_n^{(alpha,beta)}.
struct JacobiParams
{
  int alpha = 0;
  int beta = 0;
  int n = 0;
};

/// Recurrence coefficient a_n (n >= 1).
double recurrence_a(int alpha, int beta, int n);

/// Recurrence coefficient b_n (n >= 1, or n = 0 when alpha + beta > 0).
double recurrence_b(int alpha, int beta, int n);

/// Evaluate the orthonormal Jacobi polynomial (unit L2 norm on [-1,1] with
/// weight (1-x)^alpha (1+x)^beta) by its three-term recurrence.
/// Throws ErrorKind::invalid_argument for negative parameters or |x| > 1+1e-12.
double eval(const JacobiParams& params, double x);

/// Elementwise eval over a span; bitwise identical to looping over eval().
std::vector<double> eval_batch(const JacobiParams& params,
                               std::span<const double> xs);

/// Precomputed recurrence for one (alpha, beta) family up to degree nmax.
/// Produces the same values as eval(), bit for bit.
class Recurrence
{
public:
  Recurrence() = default;
  Recurrence(int alpha, int beta, int nmax);

  int nmax() const { return _nmax; }

  /// Writes P_0(x) .. P_nmax(x) into out[0..nmax]. No argument checking.
  void eval_all(double x, double* out) const;

private:
  int _nmax = -1;
  double _p0 = 0.0;
  double _p1_scale = 0.0;
  double _p1_slope = 0.0;
  double _p1_shift = 0.0;
  std::vector<double> _a; // a_n, n = 0..nmax (a_0 unused)
  std::vector<double> _b; // b_n
};

/// Legendre-Gauss-Lobatto nodes of order p (p+1 points), ascending.
struct LglNodes
{
  int p = 0;
  std::vector<double> nodes;
};

/// LGL nodes: +-1 and the roots of P_{p-1}^{(1,1)}, by Newton iteration from
/// Chebyshev-Gauss-Lobatto guesses. Valid for 1 <= p <= 40.
LglNodes lgl_nodes(int p);

} // namespace simplex_nodes::jacobi
