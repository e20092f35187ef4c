#pragma once

#include "simplex_nodes/geometry.hpp"
#include "simplex_nodes/modal.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace simplex_nodes
{

using RowMatrix
    = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Vandermonde matrix V_ij = psi_j(r_i) of a node set together with an LU
/// factorisation (partial pivoting) of V^T, used to evaluate the Lagrange
/// basis l(r) = V^{-T} psi(r). Immutable after construction; concurrent
/// evaluation is safe.
class VandermondeSystem
{
public:
  /// Points are solved in blocks of this many right-hand sides. Every point
  /// goes through the same kernel, so single and batch evaluation agree
  /// bit for bit.
  static constexpr int block_width = 32;

  explicit VandermondeSystem(const NodeSet& nodes);

  int dim() const { return _dim; }
  int order() const { return _order; }
  std::size_t size() const { return std::size_t(_matrix.rows()); }

  const Eigen::MatrixXd& matrix() const { return _matrix; }
  const modal::BasisEvaluator& basis() const { return _basis; }

  /// |det V|; may overflow to inf or underflow to 0 at high order, see
  /// log_abs_det().
  double abs_det() const { return _abs_det; }
  double log_abs_det() const { return _log_abs_det; }

  /// Estimated 1-norm condition number of V.
  double condition_estimate() const { return _condition; }

  /// Relative Frobenius error of P^{-1} L U against V^T.
  double factorization_residual() const;

  /// Lagrange basis at a barycentric point (inside within 1e-9).
  std::vector<double> lagrange_eval(const BarycentricPoint& pt) const;

  /// Lagrange basis at a Cartesian point of the equilateral reference simplex.
  std::vector<double> lagrange_eval(const Point& r) const;

  /// Rows are lagrange_eval at each point.
  RowMatrix lagrange_eval_batch(std::span<const BarycentricPoint> pts) const;

  /// Hot-path kernel: fills `work` (size() rows x block_width columns,
  /// row-major) with psi at `count` <= block_width points and overwrites it
  /// with the Lagrange values. No range checks. Columns >= count are padding.
  void solve_block(const BarycentricPoint* pts, int count, double* work) const;

private:
  int _dim;
  int _order;
  modal::BasisEvaluator _basis;
  Eigen::MatrixXd _matrix;
  RowMatrix _lower; // unit lower factor of P V^T
  RowMatrix _upper;
  std::vector<int> _gather; // (P psi)[r] = psi[_gather[r]]
  double _abs_det = 0.0;
  double _log_abs_det = 0.0;
  double _condition = 0.0;
};

/// Builds the system; throws ErrorKind::singular_matrix for coincident nodes
/// (Cartesian distance <= 1e-12) or a pivot below 1e-13 max|V|.
inline VandermondeSystem build_vandermonde(const NodeSet& nodes)
{
  return VandermondeSystem(nodes);
}

} // namespace simplex_nodes
