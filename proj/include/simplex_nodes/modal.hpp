#pragma once

#include "simplex_nodes/geometry.hpp"
#include "simplex_nodes/jacobi.hpp"

#include <boost/rational.hpp>

#include <array>
#include <cstdint>
#include <vector>

/// Orthonormal modal bases on the reference simplex in collapsed coordinates.
///
/// Points passed to this module live on the right-angled simplex
/// {x_i >= -1, sum x_i <= 2 - d} (see to_collapsed_domain), which is where
/// the collapsed-coordinate maps send the simplex onto [-1,1]^d and where
/// the bases are orthonormal.
namespace simplex_nodes::modal
{

using Rational = boost::rational<std::int64_t>;

/// Exponent tuple (i, j, k, q); entries beyond dim are zero.
struct MultiIndex
{
  int dim = 0;
  std::array<int, max_dim> exps{};

  int total() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
  bool operator==(const MultiIndex&) const = default;
};

/// Collapsed coordinates (a, b, c, e); entries beyond dim are zero.
struct CollapsedCoords
{
  int dim = 0;
  std::array<double, max_dim> values{};
};

/// Denominators below this magnitude select the singular limit value -1.
inline constexpr double singular_tol = 1e-10;

/// Collapsed-coordinate map. d=2: a = 2(1+r)/(1-s)-1, b = s.
/// d=3: a = -2(1+r)/(s+t)-1, b = 2(1+s)/(1-t)-1, c = t.
/// d=4: a = -2(1+r)/(s+t+u+1)-1, b = -2(1+s)/(t+u)-1, c = 2(1+t)/(1-u)-1,
/// e = u. A coordinate whose denominator vanishes takes the value -1.
CollapsedCoords collapse(int dim, const Point& r);

/// C_1..C_15 of the four-dimensional modal index polynomial for order p.
std::array<Rational, 15> indexing_coefficients(int p);

/// 1-based modal index m of a multi-index. For d = 4 the index polynomial
/// is evaluated termwise with every coefficient scaled by 24, summed, and
/// divided by 24 at the end. Throws ErrorKind::index_out_of_bounds when the
/// multi-index is not admissible for (dim, p).
std::int64_t modal_index(int dim, int p, const MultiIndex& mi);

/// Four-dimensional index with caller-supplied coefficients (used to
/// mutation-test the bijectivity check). Throws ErrorKind::index_out_of_bounds
/// if the polynomial does not evaluate to an integer.
std::int64_t modal_index(int p, const MultiIndex& mi,
                         const std::array<Rational, 15>& coeffs);

/// 24*(m-1) for d = 4, as an exact rational sum.
Rational scaled_index_offset(int p, const MultiIndex& mi,
                             const std::array<Rational, 15>& coeffs);

/// All admissible multi-indices, produced by nested loops over i, j, k, q
/// (outermost first).
std::vector<MultiIndex> enumerate_multi_indices(int dim, int p);

/// Multi-indices ordered by modal_index (element m-1 has index m).
std::vector<MultiIndex> indices_by_mode(int dim, int p);

/// psi_m at r for the given multi-index, product of Jacobi factors.
double basis_eval(int dim, int p, const MultiIndex& mi, const Point& r);

/// (psi_1(r), ..., psi_Np(r)).
std::vector<double> basis_vector(int dim, int p, const Point& r);

/// Reusable evaluator for the full basis vector at many points. Holds the
/// precomputed Jacobi recurrences; const methods are thread-safe.
class BasisEvaluator
{
public:
  BasisEvaluator(int dim, int p);

  int dim() const { return _dim; }
  int order() const { return _p; }
  std::size_t size() const { return _modes.size(); }

  /// Writes psi_1..psi_Np at r into out[0], out[stride], ...
  void eval(const Point& r, double* out, std::size_t stride = 1) const;

private:
  int _dim;
  int _p;
  std::vector<MultiIndex> _modes;
  jacobi::Recurrence _first;
  std::vector<jacobi::Recurrence> _second; // (2i+1, 0), by i
  std::vector<jacobi::Recurrence> _third;  // (2(i+j)+2, 0), by i+j
  std::vector<jacobi::Recurrence> _fourth; // (2(i+j+k)+3, 0), by i+j+k
};

} // namespace simplex_nodes::modal
