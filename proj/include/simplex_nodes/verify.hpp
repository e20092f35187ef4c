#pragma once

#include <string>
#include <vector>

/// Checks of the library against the embedded reference data.
namespace simplex_nodes::verify
{

struct CheckResult
{
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class Level
{
  quick, ///< p <= 4 reference rows and property suites
  full,  ///< every Lebesgue row
};

struct VerifyOptions
{
  Level level = Level::quick;
  int threads = 0;
  /// 1-based coefficient to perturb by +1 before the indexing checks;
  /// 0 leaves them intact. Used to test that the checks can fail.
  int perturb_coefficient = 0;
};

/// Indexing coefficients for p = 4..8 against the reference table.
CheckResult check_coefficients(int perturb_coefficient = 0);
/// The 4D index formula is a bijection onto 1..N_p in nested-loop order for
/// p = 1..10, with the given coefficient perturbation.
CheckResult check_index_bijection(int perturb_coefficient = 0);
/// Warp/blend nodes against the reference node tables, p = 1..4.
CheckResult check_node_tables();
/// d = 1 nodes equal LGL, p <= 20.
CheckResult check_line_reduction();
/// Permutation invariance, d <= 4, p <= max_order.
CheckResult check_symmetry(int max_order);
/// Cardinality and partition of unity, d <= 4, p <= max_order.
CheckResult check_cardinality(int max_order);
/// One Lebesgue row: equidistant, alpha = 0 and the reference alpha.
std::vector<CheckResult> check_lebesgue_row(int order, int threads);

std::vector<CheckResult> run(const VerifyOptions& options);

} // namespace simplex_nodes::verify
