#pragma once

#include <array>
#include <cstdint>
#include <span>

/// Reference data used by the verification suite.
namespace simplex_nodes::golden
{

struct Fraction
{
  std::int64_t num;
  std::int64_t den;
};

/// 4D indexing coefficients C1..C15 for p = 4..8 (row p - 4).
const std::array<std::array<Fraction, 15>, 5>& coefficient_table();

/// Optimized pentatope node tables for p = 1..4 as CSV rows
/// "l1,l2,l3,l4,l5", 15 decimals, zeros as "0". Empty for other orders.
std::span<const char* const> node_table(int order);

struct LebesgueRow
{
  int order;
  double alpha;
  double optimized;
  double alpha_zero;
  double equidistant;
  double spacing;  // as listed
  double external; // independent equidistant value, 0 when absent
};

/// Lebesgue constants on the pentatope, p = 1..10.
const std::array<LebesgueRow, 10>& lebesgue_table();

/// Grid spacing at which each reference value is reproduced to all printed
/// digits. It differs from the listed spacing for some rows.
struct ReproducingSpacing
{
  int order;
  double optimized;
  double alpha_zero;
  double equidistant;
};
const std::array<ReproducingSpacing, 10>& reproducing_spacings();

} // namespace simplex_nodes::golden
