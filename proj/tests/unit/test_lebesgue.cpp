#include "simplex_nodes/error.hpp"
#include "simplex_nodes/lebesgue.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace simplex_nodes;
using namespace simplex_nodes::lebesgue;

namespace
{
SweepOptions with_threads(int t, bool symmetric = false)
{
  SweepOptions o;
  o.threads = t;
  o.symmetric = symmetric;
  return o;
}
} // namespace

TEST_CASE("sample grid")
{
  CHECK(sample_grid(4, 0.5).size() == 15);
  CHECK(sample_grid(1, 0.25).size() == 5);
  CHECK(sample_grid(4, 0.02).size() == 316251);
  CHECK(sample_grid(2, 0.1).points().size() == 66);
  for (const auto& pt : sample_grid(3, 0.25).points())
  {
    double s = 0.0;
    for (int k = 0; k <= 3; ++k)
    {
      CHECK(pt.lambda[k] >= 0.0);
      s += pt.lambda[k];
    }
    CHECK(std::abs(s - 1.0) < 1e-15);
  }
  CHECK_THROWS_AS(sample_grid(3, 0.03), Error);
  CHECK_THROWS_AS(sample_grid(3, 0.0), Error);
  CHECK_THROWS_AS(sample_grid(3, -0.1), Error);
  CHECK(default_spacing(5) == 0.01);
  CHECK(default_spacing(6) == 0.02);
  CHECK(default_spacing(10) == 0.04);
}

TEST_CASE("closed-form values")
{
  const NodeSet line1 = equidistant_nodes(1, 1);
  CHECK(lebesgue_constant(line1, 0.01).lambda_est == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lebesgue_function(line1, Point{1, {0.0}}) == doctest::Approx(1.0).epsilon(1e-15));
  // Quadratic on three equispaced points peaks at 5/4.
  CHECK(lebesgue_constant(equidistant_nodes(1, 2), 0.25).lambda_est
        == doctest::Approx(1.25).epsilon(1e-14));
  // Quadratic on the six-point triangle lattice peaks at 5/3 at the centroid.
  const auto tri = lebesgue_constant(equidistant_nodes(2, 2), 1.0 / 30);
  CHECK(tri.lambda_est == doctest::Approx(5.0 / 3.0).epsilon(1e-13));
  for (int k = 0; k < 3; ++k)
    CHECK(tri.argmax.lambda[k] == doctest::Approx(1.0 / 3.0));
  CHECK(lebesgue_constant(equidistant_nodes(4, 2), 0.1).lambda_est
        == doctest::Approx(2.2).epsilon(1e-13));
}

TEST_CASE("lambda is at least one")
{
  for (int d = 1; d <= 4; ++d)
    for (int p = 1; p <= 4; ++p)
    {
      const auto r = lebesgue_constant(equidistant_nodes(d, p), 0.05, with_threads(1));
      CHECK(r.lambda_est >= 1.0 - 1e-12);
      CHECK(r.samples == node_count(d, 20));
      CHECK(r.dim == d);
      CHECK(r.order == p);
    }
}

TEST_CASE("thread count does not change the result")
{
  const NodeSet nodes = warpblend::shifted_nodes(3, 6, warpblend::WarpParams::tied(1.0));
  const auto a = lebesgue_constant(nodes, 0.02, with_threads(1));
  const auto b = lebesgue_constant(nodes, 0.02, with_threads(3));
  CHECK(a.lambda_est == b.lambda_est);
  CHECK(a.argmax.lambda == b.argmax.lambda);
  CHECK(a.samples == b.samples);
}

TEST_CASE("symmetric sweep equals the full sweep on symmetric sets")
{
  for (int d = 2; d <= 4; ++d)
    for (int p : {3, 5})
    {
      const NodeSet nodes = warpblend::shifted_nodes(d, p, warpblend::WarpParams::tied(1.5));
      const double h = d == 4 ? 0.05 : 0.02;
      const auto full = lebesgue_constant(nodes, h, with_threads(1));
      const auto sym = lebesgue_constant(nodes, h, with_threads(1, true));
      INFO("d=" << d << " p=" << p);
      CHECK(std::abs(full.lambda_est - sym.lambda_est) < 1e-12 * full.lambda_est);
      CHECK(sym.samples < full.samples);
    }
}

TEST_CASE("argmax is consistent under permutation")
{
  const NodeSet nodes = equidistant_nodes(3, 5);
  const VandermondeSystem sys(nodes);
  const auto r = lebesgue_constant(sys, 0.05);
  CHECK(lebesgue_function(sys, r.argmax) == doctest::Approx(r.lambda_est).epsilon(1e-13));
  for (const auto& node : nodes.bary)
    CHECK(std::abs(lebesgue_function(sys, node) - 1.0) < 1e-9);
  BarycentricPoint q = r.argmax;
  std::sort(q.lambda.begin(), q.lambda.begin() + 4);
  do
  {
    CHECK(lebesgue_function(sys, q) == doctest::Approx(r.lambda_est).epsilon(1e-11));
  } while (std::next_permutation(q.lambda.begin(), q.lambda.begin() + 4));
}

TEST_CASE("finer grids and refinement never decrease the estimate")
{
  for (int d = 2; d <= 3; ++d)
  {
    const NodeSet nodes = warpblend::shifted_nodes(d, 5, warpblend::WarpParams::tied(1.2));
    const double coarse = lebesgue_constant(nodes, 0.1).lambda_est;
    const double fine = lebesgue_constant(nodes, 0.05).lambda_est;
    CHECK(fine >= coarse);
    SweepOptions ref;
    ref.refine = true;
    const auto refined = lebesgue_constant(nodes, 0.1, ref);
    CHECK(refined.lambda_est >= coarse);
    CHECK(refined.samples > sample_grid(d, 0.1).size());
  }
}

TEST_CASE("low orders are insensitive to the grid")
{
  for (int p = 1; p <= 4; ++p)
  {
    const NodeSet nodes = warpblend::shifted_nodes(4, p, {});
    const SweepOptions sym = with_threads(0, true);
    const double a = lebesgue_constant(nodes, 0.02, sym).lambda_est;
    const double b = lebesgue_constant(nodes, 0.01, sym).lambda_est;
    CHECK(std::abs(a - b) <= 0.01 * b);
  }
}
