#include "simplex_nodes/error.hpp"
#include "simplex_nodes/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace simplex_nodes;

namespace
{
BarycentricPoint bary(std::initializer_list<double> v)
{
  BarycentricPoint pt;
  pt.dim = int(v.size()) - 1;
  std::copy(v.begin(), v.end(), pt.lambda.begin());
  return pt;
}

double dist(const Point& a, const Point& b)
{
  double s = 0.0;
  for (int c = 0; c < a.dim; ++c)
    s += (a.x[c] - b.x[c]) * (a.x[c] - b.x[c]);
  return std::sqrt(s);
}

std::int64_t binomial(int n, int k)
{
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}
} // namespace

TEST_CASE("node counts")
{
  CHECK(node_count(1, 7) == 8);
  CHECK(node_count(4, 2) == 15);
  CHECK(node_count(4, 3) == 35);
  CHECK(node_count(4, 100) == 4598126);
  CHECK(node_count(4, 50) == 316251);
  for (int d = 1; d <= 4; ++d)
    for (int p = 0; p <= 20; ++p)
      CHECK(node_count(d, p) == binomial(p + d, d));
  CHECK_THROWS_AS(node_count(5, 2), Error);
  CHECK_THROWS_AS(node_count(0, 2), Error);
}

TEST_CASE("reference simplices are equilateral with edge 2, centred at 0")
{
  for (int d = 1; d <= 4; ++d)
  {
    const auto& s = reference_simplex(d);
    Point centroid;
    centroid.dim = d;
    for (int a = 0; a <= d; ++a)
    {
      for (int c = 0; c < d; ++c)
        centroid.x[c] += s.vertices[a].x[c] / (d + 1);
      for (int b = a + 1; b <= d; ++b)
        CHECK(dist(s.vertices[a], s.vertices[b]) == doctest::Approx(2.0).epsilon(1e-14));
    }
    for (int c = 0; c < d; ++c)
      CHECK(std::abs(centroid.x[c]) < 1e-15);
  }
}

TEST_CASE("vertex pairings")
{
  const auto& s4 = reference_simplex(4);
  const Point v5 = bary_to_cart(s4, bary({1, 0, 0, 0, 0}));
  CHECK(v5.x[0] == 0.0);
  CHECK(v5.x[1] == 0.0);
  CHECK(v5.x[2] == 0.0);
  CHECK(v5.x[3] == doctest::Approx(4.0 / std::sqrt(10.0)).epsilon(1e-15));

  const Point v1 = bary_to_cart(reference_simplex(2), bary({0, 1, 0}));
  CHECK(v1.x[0] == doctest::Approx(-1.0));
  CHECK(v1.x[1] == doctest::Approx(-1.0 / std::sqrt(3.0)));

  // r = l4 v1 + l5 v2 + l3 v3 + l2 v4 + l1 v5
  const auto back = cart_to_bary(s4, s4.vertices[0]);
  const double want[] = {0, 0, 0, 1, 0};
  for (int k = 0; k < 5; ++k)
    CHECK(std::abs(back.lambda[k] - want[k]) < 1e-14);

  const auto centre = cart_to_bary(s4, Point{4, {0, 0, 0, 0}});
  for (int k = 0; k < 5; ++k)
    CHECK(centre.lambda[k] == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("barycentric round trip and outside detection")
{
  std::mt19937_64 rng(7);
  std::exponential_distribution<double> e;
  for (int d = 1; d <= 4; ++d)
  {
    const auto& s = reference_simplex(d);
    for (int t = 0; t < 100; ++t)
    {
      BarycentricPoint pt;
      pt.dim = d;
      double sum = 0.0;
      for (int k = 0; k <= d; ++k)
        sum += pt.lambda[k] = e(rng);
      for (int k = 0; k <= d; ++k)
        pt.lambda[k] /= sum;
      const auto back = cart_to_bary(s, bary_to_cart(s, pt));
      for (int k = 0; k <= d; ++k)
        CHECK(std::abs(back.lambda[k] - pt.lambda[k]) < 1e-12);
    }
    Point far;
    far.dim = d;
    far.x[0] = 5.0;
    CHECK_THROWS_AS(cart_to_bary(s, far), Error);
  }
  CHECK_THROWS_AS(bary_to_cart(reference_simplex(3), bary({0.5, 0.5})), Error);
}

TEST_CASE("equidistant lattices")
{
  const auto p1 = equidistant_nodes(4, 1);
  REQUIRE(p1.size() == 5);
  std::set<int> hot;
  for (const auto& pt : p1.bary)
    for (int k = 0; k < 5; ++k)
      if (pt.lambda[k] == 1.0)
        hot.insert(k);
  CHECK(hot.size() == 5);

  const auto p2 = equidistant_nodes(4, 2);
  REQUIRE(p2.size() == 15);
  int vertices = 0, mids = 0;
  for (const auto& pt : p2.bary)
  {
    const auto n1 = std::count(pt.lambda.begin(), pt.lambda.end(), 1.0);
    const auto nh = std::count(pt.lambda.begin(), pt.lambda.end(), 0.5);
    vertices += n1 == 1;
    mids += nh == 2;
  }
  CHECK(vertices == 5);
  CHECK(mids == 10);

  const auto line = equidistant_nodes(1, 4);
  const double want[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  for (int i = 0; i < 5; ++i)
    CHECK(line.cart[i].x[0] == doctest::Approx(want[i]).epsilon(1e-15));

  for (int d = 1; d <= 4; ++d)
    for (int p = 1; p <= 10; ++p)
    {
      const auto nodes = equidistant_nodes(d, p);
      CHECK(std::int64_t(nodes.size()) == node_count(d, p));
      std::set<std::vector<long>> seen;
      for (const auto& pt : nodes.bary)
      {
        std::vector<long> key;
        for (int k = 0; k <= d; ++k)
        {
          const double scaled = pt.lambda[k] * p;
          CHECK(std::abs(scaled - std::round(scaled)) < 1e-12);
          key.push_back(std::lround(scaled));
        }
        seen.insert(key);
      }
      CHECK(seen.size() == nodes.size());
      CHECK(permutation_defect(nodes) < 1e-15);
    }
}

TEST_CASE("lattice walk order")
{
  // 2D: lambda1 outermost, lambda3 inner, lambda2 dependent.
  LatticeWalker w(2, 2);
  std::vector<std::array<int, 3>> seen;
  for (; !w.done(); w.advance())
    seen.push_back({w.counts()[0], w.counts()[1], w.counts()[2]});
  const std::vector<std::array<int, 3>> want
      = {{0, 2, 0}, {0, 1, 1}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {2, 0, 0}};
  CHECK(seen == want);
}

TEST_CASE("set distance")
{
  const auto a = equidistant_nodes(2, 3);
  auto b = a.bary;
  std::reverse(b.begin(), b.end());
  CHECK(set_distance(a.bary, b) == 0.0);
  b[0].lambda[0] += 1e-6;
  CHECK(set_distance(a.bary, b) == doctest::Approx(1e-6).epsilon(1e-6));
  b.pop_back();
  CHECK(std::isinf(set_distance(a.bary, b)));
}
