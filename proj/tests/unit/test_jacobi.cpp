#include "simplex_nodes/error.hpp"
#include "simplex_nodes/jacobi.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace simplex_nodes;
using jacobi::JacobiParams;

namespace
{
// Explicit series for the classical Jacobi polynomial, normalised with the
// closed-form L2 norm.
double series_oracle(int a, int b, int n, double x)
{
  auto binom = [](long double top, int k)
  {
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i)
      r *= (top - k + i) / i;
    return r;
  };
  long double sum = 0.0L;
  const long double xl = x;
  for (int s = 0; s <= n; ++s)
  {
    sum += binom(n + a, n - s) * binom(n + b, s)
           * std::pow((xl - 1.0L) / 2.0L, s)
           * std::pow((xl + 1.0L) / 2.0L, n - s);
  }
  const long double gamma = std::pow(2.0L, a + b + 1) / (2 * n + a + b + 1)
                            * std::tgamma((long double)(n + a + 1)) * std::tgamma((long double)(n + b + 1))
                            / (std::tgamma((long double)(n + a + b + 1)) * std::tgamma((long double)(n + 1)));
  return double(sum / std::sqrt(gamma));
}

// Gauss-Legendre rule from the eigenvalues of the Legendre Jacobi matrix.
void gauss_legendre(int n, Eigen::VectorXd& x, Eigen::VectorXd& w)
{
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k)
    J(k, k - 1) = J(k - 1, k) = k / std::sqrt(4.0 * k * k - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  x = es.eigenvalues();
  w = 2.0 * es.eigenvectors().row(0).array().square().transpose();
}

// Legendre P_n and its derivative by the classical recurrence.
std::pair<double, double> legendre(int n, double x)
{
  double p0 = 1.0, p1 = x, d0 = 0.0, d1 = 1.0;
  if (n == 0)
    return {1.0, 0.0};
  for (int k = 1; k < n; ++k)
  {
    const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    const double d2 = d0 + (2 * k + 1) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return {p1, d1};
}
} // namespace

TEST_CASE("constant and linear values")
{
  CHECK(jacobi::eval({0, 0, 0}, 0.37) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(jacobi::eval({0, 0, 1}, 1.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  const double xs[] = {-1.0, 0.0, 1.0};
  for (double v : jacobi::eval_batch({0, 0, 0}, xs))
    CHECK(v == doctest::Approx(std::numbers::sqrt2 / 2).epsilon(1e-15));
  const double ends[] = {-1.0, 1.0};
  const auto lin = jacobi::eval_batch({0, 0, 1}, ends);
  CHECK(lin[0] == doctest::Approx(-std::sqrt(1.5)));
  CHECK(lin[1] == doctest::Approx(std::sqrt(1.5)));
}

TEST_CASE("recurrence matches explicit series")
{
  double worst = 0.0;
  for (int a : {0, 1, 2, 3, 5, 9, 21})
    for (int b : {0, 1, 4})
      for (int n = 0; n <= 14; ++n)
        for (double x : {-1.0, -0.83, -0.3, 0.0, 0.3, 0.77, 1.0})
        {
          const double want = series_oracle(a, b, n, x);
          const double got = jacobi::eval({a, b, n}, x);
          worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
        }
  CHECK(worst < 1e-12);
  CHECK(jacobi::eval({0, 0, 5}, 0.3) == doctest::Approx(series_oracle(0, 0, 5, 0.3)).epsilon(1e-12));
}

TEST_CASE("orthonormal under the Jacobi weight")
{
  Eigen::VectorXd x, w;
  gauss_legendre(40, x, w);
  for (int a : {0, 1, 3, 7})
    for (int b : {0, 2})
    {
      const int nmax = 10;
      Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nmax + 1, nmax + 1);
      for (int q = 0; q < x.size(); ++q)
      {
        const double weight = w(q) * std::pow(1 - x(q), a) * std::pow(1 + x(q), b);
        for (int m = 0; m <= nmax; ++m)
          for (int n = 0; n <= nmax; ++n)
            gram(m, n) += weight * jacobi::eval({a, b, m}, x(q)) * jacobi::eval({a, b, n}, x(q));
      }
      CHECK((gram - Eigen::MatrixXd::Identity(nmax + 1, nmax + 1)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("batch and precomputed recurrence agree bitwise with eval")
{
  std::vector<double> xs;
  for (int i = 0; i <= 50; ++i)
    xs.push_back(-1.0 + i / 25.0);
  const auto batch = jacobi::eval_batch({3, 0, 7}, xs);
  const jacobi::Recurrence rec(3, 0, 7);
  double all[8];
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    CHECK(batch[i] == jacobi::eval({3, 0, 7}, xs[i]));
    rec.eval_all(xs[i], all);
    for (int n = 0; n <= 7; ++n)
      CHECK(all[n] == jacobi::eval({3, 0, n}, xs[i]));
  }
}

TEST_CASE("argument checks")
{
  auto kind = [](auto f)
  {
    try
    {
      f();
    }
    catch (const Error& e)
    {
      return e.kind();
    }
    return ErrorKind::parse_error;
  };
  CHECK(kind([] { jacobi::eval({-1, 0, 2}, 0.0); }) == ErrorKind::invalid_argument);
  CHECK(kind([] { jacobi::eval({0, -1, 2}, 0.0); }) == ErrorKind::invalid_argument);
  CHECK(kind([] { jacobi::eval({0, 0, -1}, 0.0); }) == ErrorKind::invalid_argument);
  CHECK(kind([] { jacobi::eval({0, 0, 2}, 1.0 + 1e-9); }) == ErrorKind::invalid_argument);
  CHECK_NOTHROW(jacobi::eval({0, 0, 2}, 1.0 + 1e-13));
  CHECK(kind([] { jacobi::lgl_nodes(0); }) == ErrorKind::invalid_argument);
  CHECK(kind([] { jacobi::lgl_nodes(41); }) == ErrorKind::invalid_argument);
}

TEST_CASE("LGL nodes")
{
  CHECK(jacobi::lgl_nodes(1).nodes == std::vector<double>{-1.0, 1.0});

  const auto p3 = jacobi::lgl_nodes(3).nodes;
  CHECK(std::abs(p3[1] + 1.0 / std::sqrt(5.0)) <= 1e-16);
  CHECK(std::abs(p3[2] - 1.0 / std::sqrt(5.0)) <= 1e-16);
  CHECK((1.0 + p3[1]) / 2.0 == doctest::Approx(0.276393202250021).epsilon(1e-15));

  const auto p4 = jacobi::lgl_nodes(4).nodes;
  CHECK(std::abs(p4[3] - std::sqrt(3.0 / 7.0)) <= 2e-16);
  CHECK(p4[2] == 0.0);
  CHECK((1.0 - p4[3]) / 2.0 == doctest::Approx(0.172673164646011).epsilon(1e-14));

  for (int p = 2; p <= 40; ++p)
  {
    const auto x = jacobi::lgl_nodes(p).nodes;
    REQUIRE(x.size() == std::size_t(p + 1));
    CHECK(x.front() == -1.0);
    CHECK(x.back() == 1.0);
    for (int i = 0; i <= p; ++i)
    {
      CHECK(x[i] == -x[p - i]);
      if (i > 0)
        CHECK(x[i] > x[i - 1]);
      if (i > 0 && i < p)
        CHECK(std::abs(legendre(p, x[i]).second) < 1e-10 * p * p);
    }
    // LGL quadrature is exact up to degree 2p - 1.
    for (int k = 0; k <= 2 * p - 1; ++k)
    {
      double q = 0.0;
      for (int i = 0; i <= p; ++i)
      {
        const double lp = legendre(p, x[i]).first;
        q += 2.0 / (p * (p + 1) * lp * lp) * std::pow(x[i], k);
      }
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(q - exact) < 1e-13);
    }
  }
}
