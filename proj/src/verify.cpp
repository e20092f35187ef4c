#include "simplex_nodes/verify.hpp"
#include "simplex_nodes/error.hpp"
#include "simplex_nodes/golden.hpp"
#include "simplex_nodes/io.hpp"
#include "simplex_nodes/jacobi.hpp"
#include "simplex_nodes/lebesgue.hpp"
#include "simplex_nodes/modal.hpp"
#include "simplex_nodes/nodal.hpp"
#include "simplex_nodes/warpblend.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace simplex_nodes::verify
{
namespace
{
std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::array<modal::Rational, 15> perturbed(int p, int coefficient)
{
  auto c = modal::indexing_coefficients(p);
  if (coefficient >= 1 && coefficient <= 15)
    c[coefficient - 1] += 1;
  return c;
}

NodeSet reference_nodes(int order)
{
  std::ostringstream csv;
  csv << "lambda1,lambda2,lambda3,lambda4,lambda5\n";
  for (const char* row : golden::node_table(order))
    csv << row << '\n';
  std::istringstream in(csv.str());
  return io::read_nodes_csv(in, "reference p=" + std::to_string(order));
}

BarycentricPoint random_point(int dim, std::mt19937_64& rng)
{
  std::exponential_distribution<double> e(1.0);
  BarycentricPoint pt;
  pt.dim = dim;
  double sum = 0.0;
  for (int k = 0; k <= dim; ++k)
    sum += pt.lambda[k] = e(rng);
  for (int k = 0; k <= dim; ++k)
    pt.lambda[k] /= sum;
  return pt;
}
} // namespace

//-----------------------------------------------------------------------------
CheckResult check_coefficients(int perturb_coefficient)
{
  CheckResult r{"indexing coefficients p=4..8", true, ""};
  int matched = 0;
  for (int p = 4; p <= 8; ++p)
  {
    const auto computed = perturbed(p, perturb_coefficient);
    const auto& expected = golden::coefficient_table()[p - 4];
    for (int n = 0; n < 15; ++n)
    {
      const modal::Rational want(expected[n].num, expected[n].den);
      if (computed[n] == want)
      {
        ++matched;
        continue;
      }
      r.pass = false;
      r.detail += "p=" + std::to_string(p) + " C" + std::to_string(n + 1)
                  + ": got " + std::to_string(computed[n].numerator()) + "/"
                  + std::to_string(computed[n].denominator()) + ", want "
                  + std::to_string(expected[n].num) + "/"
                  + std::to_string(expected[n].den) + "; ";
    }
  }
  if (r.pass)
    r.detail = std::to_string(matched) + "/75 exact";
  return r;
}

CheckResult check_index_bijection(int perturb_coefficient)
{
  CheckResult r{"4D index bijection p=1..10", true, ""};
  for (int p = 1; p <= 10 && r.pass; ++p)
  {
    const auto coeffs = perturbed(p, perturb_coefficient);
    const auto loops = modal::enumerate_multi_indices(4, p);
    for (std::size_t pos = 0; pos < loops.size(); ++pos)
    {
      std::int64_t m = -1;
      try
      {
        m = modal::modal_index(p, loops[pos], coeffs);
      }
      catch (const Error&)
      {
      }
      if (m != std::int64_t(pos) + 1)
      {
        const auto& e = loops[pos].exps;
        r.pass = false;
        r.detail = "p=" + std::to_string(p) + " (i,j,k,q)=("
                   + std::to_string(e[0]) + "," + std::to_string(e[1]) + ","
                   + std::to_string(e[2]) + "," + std::to_string(e[3])
                   + ") maps to " + std::to_string(m) + ", loop position "
                   + std::to_string(pos + 1);
        break;
      }
    }
  }
  if (r.pass)
    r.detail = "all nested-loop positions reproduced";
  return r;
}

CheckResult check_node_tables()
{
  CheckResult r{"reference node tables p=1..4", true, ""};
  for (int p = 1; p <= 4; ++p)
  {
    const double alpha = golden::lebesgue_table()[p - 1].alpha;
    const NodeSet ours
        = warpblend::shifted_nodes(4, p, warpblend::WarpParams::tied(alpha));
    const NodeSet ref = reference_nodes(p);
    const double dist = set_distance(ours.bary, ref.bary);
    r.detail += fmt("p=%.0f: %.2e; ", p, dist);
    if (!(dist < 1e-12))
      r.pass = false;
  }
  return r;
}

CheckResult check_line_reduction()
{
  CheckResult r{"d=1 nodes equal LGL, p<=20", true, ""};
  double worst = 0.0;
  for (int p = 1; p <= 20; ++p)
  {
    const NodeSet nodes = warpblend::shifted_nodes(1, p, {});
    const auto lgl = jacobi::lgl_nodes(p).nodes;
    std::vector<double> xs;
    for (const auto& pt : nodes.cart)
      xs.push_back(pt.x[0]);
    std::sort(xs.begin(), xs.end());
    for (int i = 0; i <= p; ++i)
      worst = std::max(worst, std::abs(xs[i] - lgl[i]));
  }
  r.pass = worst < 1e-13;
  r.detail = fmt("max deviation %.2e", worst);
  return r;
}

CheckResult check_symmetry(int max_order)
{
  CheckResult r{"permutation invariance d<=4, p<=" + std::to_string(max_order),
                true, ""};
  double worst = 0.0;
  for (int d = 1; d <= 4; ++d)
  {
    for (int p = 1; p <= max_order; ++p)
    {
      const double alpha = d == 4 ? golden::lebesgue_table()[p - 1].alpha : 0.0;
      for (double a : {0.0, alpha})
      {
        const double defect = permutation_defect(
            warpblend::shifted_nodes(d, p, warpblend::WarpParams::tied(a)));
        worst = std::max(worst, defect);
      }
    }
  }
  r.pass = worst < 1e-10;
  r.detail = fmt("max defect %.2e", worst);
  return r;
}

CheckResult check_cardinality(int max_order)
{
  CheckResult r{"cardinality and partition of unity d<=4, p<="
                    + std::to_string(max_order),
                true, ""};
  std::mt19937_64 rng(20240501);
  double card = 0.0;
  double unity = 0.0;
  for (int d = 1; d <= 4; ++d)
  {
    for (int p = 1; p <= max_order; ++p)
    {
      const NodeSet nodes = warpblend::shifted_nodes(d, p, {});
      const VandermondeSystem system(nodes);
      const RowMatrix l = system.lagrange_eval_batch(nodes.bary);
      for (Eigen::Index i = 0; i < l.rows(); ++i)
        for (Eigen::Index j = 0; j < l.cols(); ++j)
          card = std::max(card, std::abs(l(i, j) - (i == j ? 1.0 : 0.0)));
      std::vector<BarycentricPoint> pts;
      for (int s = 0; s < 100; ++s)
        pts.push_back(random_point(d, rng));
      const RowMatrix lr = system.lagrange_eval_batch(pts);
      for (Eigen::Index i = 0; i < lr.rows(); ++i)
        unity = std::max(unity, std::abs(lr.row(i).sum() - 1.0));
    }
  }
  r.pass = card < 1e-9 && unity < 1e-9;
  r.detail = fmt("max |l(node)-e| %.2e, max |sum l - 1| %.2e", card, unity);
  return r;
}

std::vector<CheckResult> check_lebesgue_row(int order, int threads)
{
  const auto& row = golden::lebesgue_table()[order - 1];
  const auto& hs = golden::reproducing_spacings()[order - 1];
  lebesgue::SweepOptions sweep;
  sweep.threads = threads;
  // Beyond p = 6 the sweep visits one point per orbit of the symmetric group.
  sweep.symmetric = order > 6;

  struct Case
  {
    const char* label;
    NodeSet nodes;
    double h;
    double want;
    double tol;
  };
  using warpblend::WarpParams;
  const Case cases[] = {
      {"equidistant", equidistant_nodes(4, order), hs.equidistant,
       row.equidistant, 5e-4},
      {"alpha=0", warpblend::shifted_nodes(4, order, WarpParams::tied(0.0)),
       hs.alpha_zero, row.alpha_zero, 1e-3},
      {"reference alpha",
       warpblend::shifted_nodes(4, order, WarpParams::tied(row.alpha)),
       hs.optimized, row.optimized, 1e-2},
  };

  std::vector<CheckResult> out;
  for (const auto& c : cases)
  {
    const auto rep = lebesgue::lebesgue_constant(c.nodes, c.h, sweep);
    const double rel = std::abs(rep.lambda_est - c.want) / c.want;
    CheckResult r;
    r.name = "Lebesgue p=" + std::to_string(order) + " " + c.label;
    r.pass = rel <= c.tol;
    r.detail = fmt("got %.4f want %.4f", rep.lambda_est, c.want)
               + fmt(" at h=%.2f (rel %.1e)", c.h, rel);
    out.push_back(r);
  }
  return out;
}

//-----------------------------------------------------------------------------
std::vector<CheckResult> run(const VerifyOptions& options)
{
  std::vector<CheckResult> out;
  out.push_back(check_coefficients(options.perturb_coefficient));
  out.push_back(check_index_bijection(options.perturb_coefficient));
  out.push_back(check_node_tables());
  out.push_back(check_line_reduction());
  const int max_order = options.level == Level::full ? 10 : 6;
  out.push_back(check_symmetry(max_order));
  out.push_back(check_cardinality(max_order));
  const int rows = options.level == Level::full ? 10 : 4;
  for (int p = 1; p <= rows; ++p)
    for (auto& r : check_lebesgue_row(p, options.threads))
      out.push_back(std::move(r));
  return out;
}

} // namespace simplex_nodes::verify
