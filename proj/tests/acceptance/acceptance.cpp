// Acceptance suite: one PASS/FAIL line per criterion, details indented
// below it. Exit status is the number of failed criteria.

#include "simplex_nodes/golden.hpp"
#include "simplex_nodes/io.hpp"
#include "simplex_nodes/jacobi.hpp"
#include "simplex_nodes/lebesgue.hpp"
#include "simplex_nodes/modal.hpp"
#include "simplex_nodes/nodal.hpp"
#include "simplex_nodes/optimize.hpp"
#include "simplex_nodes/verify.hpp"
#include "simplex_nodes/warpblend.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace simplex_nodes;
using warpblend::WarpParams;

namespace
{
struct Outcome
{
  bool pass = true;
  std::vector<std::string> lines;

  void note(bool ok, const std::string& line)
  {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "bad  ") + line);
  }
};

std::string fmt(const char* f, auto... args)
{
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const golden::LebesgueRow& row(int p) { return golden::lebesgue_table()[p - 1]; }
const golden::ReproducingSpacing& spacing(int p)
{
  return golden::reproducing_spacings()[p - 1];
}

// Every node set here is invariant under permutations of the barycentric
// weights, so the orbit-reduced sweep is exact; it is used above p = 4.
lebesgue::SweepOptions sweep_for(int p)
{
  lebesgue::SweepOptions o;
  o.symmetric = p > 4;
  return o;
}

double lambda_of(const NodeSet& nodes, double h)
{
  return lebesgue::lebesgue_constant(nodes, h, sweep_for(nodes.order)).lambda_est;
}

std::map<int, double> equidistant_cache;

double equidistant_lambda(int p)
{
  auto it = equidistant_cache.find(p);
  if (it == equidistant_cache.end())
    it = equidistant_cache.emplace(p, lambda_of(equidistant_nodes(4, p), spacing(p).equidistant)).first;
  return it->second;
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

//-----------------------------------------------------------------------------
Outcome lebesgue_column(const char* label, double golden::LebesgueRow::*value,
                        double golden::ReproducingSpacing::*h, double tol,
                        std::function<NodeSet(int)> make)
{
  Outcome out;
  for (int p = 1; p <= 10; ++p)
  {
    const double want = row(p).*value;
    const double hr = spacing(p).*h;
    const double got = make ? lambda_of(make(p), hr) : equidistant_lambda(p);
    const double rel = std::abs(got - want) / want;
    std::string line = fmt("p=%-2d %s %.4f want %.4f at h=%.2f rel %.1e", p, label, got, want, hr, rel);
    if (hr != row(p).spacing)
    {
      const NodeSet nodes = make ? make(p) : equidistant_nodes(4, p);
      const double listed = lambda_of(nodes, row(p).spacing);
      line += fmt("  [listed h=%.2f: %.4f rel %.1e]", row(p).spacing, listed,
                  std::abs(listed - want) / want);
    }
    out.note(rel <= tol, line);
  }
  return out;
}

Outcome criterion_equidistant()
{
  return lebesgue_column("equidistant", &golden::LebesgueRow::equidistant,
                         &golden::ReproducingSpacing::equidistant, 5e-4, nullptr);
}

Outcome criterion_alpha_zero()
{
  return lebesgue_column("alpha=0", &golden::LebesgueRow::alpha_zero,
                         &golden::ReproducingSpacing::alpha_zero, 1e-3,
                         [](int p) { return warpblend::shifted_nodes(4, p, WarpParams::tied(0.0)); });
}

Outcome criterion_optimized()
{
  Outcome out;
  for (int p : {4, 6, 7, 8, 9, 10})
  {
    optimize::OptimizeOptions o;
    o.sweep.symmetric = true;
    const double h = spacing(p).optimized;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = optimize::optimize_alpha(4, p, h, 40, o);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double want = row(p).optimized;
    const double rel = std::abs(r.lambda_star - want) / want;
    out.note(rel <= 1e-2,
             fmt("p=%-2d Lambda* %.4f want %.4f rel %+.1e at h=%.2f; alpha* %.4f (reference %.4f); %zu evaluations, %.1f s",
                 p, r.lambda_star, want, (r.lambda_star - want) / want, h, r.alpha_star, row(p).alpha,
                 r.trace.size(), secs));
  }
  return out;
}

Outcome criterion_node_tables()
{
  Outcome out;
  const auto tables = verify::check_node_tables();
  out.note(tables.pass, tables.detail);
  const std::pair<int, const char*> verbatim[] = {{3, "0.276393202250021"}, {4, "0.551551223569326"}};
  for (const auto& [p, text] : verbatim)
  {
    std::ostringstream csv;
    io::write_nodes_csv(csv, warpblend::shifted_nodes(4, p, WarpParams::tied(row(p).alpha)));
    const bool found = csv.str().find(text) != std::string::npos;
    out.note(found, fmt("p=%d CSV contains %s", p, text));
  }
  return out;
}

Outcome from_check(const verify::CheckResult& c)
{
  Outcome out;
  out.note(c.pass, c.name + ": " + c.detail);
  return out;
}

// Cartesian monomials of total degree exactly p.
std::vector<std::array<int, 4>> top_monomials(int dim, int p)
{
  std::vector<std::array<int, 4>> out;
  for (const auto& mi : modal::enumerate_multi_indices(dim, p))
  {
    int deg = 0;
    for (int k = 0; k < dim; ++k)
      deg += mi.exps[k];
    if (deg == p)
      out.push_back({mi.exps[0], mi.exps[1], mi.exps[2], mi.exps[3]});
  }
  return out;
}

Eigen::MatrixXd monomial_values(const std::vector<std::array<int, 4>>& monos,
                                const std::vector<Point>& pts, int dim)
{
  Eigen::MatrixXd m(pts.size(), monos.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j)
    {
      double v = 1.0;
      for (int c = 0; c < dim; ++c)
        v *= std::pow(pts[i].x[c], monos[j][c]);
      m(i, j) = v;
    }
  return m;
}

Outcome criterion_basis()
{
  Outcome out;
  std::mt19937_64 rng(7);
  for (int d = 1; d <= 4; ++d)
  {
    double card = 0.0, unity = 0.0, repro = 0.0;
    for (int p = 1; p <= 10; ++p)
    {
      const NodeSet sets[] = {equidistant_nodes(d, p),
                              warpblend::shifted_nodes(d, p, WarpParams::tied(row(p).alpha))};
      std::vector<BarycentricPoint> pts;
      for (int s = 0; s < 1000; ++s)
        pts.push_back(random_point(d, rng));
      std::vector<Point> cart;
      for (const auto& pt : pts)
        cart.push_back(bary_to_cart(reference_simplex(d), pt));
      const auto monos = top_monomials(d, p);
      for (const NodeSet& nodes : sets)
      {
        const VandermondeSystem system(nodes);
        const RowMatrix ln = system.lagrange_eval_batch(nodes.bary);
        for (Eigen::Index i = 0; i < ln.rows(); ++i)
          for (Eigen::Index j = 0; j < ln.cols(); ++j)
            card = std::max(card, std::abs(ln(i, j) - (i == j ? 1.0 : 0.0)));
        const RowMatrix lr = system.lagrange_eval_batch(pts);
        for (Eigen::Index i = 0; i < lr.rows(); ++i)
          unity = std::max(unity, std::abs(lr.row(i).sum() - 1.0));
        const Eigen::MatrixXd at_nodes = monomial_values(monos, nodes.cart, d);
        const Eigen::MatrixXd exact = monomial_values(monos, cart, d);
        const Eigen::MatrixXd interp = lr * at_nodes;
        repro = std::max(repro, (interp - exact).cwiseAbs().maxCoeff());
      }
    }
    const bool ok = card < 1e-9 && unity < 1e-9 && repro < 1e-9;
    out.note(ok, fmt("d=%d p<=10: max |l(node)-e| %.1e, max |sum l - 1| %.1e, monomial error %.1e", d, card, unity,
                     repro));
  }
  return out;
}

Outcome criterion_warp()
{
  Outcome out;
  for (int d = 2; d <= 4; ++d)
  {
    double fixed = 0.0, trace = 0.0;
    bool zeros_kept = true;
    for (int p = 1; p <= 10; ++p)
      for (double a : {0.0, row(p).alpha, 3.0})
      {
        const WarpParams params = WarpParams::tied(a);
        const warpblend::WarpBlend wb(p, params);
        for (int mask = 1; mask < (1 << (d + 1)); ++mask)
        {
          const int bits = __builtin_popcount(mask);
          // Vertices, edge midpoints and the barycentre.
          if (bits != 1 && bits != 2 && bits != d + 1)
            continue;
          BarycentricPoint pt;
          pt.dim = d;
          for (int k = 0; k <= d; ++k)
            pt.lambda[k] = (mask >> k & 1) ? 1.0 / bits : 0.0;
          const Point g = wb.displacement(pt);
          for (int c = 0; c < d; ++c)
            fixed = std::max(fixed, std::abs(g.x[c]));
        }

        const NodeSet full = warpblend::shifted_nodes(d, p, params);
        const NodeSet lower = warpblend::shifted_nodes(d - 1, p, params);
        const NodeSet lattice = equidistant_nodes(d, p);
        for (std::size_t i = 0; i < full.size(); ++i)
          for (int k = 0; k <= d; ++k)
            if (lattice.bary[i].lambda[k] == 0.0 && full.bary[i].lambda[k] != 0.0)
              zeros_kept = false;
        for (int f = 0; f <= d; ++f)
        {
          std::vector<BarycentricPoint> facet;
          for (const auto& pt : full.bary)
          {
            if (pt.lambda[f] != 0.0)
              continue;
            BarycentricPoint q;
            q.dim = d - 1;
            int c = 0;
            for (int k = 0; k <= d; ++k)
              if (k != f)
                q.lambda[c++] = pt.lambda[k];
            facet.push_back(q);
          }
          trace = std::max(trace, set_distance(facet, lower.bary));
        }
      }
    out.note(fixed < 1e-12 && trace < 1e-10 && zeros_kept,
             fmt("d=%d p<=10: fixed-point warp %.1e, facet trace vs d-1 nodes %.1e, boundary zeros %s", d, fixed,
                 trace, zeros_kept ? "kept" : "lost"));
  }
  return out;
}

Outcome criterion_line()
{
  Outcome out = from_check(verify::check_line_reduction());
  const NodeSet p3 = warpblend::shifted_nodes(1, 3, {});
  std::vector<double> xs;
  for (const auto& pt : p3.cart)
    xs.push_back(pt.x[0]);
  std::sort(xs.begin(), xs.end());
  const double s = 1.0 / std::sqrt(5.0);
  const double dev = std::max(std::abs(xs[1] + s), std::abs(xs[2] - s));
  out.note(dev <= 2.3e-16, fmt("p=3 interior nodes %.17f %.17f, deviation from 1/sqrt(5) %.1e", xs[1], xs[2], dev));
  return out;
}

Outcome criterion_external()
{
  Outcome out;
  for (int p = 6; p <= 10; ++p)
  {
    const double got = equidistant_lambda(p);
    const double ext = row(p).external;
    const double rel = std::abs(got - ext) / ext;
    out.note(rel <= 2e-2, fmt("p=%-2d equidistant %.4f external %.2f rel %.2f%%", p, got, ext, 100 * rel));
  }
  return out;
}
} // namespace

int main()
{
  struct Criterion
  {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"equidistant pentatope Lebesgue constants p=1..10", criterion_equidistant},
      {"alpha=0 pentatope Lebesgue constants p=1..10", criterion_alpha_zero},
      {"optimized alpha reaches the reference Lambda within 1%", criterion_optimized},
      {"pentatope node tables p=1..4 and verbatim CSV values", criterion_node_tables},
      {"75 indexing coefficients p=4..8", [] { return from_check(verify::check_coefficients()); }},
      {"4D modal index bijection p=1..10", [] { return from_check(verify::check_index_bijection()); }},
      {"cardinality, partition of unity, monomial reproduction", criterion_basis},
      {"warp fixed points and facet traces", criterion_warp},
      {"permutation symmetry", [] { return from_check(verify::check_symmetry(10)); }},
      {"1D reduction to LGL", criterion_line},
      {"equidistant Lambda vs independent values", criterion_external},
  };
  int failed = 0;
  int n = 0;
  for (const auto& c : criteria)
  {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
      o = c.run();
    }
    catch (const std::exception& e)
    {
      o.note(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%2d] %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", n, c.name, secs);
    for (const auto& line : o.lines)
      std::printf("         %s\n", line.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed;
}
