#include "cli.hpp"

#include "simplex_nodes/error.hpp"
#include "simplex_nodes/io.hpp"
#include "simplex_nodes/lebesgue.hpp"
#include "simplex_nodes/optimize.hpp"
#include "simplex_nodes/verify.hpp"
#include "simplex_nodes/warpblend.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace simplex_nodes::cli
{
namespace
{
using nlohmann::json;

struct NodeFlags
{
  int dim = 4;
  int order = 1;
  double alpha = 0.0;
  std::optional<double> beta;
  std::optional<double> gamma;
  bool equidistant = false;
  bool unsafe_order = false;

  warpblend::WarpParams params() const
  {
    return {alpha, beta.value_or(alpha), gamma.value_or(alpha)};
  }
};

struct Options
{
  NodeFlags nodes;
  std::string format = "csv";
  std::string out;
  double spacing = 0.0;
  std::string nodes_file;
  bool symmetric = false;
  bool refine = false;
  int threads = 0;
  bool coarse_search = false;
  int budget = 40;
  std::string projection = "full";
  std::string level = "quick";
  int perturb = 0;
  std::string manifest;
};

class UsageError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void add_node_flags(CLI::App* cmd, NodeFlags& f, bool with_equidistant)
{
  cmd->add_option("--dim", f.dim, "Simplex dimension (1-4)")
      ->required()
      ->check(CLI::Range(1, 4));
  cmd->add_option("--order", f.order, "Polynomial order")->required();
  cmd->add_option("--alpha", f.alpha, "Blend parameter (all levels)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--beta", f.beta, "Tetrahedron-level parameter")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--gamma", f.gamma, "Pentatope-level parameter")
      ->check(CLI::NonNegativeNumber);
  if (with_equidistant)
    cmd->add_flag("--equidistant", f.equidistant, "Use the equidistant lattice");
  cmd->add_flag("--unsafe-order", f.unsafe_order, "Allow orders up to 20");
}

void check_order(const NodeFlags& f)
{
  const int max = f.unsafe_order ? 20 : 10;
  if (f.order < 1 || f.order > max)
  {
    throw UsageError("--order must be in [1, " + std::to_string(max)
                     + "], got " + std::to_string(f.order));
  }
}

NodeSet make_nodes(const NodeFlags& f)
{
  check_order(f);
  if (f.equidistant)
    return equidistant_nodes(f.dim, f.order);
  return warpblend::shifted_nodes(f.dim, f.order, f.params());
}

// Everything given on the command line, for the run manifest. Flags without
// a value are recorded as "".
std::map<std::string, std::string> collect_flags(const CLI::App* cmd)
{
  std::map<std::string, std::string> flags;
  for (const CLI::Option* opt : cmd->get_options())
  {
    if (opt->count() == 0 || opt->get_name() == "--help")
      continue;
    std::string name = opt->get_name();
    while (!name.empty() && name.front() == '-')
      name.erase(name.begin());
    const auto& res = opt->results();
    flags[name] = opt->get_expected_max() == 0 || res.empty() ? "" : res.front();
  }
  return flags;
}

std::ofstream open_out(const std::string& path)
{
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write " + path);
  return out;
}

void write_sidecar(const io::RunManifest& manifest, const std::string& path)
{
  auto out = open_out(path + ".manifest.json");
  out << json{{"schema", io::schema_version}, {"manifest", manifest}}.dump(2)
      << '\n';
}

std::string point_text(const BarycentricPoint& pt)
{
  std::string s = "(";
  for (int k = 0; k <= pt.dim; ++k)
    s += (k ? ", " : "") + io::format_weight(pt.lambda[k]);
  return s + ")";
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

//-----------------------------------------------------------------------------
int cmd_nodes(const Options& o, io::RunManifest manifest)
{
  const auto t0 = std::chrono::steady_clock::now();
  const NodeSet nodes = make_nodes(o.nodes);
  manifest.elapsed = seconds_since(t0);
  if (!o.out.empty())
    manifest.outputs = {o.out};

  std::ostringstream text;
  if (o.format == "csv")
  {
    io::write_nodes_csv(text, nodes);
  }
  else
  {
    json doc = {{"schema", io::schema_version}, {"manifest", manifest}};
    doc.update(io::nodes_json(nodes));
    text << doc.dump(2) << '\n';
  }

  if (o.out.empty())
  {
    std::cout << text.str();
    return exit_ok;
  }
  open_out(o.out) << text.str();
  if (o.format == "csv")
    write_sidecar(manifest, o.out);
  return exit_ok;
}

int cmd_lebesgue(const Options& o, io::RunManifest manifest)
{
  NodeSet nodes;
  std::optional<warpblend::WarpParams> params;
  if (!o.nodes_file.empty())
  {
    nodes = io::read_nodes_csv_file(o.nodes_file);
    if (nodes.dim != o.nodes.dim || nodes.order != o.nodes.order)
    {
      throw UsageError("nodes file holds d=" + std::to_string(nodes.dim)
                       + ", p=" + std::to_string(nodes.order)
                       + ", which does not match --dim/--order");
    }
  }
  else
  {
    nodes = make_nodes(o.nodes);
    if (!o.nodes.equidistant)
      params = o.nodes.params();
  }
  const double h
      = o.spacing > 0.0 ? o.spacing : lebesgue::default_spacing(nodes.order);

  lebesgue::SweepOptions sweep;
  sweep.threads = o.threads;
  sweep.symmetric = o.symmetric;
  sweep.refine = o.refine;
  auto report = lebesgue::lebesgue_constant(nodes, h, sweep);
  report.params = params;

  std::printf("Lambda   = %.6f\n", report.lambda_est);
  std::printf("argmax   = %s\n", point_text(report.argmax).c_str());
  std::printf("d = %d, p = %d, h = %g, samples = %lld\n", report.dim,
              report.order, report.h, static_cast<long long>(report.samples));
  std::printf("elapsed  = %.2f s\n", report.elapsed);

  manifest.h = h;
  manifest.elapsed = report.elapsed;
  if (!o.out.empty())
  {
    manifest.outputs = {o.out};
    open_out(o.out) << json{{"schema", io::schema_version},
                            {"manifest", manifest},
                            {"report", io::report_json(report)}}
                           .dump(2)
                    << '\n';
  }
  return exit_ok;
}

int cmd_optimize(const Options& o, io::RunManifest manifest)
{
  check_order(o.nodes);
  const auto t0 = std::chrono::steady_clock::now();
  const double h = o.spacing > 0.0 ? o.spacing
                                   : lebesgue::default_spacing(o.nodes.order);
  optimize::OptimizeOptions opts;
  opts.sweep.threads = o.threads;
  opts.sweep.symmetric = o.symmetric;
  if (o.coarse_search)
  {
    const int n = lebesgue::sample_grid(o.nodes.dim, h).n;
    opts.search_h = 1.0 / std::max(1, n / 2);
  }
  const auto result
      = optimize::optimize_alpha(o.nodes.dim, o.nodes.order, h, o.budget, opts);

  for (const auto& e : result.trace)
    std::printf("alpha = %.6f  Lambda = %.6f  (h = %g)\n", e.alpha, e.lambda,
                e.h);
  std::printf("alpha*   = %.6f\n", result.alpha_star);
  std::printf("Lambda*  = %.6f (h = %g)\n", result.lambda_star, result.h);

  manifest.h = h;
  manifest.elapsed = seconds_since(t0);
  if (!o.out.empty())
  {
    manifest.outputs = {o.out};
    open_out(o.out) << json{{"schema", io::schema_version},
                            {"manifest", manifest},
                            {"result", io::report_json(result)}}
                           .dump(2)
                    << '\n';
  }
  return exit_ok;
}

//-----------------------------------------------------------------------------
const char* node_class(const BarycentricPoint& pt)
{
  static const char* const names[] = {"interior", "facet", "face", "edge",
                                      "vertex"};
  int zeros = 0;
  for (int k = 0; k <= pt.dim; ++k)
    if (std::abs(pt.lambda[k]) < 1e-9)
      ++zeros;
  return names[std::min(zeros, 4)];
}

std::string strip_csv(const std::string& path)
{
  if (path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
    return path.substr(0, path.size() - 4);
  return path;
}

int cmd_plotdata(const Options& o, io::RunManifest manifest)
{
  if (o.nodes.dim != 4)
    throw UsageError("plotdata needs --dim 4");
  if (o.out.empty())
    throw UsageError("plotdata needs --out");
  const auto t0 = std::chrono::steady_clock::now();
  const NodeSet nodes = make_nodes(o.nodes);

  auto write_row = [](std::ostream& out, double x, double y, double z,
                      const char* cls)
  {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.15f,%.15f,%.15f,%s\n", x, y, z, cls);
    out << buf;
  };

  std::vector<std::string> outputs;
  if (o.projection == "full")
  {
    auto out = open_out(o.out);
    out << "x,y,z,class\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
      const auto& r = nodes.cart[i].x;
      write_row(out, r[0], r[1], r[2], node_class(nodes.bary[i]));
    }
    outputs.push_back(o.out);
  }
  else
  {
    const std::string stem = strip_csv(o.out);
    const auto& frames = warpblend::pentatope_frames();
    for (int f = 0; f < 5; ++f)
    {
      const std::string path = stem + "_F" + std::to_string(f + 1) + ".csv";
      auto out = open_out(path);
      out << "x,y,z,class\n";
      for (std::size_t i = 0; i < nodes.size(); ++i)
      {
        if (std::abs(nodes.bary[i].lambda[f]) >= 1e-9)
          continue;
        double y[3] = {0.0, 0.0, 0.0};
        for (int t = 0; t < 3; ++t)
          for (int c = 0; c < 4; ++c)
            y[t] += nodes.cart[i].x[c] * frames[f].t[t][c];
        write_row(out, y[0], y[1], y[2], node_class(nodes.bary[i]));
      }
      outputs.push_back(path);
    }
    const std::string path = stem + "_interior.csv";
    auto out = open_out(path);
    out << "x,y,z,class\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
      if (std::string(node_class(nodes.bary[i])) != "interior")
        continue;
      const auto& r = nodes.cart[i].x;
      write_row(out, r[0], r[1], r[2], "interior");
    }
    outputs.push_back(path);
  }

  manifest.elapsed = seconds_since(t0);
  manifest.outputs = outputs;
  write_sidecar(manifest, o.projection == "full" ? o.out : strip_csv(o.out));
  for (const auto& path : outputs)
    std::cout << path << '\n';
  return exit_ok;
}

int cmd_verify(const Options& o)
{
  verify::VerifyOptions vo;
  vo.level = o.level == "full" ? verify::Level::full : verify::Level::quick;
  vo.threads = o.threads;
  vo.perturb_coefficient = o.perturb;
  bool ok = true;
  for (const auto& r : verify::run(vo))
  {
    std::printf("%s  %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  }
  std::printf("%s\n", ok ? "verify: all checks passed" : "verify: FAILED");
  return ok ? exit_ok : exit_verify_failed;
}

//-----------------------------------------------------------------------------
int dispatch(const std::vector<std::string>& args);

int cmd_rerun(const Options& o, const std::string& program)
{
  std::ifstream in(o.manifest);
  if (!in)
    throw Error(ErrorKind::parse_error, o.manifest + ": cannot open file");
  json doc;
  try
  {
    in >> doc;
  }
  catch (const json::exception& e)
  {
    throw Error(ErrorKind::parse_error, o.manifest + ": " + e.what());
  }
  io::RunManifest manifest;
  try
  {
    manifest = doc.at("manifest").get<io::RunManifest>();
  }
  catch (const json::exception& e)
  {
    throw Error(ErrorKind::parse_error, o.manifest + ": " + e.what());
  }
  if (manifest.command == "rerun" || manifest.command == "verify")
    throw UsageError("manifest command '" + manifest.command
                     + "' cannot be rerun");

  std::vector<std::string> args = {program, manifest.command};
  for (const auto& [name, value] : manifest.flags)
  {
    args.push_back("--" + name);
    if (name == "out" && !o.out.empty())
      args.push_back(o.out);
    else if (!value.empty())
      args.push_back(value);
  }
  if (!o.out.empty() && !manifest.flags.count("out"))
  {
    args.push_back("--out");
    args.push_back(o.out);
  }
  return dispatch(args);
}

int dispatch(const std::vector<std::string>& args)
{
  CLI::App app{"Warp-and-blend interpolation nodes on simplices"};
  app.require_subcommand(1);
  Options o;

  auto* nodes = app.add_subcommand("nodes", "Write a node table");
  add_node_flags(nodes, o.nodes, true);
  nodes->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  nodes->add_option("--out", o.out, "Output file (default: stdout)");

  auto* leb = app.add_subcommand("lebesgue", "Estimate the Lebesgue constant");
  add_node_flags(leb, o.nodes, true);
  leb->add_option("--grid-spacing", o.spacing, "Sample grid step h");
  leb->add_option("--nodes-file", o.nodes_file, "Node table (CSV)");
  leb->add_flag("--symmetric", o.symmetric,
                "Sample one point per permutation orbit");
  leb->add_flag("--refine", o.refine, "Re-sample at h/10 around the maximum");
  leb->add_option("--threads", o.threads, "Worker threads");
  leb->add_option("--out", o.out, "JSON report");

  auto* opt = app.add_subcommand("optimize", "Optimize alpha = beta = gamma");
  opt->add_option("--dim", o.nodes.dim, "Simplex dimension (1-4)")
      ->required()
      ->check(CLI::Range(1, 4));
  opt->add_option("--order", o.nodes.order, "Polynomial order")->required();
  opt->add_flag("--unsafe-order", o.nodes.unsafe_order, "Allow orders up to 20");
  opt->add_option("--grid-spacing", o.spacing, "Sample grid step h");
  opt->add_flag("--coarse-search", o.coarse_search,
                "Search on a grid twice as coarse, report at h");
  opt->add_option("--budget", o.budget, "Maximum objective evaluations")
      ->check(CLI::Range(10, 10000));
  opt->add_flag("--symmetric", o.symmetric,
                "Sample one point per permutation orbit");
  opt->add_option("--threads", o.threads, "Worker threads");
  opt->add_option("--out", o.out, "JSON result with trace");

  auto* plot = app.add_subcommand("plotdata", "Projected node coordinates");
  add_node_flags(plot, o.nodes, false);
  plot->add_option("--projection", o.projection, "full or facet")
      ->check(CLI::IsMember({"full", "facet"}));
  plot->add_option("--out", o.out, "Output CSV (prefix for facet files)");

  auto* ver = app.add_subcommand("verify", "Check against reference data");
  ver->add_option("--level", o.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--threads", o.threads, "Worker threads");
  ver->add_option("--perturb-coefficient", o.perturb)
      ->group("")
      ->check(CLI::Range(0, 15));

  auto* rerun = app.add_subcommand("rerun", "Repeat the run a manifest records");
  rerun->add_option("--manifest", o.manifest, "Manifest JSON")->required();
  rerun->add_option("--out", o.out, "Replace the recorded output path");

  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try
  {
    app.parse(int(argv.size()), argv.data());
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return e.get_exit_code() == 0 ? exit_ok : exit_usage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  io::RunManifest manifest;
  manifest.command = cmd->get_name();
  manifest.flags = collect_flags(cmd);
  manifest.version = io::library_version();
  manifest.timestamp = io::utc_timestamp();

  if (cmd == nodes)
    return cmd_nodes(o, manifest);
  if (cmd == leb)
    return cmd_lebesgue(o, manifest);
  if (cmd == opt)
    return cmd_optimize(o, manifest);
  if (cmd == plot)
    return cmd_plotdata(o, manifest);
  if (cmd == ver)
    return cmd_verify(o);
  return cmd_rerun(o, args.front());
}
} // namespace

int run(const std::vector<std::string>& args)
{
  try
  {
    return dispatch(args);
  }
  catch (const UsageError& e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch (const Error& e)
  {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind())
    {
    case ErrorKind::invalid_argument:
      return exit_usage;
    case ErrorKind::parse_error:
      return exit_parse;
    default:
      return exit_numerical;
    }
  }
}

} // namespace simplex_nodes::cli
