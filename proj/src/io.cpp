#include "simplex_nodes/io.hpp"
#include "simplex_nodes/error.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace simplex_nodes::io
{
namespace
{
std::vector<std::string> split(const std::string& line)
{
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ','))
    out.push_back(cell);
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& what)
{
  throw Error(ErrorKind::parse_error,
              source + ":" + std::to_string(line) + ": " + what);
}

const char* ordering_name(NodeOrdering o)
{
  return o == NodeOrdering::lattice ? "lattice" : "external";
}
} // namespace

//-----------------------------------------------------------------------------
std::string format_weight(double v)
{
  if (v == 0.0)
    return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  return buf;
}

void write_nodes_csv(std::ostream& out, const NodeSet& nodes)
{
  for (int k = 1; k <= nodes.dim + 1; ++k)
    out << (k > 1 ? "," : "") << "lambda" << k;
  out << '\n';
  for (const auto& pt : nodes.bary)
  {
    for (int k = 0; k <= nodes.dim; ++k)
      out << (k > 0 ? "," : "") << format_weight(pt.lambda[k]);
    out << '\n';
  }
}

int order_from_count(int dim, std::size_t count)
{
  for (int p = 0; p <= 64; ++p)
  {
    const auto n = node_count(dim, p);
    if (n == std::int64_t(count))
      return p;
    if (n > std::int64_t(count))
      break;
  }
  return -1;
}

NodeSet read_nodes_csv(std::istream& in, const std::string& source)
{
  std::string line;
  int lineno = 0;
  int dim = -1;
  std::vector<BarycentricPoint> pts;
  while (std::getline(in, line))
  {
    ++lineno;
    if (trim(line).empty())
      continue;
    const auto cells = split(line);
    if (dim < 0)
    {
      if (cells.size() < 2 || cells.size() > max_dim + 1)
        fail(source, lineno, "header must name 2 to 5 columns");
      for (std::size_t k = 0; k < cells.size(); ++k)
      {
        if (trim(cells[k]) != "lambda" + std::to_string(k + 1))
        {
          fail(source, lineno,
               "expected header column 'lambda" + std::to_string(k + 1)
                   + "', got '" + trim(cells[k]) + "'");
        }
      }
      dim = int(cells.size()) - 1;
      continue;
    }
    if (int(cells.size()) != dim + 1)
    {
      fail(source, lineno,
           "expected " + std::to_string(dim + 1) + " values, got "
               + std::to_string(cells.size()));
    }
    BarycentricPoint pt;
    pt.dim = dim;
    double sum = 0.0;
    for (int k = 0; k <= dim; ++k)
    {
      const std::string cell = trim(cells[k]);
      double v = 0.0;
      const auto [end, ec]
          = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || end != cell.data() + cell.size()
          || !std::isfinite(v))
      {
        fail(source, lineno,
             "column " + std::to_string(k + 1) + ": '" + cell
                 + "' is not a number");
      }
      if (v < -1e-9)
        fail(source, lineno, "negative barycentric weight");
      pt.lambda[k] = v;
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      fail(source, lineno, "barycentric weights do not sum to 1");
    pts.push_back(pt);
  }
  if (dim < 0)
    fail(source, lineno, "missing header");
  const int order = order_from_count(dim, pts.size());
  if (order < 1)
  {
    fail(source, lineno,
         std::to_string(pts.size()) + " nodes is not a complete set for d="
             + std::to_string(dim));
  }
  return make_node_set(dim, order, std::move(pts), NodeOrdering::external);
}

NodeSet read_nodes_csv_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::parse_error, path + ": cannot open file");
  return read_nodes_csv(in, path);
}

//-----------------------------------------------------------------------------
std::string library_version() { return "1.0.0"; }

std::string utc_timestamp()
{
  const std::time_t now
      = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json point_json(const BarycentricPoint& pt)
{
  return std::vector<double>(pt.values().begin(), pt.values().end());
}

void to_json(nlohmann::json& j, const RunManifest& m)
{
  j = {{"command", m.command}, {"flags", m.flags},     {"version", m.version},
       {"timestamp", m.timestamp}, {"h", m.h},         {"elapsed", m.elapsed},
       {"outputs", m.outputs}};
}

void from_json(const nlohmann::json& j, RunManifest& m)
{
  j.at("command").get_to(m.command);
  j.at("flags").get_to(m.flags);
  m.version = j.value("version", "");
  m.timestamp = j.value("timestamp", "");
  m.h = j.value("h", 0.0);
  m.elapsed = j.value("elapsed", 0.0);
  m.outputs = j.value("outputs", std::vector<std::string>{});
}

nlohmann::json report_json(const lebesgue::LebesgueReport& r)
{
  nlohmann::json j = {{"d", r.dim},
                      {"p", r.order},
                      {"h", r.h},
                      {"lambda_est", r.lambda_est},
                      {"argmax_point", point_json(r.argmax)},
                      {"samples", r.samples},
                      {"elapsed", r.elapsed}};
  if (r.params)
  {
    j["params"] = {{"alpha", r.params->alpha},
                   {"beta", r.params->beta},
                   {"gamma", r.params->gamma}};
  }
  else
  {
    j["params"] = nullptr;
  }
  return j;
}

nlohmann::json report_json(const optimize::OptimizationResult& r)
{
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& e : r.trace)
  {
    // JSON has no infinity; invalid warps are written as null.
    trace.push_back({{"alpha", e.alpha},
                     {"lambda", std::isfinite(e.lambda)
                                    ? nlohmann::json(e.lambda)
                                    : nlohmann::json(nullptr)},
                     {"h", e.h}});
  }
  return {{"d", r.dim},
          {"p", r.order},
          {"alpha_star", r.alpha_star},
          {"lambda_star", r.lambda_star},
          {"h", r.h},
          {"search_h", r.search_h},
          {"trace", trace}};
}

nlohmann::json nodes_json(const NodeSet& nodes)
{
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i)
  {
    pts.push_back(
        {{"lambda", point_json(nodes.bary[i])},
         {"r", std::vector<double>(nodes.cart[i].coords().begin(),
                                   nodes.cart[i].coords().end())}});
  }
  return {{"d", nodes.dim},
          {"p", nodes.order},
          {"ordering", ordering_name(nodes.ordering)},
          {"nodes", pts}};
}

} // namespace simplex_nodes::io
