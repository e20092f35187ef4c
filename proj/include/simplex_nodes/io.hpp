#pragma once

#include "simplex_nodes/geometry.hpp"
#include "simplex_nodes/lebesgue.hpp"
#include "simplex_nodes/optimize.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace simplex_nodes::io
{

inline constexpr int schema_version = 1;

/// "%.15f", or "0" for an exact zero.
std::string format_weight(double v);

/// Header "lambda1,...,lambda{d+1}" followed by one row per node.
void write_nodes_csv(std::ostream& out, const NodeSet& nodes);

/// Parses write_nodes_csv output; the dimension comes from the header and
/// the order from the row count. Throws ErrorKind::parse_error naming the
/// offending line. `source` is used in messages.
NodeSet read_nodes_csv(std::istream& in, const std::string& source = "<input>");
NodeSet read_nodes_csv_file(const std::string& path);

/// Order p with node_count(dim, p) == count, or -1.
int order_from_count(int dim, std::size_t count);

struct RunManifest
{
  std::string command;
  std::map<std::string, std::string> flags;
  std::string version;
  std::string timestamp; // UTC, ISO 8601
  double h = 0.0;
  double elapsed = 0.0;
  std::vector<std::string> outputs;
};

std::string library_version();
std::string utc_timestamp();

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

nlohmann::json point_json(const BarycentricPoint& pt);
nlohmann::json report_json(const lebesgue::LebesgueReport& r);
nlohmann::json report_json(const optimize::OptimizationResult& r);

/// Nodes with barycentric and Cartesian coordinates.
nlohmann::json nodes_json(const NodeSet& nodes);

} // namespace simplex_nodes::io
