#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eikonal/cost_field.hpp"
#include "eikonal/eikonal_solver.hpp"
#include "eikonal/metric_graph.hpp"
#include "eikonal/slope_tools.hpp"

namespace eikonal::io {

using Json = nlohmann::ordered_json;

/// Parsed JSON plus the source line of every value, keyed by JSON pointer.
struct LocatedJson {
  Json doc;
  std::string source;
  std::map<std::string, std::size_t> lines;

  std::size_t line_of(const std::string& pointer) const;
  /// Throws Errc::parse with "source:line: message".
  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const;
};

/// Syntax errors are reported as Errc::parse with the offending line.
LocatedJson parse_located(const std::string& text, const std::string& source);

/// Whole file; Errc::argument when it cannot be read.
std::string read_file(const std::string& path);

/// Graph, cost field and Dirichlet data from one graph document.
struct Problem {
  std::shared_ptr<const MetricGraph> graph;
  std::shared_ptr<const CostField> cost;
  BoundaryData boundary;
};

Problem parse_problem(const LocatedJson& doc);
Problem load_problem(const std::string& path);

/// Two-space indented JSON; doubles with 17 significant digits, non-finite
/// numbers as null. Always ends with a newline.
std::string dump(const Json& value);

/// %.12g
std::string csv_number(double v);

Json profile_json(const EdgeProfile& profile);
/// {"vertex": id} or {"edge": id, "offset": s}.
Json point_json(const MetricGraph& g, const GraphPoint& p);
GraphPoint parse_point(const LocatedJson& doc, const std::string& pointer, const MetricGraph& g);

Json value_function_json(const ValueFunction& u);
/// Errc::validation when the u document does not match the problem's graph.
ValueFunction parse_value_function(const LocatedJson& doc, const Problem& problem);

Json compatibility_json(const MetricGraph& g, const CompatibilityReport& report);
Json monge_json(const MetricGraph& g, const MongeReport& report);
Json dpp_json(const MetricGraph& g, const DppReport& report);
Json subopt_json(const SuboptReport& report);
Json modulus_json(const MetricGraph& g, const ModulusReport& report);

/// {"curves": [{"points": [point, ...]}, ...]}
std::vector<Curve> parse_curves(const LocatedJson& doc, const MetricGraph& g);

/// offset,u at `samples` evenly spaced points of edge e (endpoints included).
void write_edge_csv(std::ostream& os, const GraphFunction& u, EdgeId e, std::size_t samples);
/// point,sub_slope,f_low,f_high,residual per checked sample.
void write_monge_csv(std::ostream& os, const MetricGraph& g, const MongeReport& report);

/// Comma-separated rows of numbers; "inf" and "-inf" are accepted.
std::vector<std::vector<double>> parse_csv_numbers(const std::string& text, const std::string& source);

}  // namespace eikonal::io
