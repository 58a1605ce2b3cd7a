#pragma once

#include <functional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "eikonal/metric_graph.hpp"

namespace eikonal {

struct ConstantProfile {
  double value;
};

/// f(s) = intercept + slope * s, s measured from the edge's `from` end.
struct LinearProfile {
  double intercept;
  double slope;
};

/// Piecewise-linear interpolant through (knots[i], values[i]). Knots are
/// strictly increasing and span [0, length].
struct SampledProfile {
  std::vector<double> knots;
  std::vector<double> values;
};

using EdgeProfile = std::variant<ConstantProfile, LinearProfile, SampledProfile>;

inline constexpr double kDefaultFmin = 1e-6;

/// Right-hand side f of |grad u| = f, one profile per edge, with the
/// cumulative cost F(s) = int_0^s f tabulated at construction. Profiles are
/// required to stay above `fmin` everywhere on their edge.
class CostField {
 public:
  CostField(const MetricGraph& g, std::vector<EdgeProfile> profiles, double fmin = kDefaultFmin);

  static CostField uniform(const MetricGraph& g, double value);

  std::size_t edge_count() const { return edges_.size(); }
  const EdgeProfile& profile(EdgeId e) const { return edges_.at(e).profile; }
  double length(EdgeId e) const { return edges_.at(e).length; }
  double fmin() const { return fmin_; }

  /// f at offset s of edge e.
  double value(EdgeId e, double s) const;
  /// F(s) = int_0^s f.
  double cumulative(EdgeId e, double s) const;
  /// F(length).
  double total(EdgeId e) const { return edges_.at(e).total; }
  /// |F(s2) - F(s1)|; throws Errc::range for offsets outside [0, length].
  double edge_cost(EdgeId e, double s1, double s2) const;

  /// Smallest and largest profile value over all edges.
  double lower_bound() const { return lower_; }
  double upper_bound() const { return upper_; }

  /// Range of f at vertex v over its incident edge ends. Profiles may
  /// disagree at a shared vertex.
  std::pair<double, double> vertex_range(const MetricGraph& g, VertexId v) const;

  /// (f, f) at an edge point, vertex_range at a vertex.
  std::pair<double, double> range_at(const MetricGraph& g, const GraphPoint& p) const;

  /// True when every profile is Constant or Linear.
  bool closed_form() const { return closed_form_; }

  std::vector<double> edge_totals() const;

 private:
  struct EdgeData {
    EdgeProfile profile;
    double length = 0.0;
    double total = 0.0;
    std::vector<double> cumulative;  // at knots, sampled profiles only
  };

  std::vector<EdgeData> edges_;
  double fmin_;
  double lower_ = 0.0;
  double upper_ = 0.0;
  bool closed_form_ = true;
};

/// Samples `fn` at the given knots, clamping values into [lo, hi].
SampledProfile sample_profile(const std::function<double(double)>& fn, std::span<const double> knots,
                              double lo, double hi);

/// `count` uniform knots over [0, length].
std::vector<double> uniform_knots(double length, std::size_t count);

}  // namespace eikonal
