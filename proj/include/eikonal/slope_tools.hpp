#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "eikonal/cost_field.hpp"
#include "eikonal/graph_function.hpp"
#include "eikonal/metric_graph.hpp"

namespace eikonal {

enum class SlopeMethod { exact_directional, shrinking_radius };

const char* to_string(SlopeMethod m);

struct SlopeOptions {
  /// Radii r_k = r0 * 2^-k for k = 0..max_k; the limsup is read off the
  /// tail k >= tail_from.
  int max_k = 12;
  int tail_from = 8;
  /// Defaults to half the shortest incident edge, capped at half the
  /// distance to the nearer end for edge points.
  std::optional<double> r0;
  /// Use difference quotients even when closed-form derivatives exist.
  bool force_radius = false;
};

/// Local slope |grad u|, super-slope |grad+ u| and sub-slope |grad- u| at a
/// point. `descent` is the signed rate limsup (u(x) - u(y)) / d(x, y).
struct SlopeEstimate {
  GraphPoint point;
  double slope = 0.0;
  double super_slope = 0.0;
  double sub_slope = 0.0;
  double descent = 0.0;
  SlopeMethod method = SlopeMethod::exact_directional;
  std::vector<double> radii;  // empty for the exact method
};

/// Exact one-sided derivatives along every germ when `u` provides them,
/// otherwise shrinking-radius difference quotients. Throws Errc::structural
/// at an isolated vertex.
SlopeEstimate slopes(const GraphFunction& u, const GraphPoint& x, const SlopeOptions& options = {});

/// Process-wide tally of every slopes() call: how often the identity
/// |grad u| = max(|grad+ u|, |grad- u|) was checked and how often it failed.
struct SlopeAudit {
  std::size_t evaluations = 0;
  std::size_t violations = 0;
};
SlopeAudit slope_audit();

struct MongeSample {
  GraphPoint point;
  SlopeEstimate estimate;
  double f_low = 0.0;   // f at an edge point; at a vertex, the range over
  double f_high = 0.0;  // incident edge ends
  double residual = 0.0;  // |grad- u| - f (0 inside [f_low, f_high])
  bool kink = false;
  bool sub_ok = true;
  bool super_ok = true;
};

struct MongeReport {
  std::vector<MongeSample> samples;
  std::vector<GraphPoint> skipped;  // boundary samples
  double tol = 0.0;
  bool subsolution = true;
  bool supersolution = true;
  bool solution = true;
  double worst_violation = 0.0;
  std::optional<GraphPoint> worst_point;
};

/// Residuals |grad- u|(x) - f(x) at interior samples. Default tolerance is
/// 1e-8 for exact slopes and 1e-4 for the radius fallback.
MongeReport verify_monge(const GraphFunction& u, const CostField& f,
                         const std::vector<GraphPoint>& samples, std::optional<double> tol = {},
                         const SlopeOptions& options = {});

struct DistanceTestResult {
  double expected = 0.0;  // h'(d(x, x0))
  SlopeEstimate estimate;  // slopes of h(d(., x0)) at x
  bool agrees = false;
};

/// Self-test of the slope engine on phi = h(d(., x0)): |grad phi| and
/// |grad- phi| should both equal h'(d(x, x0)). Throws Errc::contract when
/// h'(0) != 0 or h' is negative at the evaluated radius.
DistanceTestResult distance_test_slope(std::shared_ptr<const MetricGraph> g, const GraphPoint& x0,
                                       std::function<double(double)> h,
                                       std::function<double(double)> h_prime, const GraphPoint& x,
                                       double tol = 1e-8);

/// phi = h(d(., x0)) with exact directional derivatives.
std::shared_ptr<const GraphFunction> distance_test_function(std::shared_ptr<const MetricGraph> g,
                                                            const GraphPoint& x0,
                                                            std::function<double(double)> h,
                                                            std::function<double(double)> h_prime);

struct SemiconcavePoint {
  double x;
  double sub_slope;
  double slope;
};

struct SemiconcaveReport {
  std::vector<SemiconcavePoint> points;
  double tol = 0.0;
  double worst_gap = 0.0;
  bool pass = true;
};

/// For samples of u with u - K x^2 concave, checks |grad- u| = |grad u| at
/// interior samples of the piecewise-linear interpolant. The sampled identity
/// holds up to 2 K h (h the largest spacing). Throws Errc::precondition on a
/// convex triple.
SemiconcaveReport semiconcave_slope_check(std::span<const double> xs, std::span<const double> values,
                                          double K);

}  // namespace eikonal
