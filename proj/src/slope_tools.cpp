#include "eikonal/slope_tools.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>

#include "eikonal/error.hpp"
#include "eikonal/optical_length.hpp"
#include "eikonal/shortest_path.hpp"

namespace eikonal {

const char* to_string(SlopeMethod m) {
  return m == SlopeMethod::exact_directional ? "exact-directional" : "shrinking-radius";
}

namespace {

double default_r0(const MetricGraph& g, const GraphPoint& x) {
  if (!x.is_vertex()) {
    const double len = g.edge(x.edge()).length;
    const double s = x.offset();
    return 0.5 * std::min(s, len - s);
  }
  double shortest = std::numeric_limits<double>::infinity();
  for (const EdgeEnd& end : g.incident(x.vertex())) {
    shortest = std::min(shortest, g.edge(end.edge).length);
  }
  return 0.5 * shortest;
}

std::atomic<std::size_t> audit_evaluations{0};
std::atomic<std::size_t> audit_violations{0};

SlopeEstimate audited(SlopeEstimate est) {
  ++audit_evaluations;
  if (est.slope != std::max(est.super_slope, est.sub_slope)) ++audit_violations;
  return est;
}

SlopeEstimate from_rates(const GraphPoint& x, std::span<const double> rates, SlopeMethod method) {
  SlopeEstimate est;
  est.point = x;
  est.method = method;
  est.descent = -std::numeric_limits<double>::infinity();
  for (double r : rates) {
    est.super_slope = std::max(est.super_slope, std::max(r, 0.0));
    est.sub_slope = std::max(est.sub_slope, std::max(-r, 0.0));
    est.slope = std::max(est.slope, std::abs(r));
    est.descent = std::max(est.descent, -r);
  }
  return est;
}

}  // namespace

SlopeEstimate slopes(const GraphFunction& u, const GraphPoint& x, const SlopeOptions& options) {
  const MetricGraph& g = u.graph();
  const auto gs = germs(g, x);
  if (gs.empty()) throw Error(Errc::structural, "isolated point " + describe(g, x) + " has no slope");

  if (!options.force_radius) {
    std::vector<double> rates;
    for (const Germ& germ : gs) {
      const auto d = u.derivative(x, germ);
      if (!d) break;
      rates.push_back(*d);
    }
    if (rates.size() == gs.size()) return audited(from_rates(x, rates, SlopeMethod::exact_directional));
  }

  const double r0 = options.r0.value_or(default_r0(g, x));
  if (!(r0 > 0.0)) throw Error(Errc::argument, "slope radius must be positive");
  const SegmentCost length = [](EdgeId, double a, double b) { return std::abs(b - a); };
  const auto dist = vertex_distances(g, x);
  const double ux = u.value(x);

  std::vector<double> quotients;
  std::vector<double> radii;
  for (int k = 0; k <= options.max_k; ++k) {
    const double r = r0 * std::ldexp(1.0, -k);
    radii.push_back(r);
    if (k < options.tail_from) continue;
    for (const Germ& germ : gs) {
      const double step = std::min(r, room(g, germ));
      const GraphPoint y = advance(g, germ, step);
      double d = cost_at(g, dist, y, length);
      if (!x.is_vertex() && !y.is_vertex() && x.edge() == y.edge()) {
        d = std::min(d, std::abs(y.offset() - x.offset()));
      }
      if (!(d > 0.0)) continue;
      quotients.push_back((u.value(y) - ux) / d);
    }
  }
  SlopeEstimate est = from_rates(x, quotients, SlopeMethod::shrinking_radius);
  est.radii = std::move(radii);
  return audited(std::move(est));
}

SlopeAudit slope_audit() { return {audit_evaluations.load(), audit_violations.load()}; }

MongeReport verify_monge(const GraphFunction& u, const CostField& f,
                         const std::vector<GraphPoint>& samples, std::optional<double> tol,
                         const SlopeOptions& options) {
  const MetricGraph& g = u.graph();
  MongeReport report;
  report.tol = tol.value_or(0.0);
  double worst = -1.0;
  for (const GraphPoint& x : samples) {
    if (x.is_vertex() && g.is_boundary(x.vertex())) {
      report.skipped.push_back(x);
      continue;
    }
    MongeSample s{x, slopes(u, x, options)};
    const double eps = tol.value_or(s.estimate.method == SlopeMethod::exact_directional ? 1e-8 : 1e-4);
    report.tol = std::max(report.tol, eps);
    std::tie(s.f_low, s.f_high) = f.range_at(g, x);
    const double sub = s.estimate.sub_slope;
    if (sub > s.f_high) {
      s.residual = sub - s.f_high;
    } else if (sub < s.f_low) {
      s.residual = sub - s.f_low;
    }
    s.sub_ok = sub <= s.f_high + eps;
    s.super_ok = sub >= s.f_low - eps;
    if (x.is_vertex()) {
      s.kink = true;
    } else {
      const double fwd = u.derivative(x, {x.edge(), x.offset(), +1}).value_or(NAN);
      const double bwd = u.derivative(x, {x.edge(), x.offset(), -1}).value_or(NAN);
      s.kink = !(std::abs(fwd + bwd) <= 1e-9 * std::max(1.0, std::abs(fwd)));
    }
    report.subsolution = report.subsolution && s.sub_ok;
    report.supersolution = report.supersolution && s.super_ok;
    const double violation = std::abs(s.residual);
    if (violation > worst) {
      worst = violation;
      report.worst_violation = violation;
      report.worst_point = x;
    }
    report.samples.push_back(std::move(s));
  }
  report.solution = report.subsolution && report.supersolution;
  return report;
}

std::shared_ptr<const GraphFunction> distance_test_function(std::shared_ptr<const MetricGraph> g,
                                                            const GraphPoint& x0,
                                                            std::function<double(double)> h,
                                                            std::function<double(double)> h_prime) {
  auto unit = std::make_shared<const CostField>(CostField::uniform(*g, 1.0));
  const Source src{x0, 0.0};
  auto distance = std::make_shared<const OpticalField>(
      multi_source_optical(std::move(g), std::move(unit), std::span<const Source>(&src, 1)));
  return std::make_shared<ComposedFunction>(std::move(distance), std::move(h), std::move(h_prime));
}

DistanceTestResult distance_test_slope(std::shared_ptr<const MetricGraph> g, const GraphPoint& x0,
                                       std::function<double(double)> h,
                                       std::function<double(double)> h_prime, const GraphPoint& x,
                                       double tol) {
  if (std::abs(h_prime(0.0)) > 1e-15) {
    throw Error(Errc::contract, "distance test function needs h'(0) = 0");
  }
  const double d = graph_distance(*g, x, x0);
  DistanceTestResult result;
  result.expected = h_prime(d);
  if (result.expected < 0.0) {
    std::ostringstream msg;
    msg << "distance test function needs h' >= 0, got h'(" << d << ") = " << result.expected;
    throw Error(Errc::contract, msg.str());
  }
  const auto phi = distance_test_function(std::move(g), x0, std::move(h), std::move(h_prime));
  result.estimate = slopes(*phi, x);
  result.agrees = std::abs(result.estimate.slope - result.expected) <= tol &&
                  std::abs(result.estimate.sub_slope - result.expected) <= tol;
  return result;
}

SemiconcaveReport semiconcave_slope_check(std::span<const double> xs, std::span<const double> values,
                                          double K) {
  if (xs.size() != values.size() || xs.size() < 3) {
    throw Error(Errc::argument, "semiconcavity check needs >= 3 matching samples");
  }
  std::vector<double> shifted(xs.size());
  double scale = 1.0, h = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    shifted[i] = values[i] - K * xs[i] * xs[i];
    scale = std::max(scale, std::abs(shifted[i]));
    if (i > 0) {
      if (!(xs[i] > xs[i - 1])) throw Error(Errc::argument, "sample abscissae must increase");
      h = std::max(h, xs[i] - xs[i - 1]);
    }
  }
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double left = (shifted[i] - shifted[i - 1]) / (xs[i] - xs[i - 1]);
    const double right = (shifted[i + 1] - shifted[i]) / (xs[i + 1] - xs[i]);
    if (right - left > 1e-12 * scale / h) {
      std::ostringstream msg;
      msg << "u - K x^2 is not concave at samples (" << i - 1 << ", " << i << ", " << i + 1
          << ") around x = " << xs[i];
      throw Error(Errc::precondition, msg.str());
    }
  }

  SemiconcaveReport report;
  report.tol = 2.0 * K * h + 1e-12 * scale / h;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double left = (values[i] - values[i - 1]) / (xs[i] - xs[i - 1]);
    const double right = (values[i + 1] - values[i]) / (xs[i + 1] - xs[i]);
    const double sub = std::max({-right, left, 0.0});
    const double slope = std::max(std::abs(right), std::abs(left));
    report.points.push_back({xs[i], sub, slope});
    report.worst_gap = std::max(report.worst_gap, slope - sub);
  }
  report.pass = report.worst_gap <= report.tol;
  return report;
}

}  // namespace eikonal
