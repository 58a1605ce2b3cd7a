#include "eikonal/eikonal_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>

#include "eikonal/error.hpp"
#include "eikonal/shortest_path.hpp"

namespace eikonal {

void validate_boundary(const MetricGraph& graph, const BoundaryData& g) {
  const auto boundary = graph.boundary_vertices();
  if (boundary.empty()) throw Error(Errc::argument, "no boundary vertex");
  for (VertexId b : boundary) {
    const auto it = g.find(b);
    if (it == g.end()) {
      throw Error(Errc::argument, "missing boundary value at '" + graph.vertex(b).name + "'");
    }
    if (!std::isfinite(it->second)) {
      throw Error(Errc::argument, "non-finite boundary value at '" + graph.vertex(b).name + "'");
    }
  }
  for (const auto& [v, value] : g) {
    if (v >= graph.vertex_count() || !graph.is_boundary(v)) {
      throw Error(Errc::argument, "boundary value given at a non-boundary vertex");
    }
  }
}

double default_tolerance(const CostField& f) { return f.closed_form() ? 1e-9 : 1e-6; }

ValueFunction ValueFunction::from_vertex_values(std::shared_ptr<const MetricGraph> g,
                                                std::shared_ptr<const CostField> f,
                                                std::vector<double> values, BoundaryData boundary) {
  return ValueFunction(OpticalField(std::move(g), std::move(f), std::move(values)), std::move(boundary));
}

ValueFunction solve(std::shared_ptr<const MetricGraph> graph, std::shared_ptr<const CostField> f,
                    const BoundaryData& g) {
  validate_boundary(*graph, g);
  std::vector<Source> sources;
  for (const auto& [v, value] : g) sources.push_back({GraphPoint::at_vertex(v), value});
  return ValueFunction(multi_source_optical(std::move(graph), std::move(f), sources), g);
}

CompatibilityReport check_compatibility(const MetricGraph& graph, const CostField& f,
                                        const BoundaryData& g, std::optional<double> tol) {
  validate_boundary(graph, g);
  const double eps = tol.value_or(default_tolerance(f));
  const auto weights = f.edge_totals();
  CompatibilityReport report;
  for (const auto& [y, gy] : g) {
    const Seed seed{y, 0.0};
    const auto dist = settle_from_seeds(graph, std::span<const Seed>(&seed, 1), weights);
    for (const auto& [x, gx] : g) {
      if (x == y) continue;
      const double excess = gx - gy - dist[x];
      if (excess > eps) report.violations.push_back({x, y, excess});
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const CompatibilityViolation& a, const CompatibilityViolation& b) {
              return std::tie(a.x, a.y) < std::tie(b.x, b.y);
            });
  report.pass = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct WalkBudgetExceeded {};

class DppWalker {
 public:
  DppWalker(const GraphFunction& u, const CostField& f, std::size_t max_walks)
      : g_(u.graph()), u_(u), f_(f), max_walks_(max_walks) {}

  double best = std::numeric_limits<double>::infinity();
  std::size_t walks = 0;

  void extend(const Germ& germ, double remaining, double acc) {
    const double available = room(g_, germ);
    if (remaining <= available) {
      const double len = g_.edge(germ.edge).length;
      const double target = remaining == available
                                ? (germ.sign > 0 ? len : 0.0)
                                : std::clamp(germ.base + germ.sign * remaining, 0.0, len);
      const GraphPoint y = GraphPoint::on_edge(g_, germ.edge, target);
      best = std::min(best, u_.value(y) + acc + f_.edge_cost(germ.edge, germ.base, target));
      if (++walks > max_walks_) throw WalkBudgetExceeded{};
      return;
    }
    const double end_offset = germ.sign > 0 ? g_.edge(germ.edge).length : 0.0;
    const double reached = acc + f_.edge_cost(germ.edge, germ.base, end_offset);
    const VertexId w = g_.endpoint(germ.edge, germ.sign > 0 ? EdgeSide::to : EdgeSide::from);
    const Germ back{germ.edge, end_offset, -germ.sign};
    for (const Germ& next : germs(g_, GraphPoint::at_vertex(w))) {
      if (next == back) continue;
      extend(next, remaining - available, reached);
    }
  }

 private:
  const MetricGraph& g_;
  const GraphFunction& u_;
  const CostField& f_;
  std::size_t max_walks_;
};

double default_tau(const MetricGraph& g, const GraphPoint& x) {
  if (!x.is_vertex()) return 0.5 * g.edge(x.edge()).length;
  double shortest = std::numeric_limits<double>::infinity();
  for (const EdgeEnd& end : g.incident(x.vertex())) shortest = std::min(shortest, g.edge(end.edge).length);
  return 0.5 * shortest;
}

}  // namespace

DppReport verify_dpp(const GraphFunction& u, const CostField& f, const std::vector<GraphPoint>& samples,
                     const DppOptions& options) {
  const MetricGraph& g = u.graph();
  DppReport report;
  report.tol = options.tol.value_or(default_tolerance(f));
  for (const GraphPoint& x : samples) {
    DppSample sample{x, 0.0, 0.0, 0, false, {}};
    sample.tau = options.tau.value_or(default_tau(g, x));
    if (x.is_vertex() && g.is_boundary(x.vertex())) {
      sample.skipped = true;
      sample.skip_reason = "boundary point";
    } else if (!(sample.tau > 0.0)) {
      sample.skipped = true;
      sample.skip_reason = "nonpositive tau";
    } else if (distance_to_boundary(g, x) < sample.tau) {
      sample.skipped = true;
      sample.skip_reason = "tau exceeds distance to boundary";
    } else if (germs(g, x).empty()) {
      sample.skipped = true;
      sample.skip_reason = "isolated point";
    } else {
      DppWalker walker(u, f, options.max_walks);
      try {
        for (const Germ& germ : germs(g, x)) walker.extend(germ, sample.tau, 0.0);
        sample.walks = walker.walks;
        sample.residual = walker.best - u.value(x);
      } catch (const WalkBudgetExceeded&) {
        sample.skipped = true;
        sample.skip_reason = "walk budget exceeded";
      }
    }
    if (sample.skipped) {
      ++report.skipped;
    } else if (!report.worst_point || std::abs(sample.residual) > report.worst_residual) {
      report.worst_residual = std::abs(sample.residual);
      report.worst_point = x;
    }
    report.samples.push_back(std::move(sample));
  }
  report.pass = report.worst_residual <= report.tol;
  return report;
}

// ---------------------------------------------------------------------------

SuboptReport verify_suboptimality(const GraphFunction& u, const CostField& f,
                                  const std::vector<Curve>& curves, const SuboptOptions& options) {
  const MetricGraph& g = u.graph();
  const double eps = options.tol.value_or(default_tolerance(f));
  SuboptReport report;
  report.worst_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const Curve& curve = curves[c];
    const auto nodes = curve.nodes();
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
      if (nodes[i].is_vertex() && g.is_boundary(nodes[i].vertex())) {
        throw Error(Errc::argument, "curve " + std::to_string(c) + " passes through boundary " +
                                        describe(g, nodes[i]));
      }
    }
    if (curve.legs().empty() || curve_length(curve) == 0.0) continue;

    const ArcLengthParametrization param(curve);
    std::vector<double> ts{0.0};
    for (const Leg& leg : curve.legs()) ts.push_back(ts.back() + leg.length());
    ts.back() = param.length();
    std::mt19937_64 rng(options.seed + c);
    std::uniform_real_distribution<double> unit(0.0, param.length());
    for (std::size_t k = 0; k < options.extra_samples; ++k) ts.push_back(unit(rng));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<double> values, costs;
    for (double t : ts) {
      values.push_back(u.value(param.at(t)));
      costs.push_back(cumulative_path_integral(param, f, t));
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        const double rise = values[j] - values[i];
        const double cost = costs[j] - costs[i];
        ++report.pairs_checked;
        report.worst_excess = std::max(report.worst_excess, rise - cost);
        if (rise - cost > eps) report.violations.push_back({c, ts[i], ts[j], rise, cost});
      }
    }
  }
  if (report.pairs_checked == 0) report.worst_excess = 0.0;
  report.pass = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------

double boundary_lipschitz(const MetricGraph& graph, const BoundaryData& g) {
  double lip = 0.0;
  for (const auto& [x, gx] : g) {
    const auto dist = vertex_distances(graph, GraphPoint::at_vertex(x));
    for (const auto& [y, gy] : g) {
      if (x == y) continue;
      lip = std::max(lip, std::abs(gx - gy) / dist[y]);
    }
  }
  return lip;
}

ModulusReport boundary_modulus(const ValueFunction& u, std::optional<double> lipschitz,
                               const std::vector<GraphPoint>& samples, std::optional<double> tol) {
  const MetricGraph& g = u.graph();
  const CostField& f = u.cost();
  const BoundaryData& data = u.boundary();
  const double eps = tol.value_or(default_tolerance(f));

  ModulusReport report;
  const double measured = boundary_lipschitz(g, data);
  if (lipschitz && *lipschitz < measured - eps) {
    std::ostringstream msg;
    msg << "declared Lipschitz constant " << *lipschitz << " is below the measured " << measured;
    throw Error(Errc::precondition, msg.str());
  }
  report.lipschitz = lipschitz.value_or(measured);
  report.sup_f = f.upper_bound();
  report.compatible = check_compatibility(g, f, data, eps).pass;

  std::vector<GraphPoint> points = samples;
  if (points.empty()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) points.push_back(GraphPoint::at_vertex(v));
  }
  const SegmentCost length = [](EdgeId, double a, double b) { return std::abs(b - a); };
  for (const auto& [y, gy] : data) {
    const auto dist = vertex_distances(g, GraphPoint::at_vertex(y));
    for (const GraphPoint& x : points) {
      const double d = cost_at(g, dist, x, length);
      const double gap = u.value(x) - gy;
      ++report.pairs;
      const double weak = d * std::max(report.lipschitz, report.sup_f);
      if (gap > weak + eps) report.violations.push_back({x, y, d, gap, weak, false});
      if (report.compatible) {
        const double strong = 2.0 * d * report.sup_f + report.lipschitz * 2.0 * d;
        if (std::abs(gap) > strong + eps) report.violations.push_back({x, y, d, gap, strong, true});
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace eikonal
