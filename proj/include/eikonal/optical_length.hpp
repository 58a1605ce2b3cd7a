#pragma once

#include <memory>
#include <span>
#include <vector>

#include "eikonal/cost_field.hpp"
#include "eikonal/graph_function.hpp"
#include "eikonal/metric_graph.hpp"

namespace eikonal {

/// Weighted distance L_f(x, y) = min over polylines of the integral of f.
/// Exact on graphs: Dijkstra over full-edge costs plus split end edges.
double optical_length(const MetricGraph& g, const CostField& f, const GraphPoint& x,
                      const GraphPoint& y);

/// Integral of f along the curve, leg by leg.
double path_integral(const Curve& curve, const CostField& f);

/// Integral of f along the arc-length parametrized curve over [0, t].
double cumulative_path_integral(const ArcLengthParametrization& curve, const CostField& f, double t);

struct Source {
  GraphPoint point;
  double cost;
};

/// x -> min_i (cost_i + L_f(source_i, x)). Within an edge the value is
/// min(u(from) + F(s), u(to) + F(L) - F(s)) plus the direct term of any
/// source lying inside that edge.
class OpticalField : public GraphFunction {
 public:
  OpticalField(std::shared_ptr<const MetricGraph> g, std::shared_ptr<const CostField> f,
               std::vector<double> vertex_values, std::vector<Source> edge_sources = {});

  const MetricGraph& graph() const override { return *graph_; }
  const CostField& cost() const { return *cost_; }
  std::shared_ptr<const MetricGraph> graph_ptr() const { return graph_; }
  std::shared_ptr<const CostField> cost_ptr() const { return cost_; }

  double value(const GraphPoint& x) const override;
  std::optional<double> derivative(const GraphPoint& x, const Germ& germ) const override;

  std::span<const double> vertex_values() const { return vertex_values_; }
  std::span<const Source> edge_sources() const { return edge_sources_; }

  /// Whether more than one branch of the within-edge minimum is active at
  /// an edge point, i.e. the point is a kink of the evaluator.
  bool is_kink(const GraphPoint& x) const;

 private:
  struct Branch {
    double value;
    double slope;  // d/ds; for the apex of a source branch, see derivative()
    bool apex;
  };
  std::vector<Branch> branches(EdgeId e, double s) const;

  std::shared_ptr<const MetricGraph> graph_;
  std::shared_ptr<const CostField> cost_;
  std::vector<double> vertex_values_;
  std::vector<Source> edge_sources_;
};

/// Throws Errc::argument on an empty source list or non-finite costs.
OpticalField multi_source_optical(std::shared_ptr<const MetricGraph> g,
                                  std::shared_ptr<const CostField> f, std::span<const Source> sources);

}  // namespace eikonal
