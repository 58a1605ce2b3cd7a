#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "eikonal/metric_graph.hpp"

namespace eikonal {

/// Real function on the points of a metric graph.
class GraphFunction {
 public:
  virtual ~GraphFunction() = default;

  virtual const MetricGraph& graph() const = 0;
  virtual double value(const GraphPoint& x) const = 0;

  /// One-sided derivative d/dt u(advance(germ, t)) at t = 0+, when the
  /// function knows it in closed form. Black-box functions return nullopt and
  /// slope estimates fall back to difference quotients.
  virtual std::optional<double> derivative(const GraphPoint& x, const Germ& germ) const {
    (void)x;
    (void)germ;
    return std::nullopt;
  }
};

/// Function given per edge by knots and values, linear in between. Vertex
/// values must agree across incident edges.
class PiecewiseLinearFunction final : public GraphFunction {
 public:
  struct EdgeSamples {
    std::vector<double> knots;
    std::vector<double> values;
  };

  PiecewiseLinearFunction(std::shared_ptr<const MetricGraph> g, std::vector<EdgeSamples> edges);

  const MetricGraph& graph() const override { return *graph_; }
  double value(const GraphPoint& x) const override;
  std::optional<double> derivative(const GraphPoint& x, const Germ& germ) const override;

 private:
  double on_edge(EdgeId e, double s) const;

  std::shared_ptr<const MetricGraph> graph_;
  std::vector<EdgeSamples> edges_;
  std::vector<double> vertex_values_;
};

/// Value-only wrapper around an arbitrary callable.
class CallableFunction final : public GraphFunction {
 public:
  CallableFunction(std::shared_ptr<const MetricGraph> g, std::function<double(const GraphPoint&)> fn)
      : graph_(std::move(g)), fn_(std::move(fn)) {}

  const MetricGraph& graph() const override { return *graph_; }
  double value(const GraphPoint& x) const override { return fn_(x); }

 private:
  std::shared_ptr<const MetricGraph> graph_;
  std::function<double(const GraphPoint&)> fn_;
};

/// outer(base(x)). Derivatives follow the chain rule when the base has them,
/// which is valid for one-sided derivatives since outer is C^1.
class ComposedFunction final : public GraphFunction {
 public:
  ComposedFunction(std::shared_ptr<const GraphFunction> base, std::function<double(double)> outer,
                   std::function<double(double)> outer_derivative)
      : base_(std::move(base)), outer_(std::move(outer)), outer_derivative_(std::move(outer_derivative)) {}

  const MetricGraph& graph() const override { return base_->graph(); }
  double value(const GraphPoint& x) const override { return outer_(base_->value(x)); }
  std::optional<double> derivative(const GraphPoint& x, const Germ& germ) const override;

 private:
  std::shared_ptr<const GraphFunction> base_;
  std::function<double(double)> outer_;
  std::function<double(double)> outer_derivative_;
};

/// -u.
std::shared_ptr<const GraphFunction> negated(std::shared_ptr<const GraphFunction> u);

}  // namespace eikonal
