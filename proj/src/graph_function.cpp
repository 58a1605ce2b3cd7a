#include "eikonal/graph_function.hpp"

#include <algorithm>
#include <cmath>

#include "eikonal/error.hpp"

namespace eikonal {

PiecewiseLinearFunction::PiecewiseLinearFunction(std::shared_ptr<const MetricGraph> g,
                                                 std::vector<EdgeSamples> edges)
    : graph_(std::move(g)), edges_(std::move(edges)) {
  const MetricGraph& graph = *graph_;
  if (edges_.size() != graph.edge_count()) {
    throw Error(Errc::validation, "piecewise-linear function needs one sample set per edge");
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    EdgeSamples& s = edges_[e];
    const double len = graph.edge(e).length;
    if (s.knots.size() < 2 || s.knots.size() != s.values.size() || s.knots.front() != 0.0 ||
        std::abs(s.knots.back() - len) > 1e-12 * len) {
      throw Error(Errc::validation, "bad knots on edge '" + graph.edge(e).name + "'");
    }
    s.knots.back() = len;
    for (std::size_t k = 0; k + 1 < s.knots.size(); ++k) {
      if (!(s.knots[k] < s.knots[k + 1])) {
        throw Error(Errc::validation, "knots not increasing on edge '" + graph.edge(e).name + "'");
      }
    }
  }
  vertex_values_.assign(graph.vertex_count(), 0.0);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    bool first = true;
    for (const EdgeEnd& end : graph.incident(v)) {
      const EdgeSamples& s = edges_[end.edge];
      const double val = end.side == EdgeSide::from ? s.values.front() : s.values.back();
      if (first) {
        vertex_values_[v] = val;
        first = false;
      } else if (std::abs(val - vertex_values_[v]) > 1e-12 * std::max(1.0, std::abs(val))) {
        throw Error(Errc::validation,
                    "edge samples disagree at vertex '" + graph.vertex(v).name + "'");
      }
    }
  }
}

double PiecewiseLinearFunction::on_edge(EdgeId e, double s) const {
  const EdgeSamples& p = edges_[e];
  const auto it = std::upper_bound(p.knots.begin(), p.knots.end(), s);
  std::size_t k = it == p.knots.begin() ? 0 : static_cast<std::size_t>(it - p.knots.begin()) - 1;
  k = std::min(k, p.knots.size() - 2);
  if (s == p.knots[k]) return p.values[k];
  if (s == p.knots[k + 1]) return p.values[k + 1];
  const double w = (s - p.knots[k]) / (p.knots[k + 1] - p.knots[k]);
  return p.values[k] + w * (p.values[k + 1] - p.values[k]);
}

double PiecewiseLinearFunction::value(const GraphPoint& x) const {
  if (x.is_vertex()) return vertex_values_[x.vertex()];
  return on_edge(x.edge(), x.offset());
}

std::optional<double> PiecewiseLinearFunction::derivative(const GraphPoint&, const Germ& germ) const {
  const EdgeSamples& p = edges_[germ.edge];
  const double s = germ.base;
  std::size_t k;
  if (germ.sign > 0) {
    const auto it = std::upper_bound(p.knots.begin(), p.knots.end(), s);
    k = it == p.knots.begin() ? 0 : static_cast<std::size_t>(it - p.knots.begin()) - 1;
    k = std::min(k, p.knots.size() - 2);
  } else {
    const auto it = std::lower_bound(p.knots.begin(), p.knots.end(), s);
    k = it == p.knots.begin() ? 0 : static_cast<std::size_t>(it - p.knots.begin()) - 1;
  }
  const double slope = (p.values[k + 1] - p.values[k]) / (p.knots[k + 1] - p.knots[k]);
  return germ.sign * slope;
}

std::optional<double> ComposedFunction::derivative(const GraphPoint& x, const Germ& germ) const {
  const auto inner = base_->derivative(x, germ);
  if (!inner) return std::nullopt;
  return outer_derivative_(base_->value(x)) * *inner;
}

std::shared_ptr<const GraphFunction> negated(std::shared_ptr<const GraphFunction> u) {
  return std::make_shared<ComposedFunction>(
      std::move(u), [](double t) { return -t; }, [](double) { return -1.0; });
}

}  // namespace eikonal
