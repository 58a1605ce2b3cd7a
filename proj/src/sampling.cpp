#include "eikonal/sampling.hpp"

#include <random>

namespace eikonal {

std::vector<GraphPoint> sample_points(const MetricGraph& g, std::size_t per_edge) {
  std::vector<GraphPoint> points;
  for (VertexId v = 0; v < g.vertex_count(); ++v) points.push_back(GraphPoint::at_vertex(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double len = g.edge(e).length;
    for (std::size_t i = 1; i <= per_edge; ++i) {
      points.push_back(GraphPoint::on_edge(g, e, len * static_cast<double>(i) /
                                                     static_cast<double>(per_edge + 1)));
    }
  }
  return points;
}

std::vector<Curve> random_curves(const MetricGraph& g, std::size_t count, std::uint64_t seed,
                                 std::size_t max_hops) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  std::vector<Curve> curves;
  curves.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    EdgeId e = pick(g.edge_count());
    std::vector<GraphPoint> points{GraphPoint::on_edge(g, e, unit(rng) * g.edge(e).length)};
    VertexId v = pick(2) == 0 ? g.edge(e).from : g.edge(e).to;
    const std::size_t hops = 1 + pick(max_hops);
    for (std::size_t h = 0; h < hops; ++h) {
      points.push_back(GraphPoint::at_vertex(v));
      if (g.is_boundary(v)) break;
      const auto& inc = g.incident(v);
      const EdgeEnd end = inc[pick(inc.size())];
      e = end.edge;
      if (h + 1 == hops || g.edge(e).from == g.edge(e).to) {
        points.push_back(GraphPoint::on_edge(g, e, unit(rng) * g.edge(e).length));
        break;
      }
      v = g.endpoint(e, end.side == EdgeSide::from ? EdgeSide::to : EdgeSide::from);
    }
    curves.push_back(Curve::through(g, points));
  }
  return curves;
}

}  // namespace eikonal
