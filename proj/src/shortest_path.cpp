#include "eikonal/shortest_path.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace eikonal {

std::vector<double> settle_from_seeds(const MetricGraph& g, std::span<const Seed> seeds,
                                      std::span<const double> edge_weights) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.vertex_count(), inf);
  std::vector<bool> settled(g.vertex_count(), false);

  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (const Seed& s : seeds) {
    if (s.cost < dist[s.vertex]) {
      dist[s.vertex] = s.cost;
      queue.emplace(s.cost, s.vertex);
    }
  }

  while (!queue.empty()) {
    auto [cost, v] = queue.top();
    queue.pop();
    if (settled[v] || cost > dist[v]) continue;
    settled[v] = true;
    for (const EdgeEnd& end : g.incident(v)) {
      const VertexId w = g.endpoint(end.edge, end.side == EdgeSide::from ? EdgeSide::to
                                                                         : EdgeSide::from);
      const double candidate = cost + edge_weights[end.edge];
      if (candidate < dist[w]) {
        dist[w] = candidate;
        queue.emplace(candidate, w);
      }
    }
  }
  return dist;
}

std::vector<Seed> seeds_at(const MetricGraph& g, const GraphPoint& x, double base,
                           const SegmentCost& segment) {
  if (x.is_vertex()) return {Seed{x.vertex(), base}};
  const Edge& e = g.edge(x.edge());
  return {Seed{e.from, base + segment(x.edge(), 0.0, x.offset())},
          Seed{e.to, base + segment(x.edge(), x.offset(), e.length)}};
}

double cost_at(const MetricGraph& g, std::span<const double> vertex_costs, const GraphPoint& y,
               const SegmentCost& segment) {
  if (y.is_vertex()) return vertex_costs[y.vertex()];
  const Edge& e = g.edge(y.edge());
  return std::min(vertex_costs[e.from] + segment(y.edge(), 0.0, y.offset()),
                  vertex_costs[e.to] + segment(y.edge(), y.offset(), e.length));
}

double point_to_point(const MetricGraph& g, const GraphPoint& x, const GraphPoint& y,
                      std::span<const double> edge_weights, const SegmentCost& segment) {
  if (x == y) return 0.0;
  const auto seeds = seeds_at(g, x, 0.0, segment);
  const auto dist = settle_from_seeds(g, seeds, edge_weights);
  double best = cost_at(g, dist, y, segment);
  if (!x.is_vertex() && !y.is_vertex() && x.edge() == y.edge()) {
    best = std::min(best, segment(x.edge(), x.offset(), y.offset()));
  }
  return best;
}

}  // namespace eikonal
