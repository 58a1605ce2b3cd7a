// Shared fixtures and independent oracles for the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "eikonal/cost_field.hpp"
#include "eikonal/eikonal_solver.hpp"
#include "eikonal/metric_graph.hpp"

namespace testing_support {

using namespace eikonal;

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

/// [-1, 1] as one edge of length 2 with both ends boundary.
inline std::shared_ptr<const MetricGraph> interval() {
  return std::make_shared<const MetricGraph>(std::vector<Vertex>{{"left", true}, {"right", true}},
                                             std::vector<Edge>{{"i", 0, 1, 2.0}});
}

inline std::shared_ptr<const CostField> unit_cost(const MetricGraph& g) {
  return std::make_shared<const CostField>(CostField::uniform(g, 1.0));
}

struct Instance {
  std::shared_ptr<const MetricGraph> graph;
  std::shared_ptr<const CostField> cost;
  BoundaryData boundary;
};

/// Connected graph with up to `max_vertices` vertices and `max_edges` edges
/// (random spanning tree plus extra edges, parallel edges and self-loops
/// allowed), Linear profiles with values in [fmin, fmax] and boundary data
/// in [0, gmax].
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_vertices = 20, std::size_t max_edges = 40,
                                double fmin = 0.1, double fmax = 5.0, double gmax = 2.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(n - 1, std::max(n - 1, max_edges))(rng);
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), unit(rng) < 0.3});
  vertices[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)].boundary = true;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    edges.push_back({"e" + std::to_string(edges.size()), parent, i, 0.2 + 2.8 * unit(rng)});
  }
  while (edges.size() < m) {
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const std::size_t b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    edges.push_back({"e" + std::to_string(edges.size()), a, b, 0.2 + 2.8 * unit(rng)});
  }
  auto graph = std::make_shared<const MetricGraph>(std::move(vertices), std::move(edges));
  std::vector<EdgeProfile> profiles;
  for (EdgeId e = 0; e < graph->edge_count(); ++e) {
    const double a = fmin + (fmax - fmin) * unit(rng);
    const double c = fmin + (fmax - fmin) * unit(rng);
    profiles.push_back(LinearProfile{a, (c - a) / graph->edge(e).length});
  }
  Instance out{graph, nullptr, {}};
  out.cost = std::make_shared<const CostField>(*graph, std::move(profiles));
  for (VertexId v : graph->boundary_vertices()) out.boundary[v] = gmax * unit(rng);
  return out;
}

/// Brute force: every edge cut into `segments` pieces carrying the cost
/// f(midpoint) * piece length, then plain Dijkstra from the boundary
/// vertices seeded with g. Returns the values at the original vertices.
inline std::vector<double> refined_oracle(const MetricGraph& g, const std::function<double(EdgeId, double)>& f,
                                          const BoundaryData& boundary, std::size_t segments) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(nv);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const double h = ed.length / static_cast<double>(segments);
    std::size_t prev = ed.from;
    for (std::size_t k = 0; k < segments; ++k) {
      std::size_t next;
      if (k + 1 == segments) {
        next = ed.to;
      } else {
        next = adj.size();
        adj.emplace_back();
      }
      const double w = h * f(e, (static_cast<double>(k) + 0.5) * h);
      adj[prev].push_back({next, w});
      adj[next].push_back({prev, w});
      prev = next;
    }
  }
  std::vector<double> dist(adj.size(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (const auto& [v, value] : boundary) {
    dist[v] = std::min(dist[v], value);
    pq.push({dist[v], v});
  }
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (const auto& [w, c] : adj[v]) {
      if (d + c < dist[w]) {
        dist[w] = d + c;
        pq.push({dist[w], w});
      }
    }
  }
  dist.resize(nv);
  return dist;
}

/// Uniformly random point of the graph (edge chosen proportionally to
/// count, offset uniform).
inline GraphPoint random_point(const MetricGraph& g, std::mt19937_64& rng) {
  const EdgeId e = std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng);
  return GraphPoint::on_edge(g, e, std::uniform_real_distribution<double>(0.0, g.edge(e).length)(rng));
}

}  // namespace testing_support
