#pragma once

#include <functional>
#include <span>
#include <vector>

#include "eikonal/metric_graph.hpp"

namespace eikonal {

struct Seed {
  VertexId vertex;
  double cost;
};

/// Dijkstra from several seeded vertices with nonnegative edge weights.
/// Queue entries are ordered by (cost, vertex id), so the settle order and
/// therefore the result are independent of seed order. Unreached vertices
/// get +infinity.
std::vector<double> settle_from_seeds(const MetricGraph& g, std::span<const Seed> seeds,
                                      std::span<const double> edge_weights);

/// Cost of travelling along edge `e` between two offsets.
using SegmentCost = std::function<double(EdgeId e, double s1, double s2)>;

/// Seeds that start a search at `x` with initial cost `base`: the vertex
/// itself, or both endpoints of the edge holding `x`.
std::vector<Seed> seeds_at(const MetricGraph& g, const GraphPoint& x, double base,
                           const SegmentCost& segment);

/// Extends settled vertex costs to an arbitrary point by entering its edge
/// from either end.
double cost_at(const MetricGraph& g, std::span<const double> vertex_costs, const GraphPoint& y,
               const SegmentCost& segment);

/// Minimal cost between two points; `edge_weights[e] == segment(e, 0, L)`.
/// Includes the direct route when both points sit on the same edge.
double point_to_point(const MetricGraph& g, const GraphPoint& x, const GraphPoint& y,
                      std::span<const double> edge_weights, const SegmentCost& segment);

}  // namespace eikonal
