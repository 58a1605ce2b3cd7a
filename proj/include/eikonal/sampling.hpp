#pragma once

#include <cstdint>
#include <vector>

#include "eikonal/metric_graph.hpp"

namespace eikonal {

/// Every vertex, then `per_edge` evenly spaced interior points of each edge
/// in edge order.
std::vector<GraphPoint> sample_points(const MetricGraph& g, std::size_t per_edge);

/// Seeded random polyline curves. Each starts inside an edge and walks up to
/// `max_hops` vertices, stopping early at a boundary vertex, so boundary
/// vertices only ever appear as endpoints.
std::vector<Curve> random_curves(const MetricGraph& g, std::size_t count, std::uint64_t seed,
                                 std::size_t max_hops = 4);

}  // namespace eikonal
