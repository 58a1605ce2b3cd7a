#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eikonal {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Vertex {
  std::string name;
  bool boundary = false;
};

struct Edge {
  std::string name;
  VertexId from = 0;
  VertexId to = 0;
  double length = 0.0;
};

enum class EdgeSide { from, to };

/// One end of an edge as seen from a vertex. A self-loop contributes two
/// entries to its vertex, one per side.
struct EdgeEnd {
  EdgeId edge;
  EdgeSide side;
};

/// Finite connected graph whose edges are isometric copies of [0, length].
/// Immutable after construction; the constructor validates edge lengths,
/// endpoint ids and connectivity.
class MetricGraph {
 public:
  MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeEnd> incident(VertexId v) const { return adjacency_.at(v); }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;

  bool is_boundary(VertexId v) const { return vertices_.at(v).boundary; }
  std::vector<VertexId> boundary_vertices() const;

  VertexId endpoint(EdgeId e, EdgeSide side) const {
    const Edge& ed = edges_.at(e);
    return side == EdgeSide::from ? ed.from : ed.to;
  }
  double min_edge_length() const;
  double total_length() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeEnd>> adjacency_;
};

/// A point of the graph: a vertex, or an edge together with an offset
/// strictly inside (0, length). Offsets 0 and length are always stored in
/// vertex form, so `==` is exact point equality.
class GraphPoint {
 public:
  /// Vertex 0.
  GraphPoint() = default;
  static GraphPoint at_vertex(VertexId v);
  /// Canonicalizing constructor; throws Errc::range outside [0, length].
  static GraphPoint on_edge(const MetricGraph& g, EdgeId e, double offset);

  bool is_vertex() const { return on_edge_ == false; }
  VertexId vertex() const;
  EdgeId edge() const;
  double offset() const;

  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
  friend auto operator<=>(const GraphPoint&, const GraphPoint&) = default;

 private:
  GraphPoint(bool on_edge, std::size_t index, double offset)
      : on_edge_(on_edge), index_(index), offset_(offset) {}

  bool on_edge_ = false;
  std::size_t index_ = 0;
  double offset_ = 0.0;
};

std::string describe(const MetricGraph& g, const GraphPoint& p);

/// Offsets of `p` on edge `e` (two entries for the vertex of a self-loop,
/// none when `p` does not lie on `e`).
std::vector<double> offsets_on(const MetricGraph& g, const GraphPoint& p, EdgeId e);

/// Initial segment of an edge leaving a point: the offset it starts from and
/// the direction (+1 towards `to`, -1 towards `from`).
struct Germ {
  EdgeId edge;
  double base;
  int sign;

  friend bool operator==(const Germ&, const Germ&) = default;
};

/// All germs at `p`: two for an edge point, one per incident edge end for a
/// vertex.
std::vector<Germ> germs(const MetricGraph& g, const GraphPoint& p);

/// Arc length available along the germ before the edge ends.
double room(const MetricGraph& g, const Germ& germ);

/// Point reached after travelling `t` along the germ; `t` must not exceed
/// `room`.
GraphPoint advance(const MetricGraph& g, const Germ& germ, double t);

/// Straight traversal of part of one edge, from offset `start` to `end`.
struct Leg {
  EdgeId edge;
  double start;
  double end;

  double length() const { return start < end ? end - start : start - end; }
};

/// Finite polyline in the graph. Keeps a pointer to its graph, which must
/// outlive the curve.
class Curve {
 public:
  static Curve single_point(const MetricGraph& g, const GraphPoint& p);
  /// Throws Errc::structural unless legs chain end-to-start.
  static Curve from_legs(const MetricGraph& g, std::vector<Leg> legs);
  /// Consecutive points must share an edge (Errc::structural otherwise).
  /// Vertex to vertex hops use the shortest joining edge, lowest id on ties.
  static Curve through(const MetricGraph& g, std::span<const GraphPoint> points);

  const MetricGraph& graph() const { return *graph_; }
  const GraphPoint& start() const { return start_; }
  GraphPoint end() const;
  std::span<const Leg> legs() const { return legs_; }

  /// Points where the curve changes leg, including both ends.
  std::vector<GraphPoint> nodes() const;

  Curve concatenated(const Curve& tail) const;

 private:
  Curve(const MetricGraph& g, GraphPoint start, std::vector<Leg> legs)
      : graph_(&g), start_(start), legs_(std::move(legs)) {}

  const MetricGraph* graph_;
  GraphPoint start_;
  std::vector<Leg> legs_;
};

double curve_length(const Curve& curve);

/// Evaluator t -> curve point for t in [0, length], unit speed.
class ArcLengthParametrization {
 public:
  explicit ArcLengthParametrization(Curve curve);

  double length() const { return cumulative_.back(); }
  GraphPoint at(double t) const;
  /// Restriction of the curve to [0, t].
  Curve prefix(double t) const;
  /// Restriction of the curve to [t1, t2], t1 <= t2.
  Curve piece(double t1, double t2) const;
  const Curve& curve() const { return curve_; }

 private:
  std::size_t leg_index(double t) const;

  Curve curve_;
  std::vector<double> cumulative_;
};

/// Throws Errc::degenerate for zero-length curves.
ArcLengthParametrization arc_length_parametrize(const Curve& curve);

/// Shortest-path distance; throws Errc::unreachable (cannot happen on a
/// validated graph, kept for completeness).
double graph_distance(const MetricGraph& g, const GraphPoint& x, const GraphPoint& y);

/// Distances from `x` to every vertex.
std::vector<double> vertex_distances(const MetricGraph& g, const GraphPoint& x);

/// Distance from `x` to the nearest boundary vertex (infinity without one).
double distance_to_boundary(const MetricGraph& g, const GraphPoint& x);

/// Finite metric space given by its distance matrix.
class FiniteMetricSpace {
 public:
  /// Validates symmetry, zero diagonal, positivity and the triangle
  /// inequality (Errc::validation).
  explicit FiniteMetricSpace(std::vector<std::vector<double>> distances);

  std::size_t size() const { return d_.size(); }
  double distance(std::size_t i, std::size_t j) const { return d_[i][j]; }

 private:
  std::vector<std::vector<double>> d_;
};

}  // namespace eikonal
