#include "eikonal/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "eikonal/error.hpp"
#include "eikonal/shortest_path.hpp"

namespace eikonal {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::structural: return "structural";
    case Errc::degenerate: return "degenerate";
    case Errc::domain: return "domain";
    case Errc::range: return "range";
    case Errc::unreachable: return "unreachable";
    case Errc::argument: return "argument";
    case Errc::validation: return "validation";
    case Errc::parse: return "parse";
    case Errc::precondition: return "precondition";
    case Errc::contract: return "contract";
    case Errc::nonmonotone_hamiltonian: return "nonmonotone-hamiltonian";
    case Errc::no_subsolution: return "no-subsolution";
    case Errc::coercivity: return "coercivity";
    case Errc::divergence: return "divergence";
  }
  return "unknown";
}

MetricGraph::MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw Error(Errc::validation, "graph has no vertices");
  adjacency_.resize(vertices_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (!(ed.length > 0.0) || !std::isfinite(ed.length)) {
      throw Error(Errc::validation, "edge '" + ed.name + "' has nonpositive or non-finite length");
    }
    if (ed.from >= vertices_.size() || ed.to >= vertices_.size()) {
      throw Error(Errc::validation, "edge '" + ed.name + "' has an invalid endpoint");
    }
    adjacency_[ed.from].push_back({e, EdgeSide::from});
    adjacency_[ed.to].push_back({e, EdgeSide::to});
  }

  std::vector<bool> seen(vertices_.size(), false);
  std::queue<VertexId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (const EdgeEnd& end : adjacency_[v]) {
      const VertexId w = endpoint(end.edge, end.side == EdgeSide::from ? EdgeSide::to : EdgeSide::from);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  if (reached != vertices_.size()) {
    for (VertexId v = 0; v < vertices_.size(); ++v) {
      if (!seen[v]) {
        throw Error(Errc::validation,
                    "graph is disconnected: vertex '" + vertices_[v].name + "' is unreachable");
      }
    }
  }
}

std::optional<VertexId> MetricGraph::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].name == name) return v;
  }
  return std::nullopt;
}

std::optional<EdgeId> MetricGraph::find_edge(const std::string& name) const {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].name == name) return e;
  }
  return std::nullopt;
}

std::vector<VertexId> MetricGraph::boundary_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].boundary) out.push_back(v);
  }
  return out;
}

double MetricGraph::min_edge_length() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Edge& e : edges_) m = std::min(m, e.length);
  return m;
}

double MetricGraph::total_length() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.length;
  return s;
}

// ---------------------------------------------------------------------------

GraphPoint GraphPoint::at_vertex(VertexId v) { return GraphPoint(false, v, 0.0); }

GraphPoint GraphPoint::on_edge(const MetricGraph& g, EdgeId e, double offset) {
  const Edge& ed = g.edge(e);
  if (!(offset >= 0.0 && offset <= ed.length)) {
    std::ostringstream msg;
    msg << "offset " << offset << " outside [0, " << ed.length << "] on edge '" << ed.name << "'";
    throw Error(Errc::range, msg.str());
  }
  if (offset == 0.0) return at_vertex(ed.from);
  if (offset == ed.length) return at_vertex(ed.to);
  return GraphPoint(true, e, offset);
}

VertexId GraphPoint::vertex() const {
  if (on_edge_) throw Error(Errc::argument, "point is not a vertex");
  return index_;
}

EdgeId GraphPoint::edge() const {
  if (!on_edge_) throw Error(Errc::argument, "point is a vertex");
  return index_;
}

double GraphPoint::offset() const {
  if (!on_edge_) throw Error(Errc::argument, "point is a vertex");
  return offset_;
}

std::string describe(const MetricGraph& g, const GraphPoint& p) {
  std::ostringstream os;
  os.precision(12);
  if (p.is_vertex()) {
    os << "vertex " << g.vertex(p.vertex()).name;
  } else {
    os << "edge " << g.edge(p.edge()).name << " @ " << p.offset();
  }
  return os.str();
}

std::vector<double> offsets_on(const MetricGraph& g, const GraphPoint& p, EdgeId e) {
  if (!p.is_vertex()) {
    if (p.edge() == e) return {p.offset()};
    return {};
  }
  const Edge& ed = g.edge(e);
  std::vector<double> out;
  if (ed.from == p.vertex()) out.push_back(0.0);
  if (ed.to == p.vertex()) out.push_back(ed.length);
  return out;
}

std::vector<Germ> germs(const MetricGraph& g, const GraphPoint& p) {
  std::vector<Germ> out;
  if (!p.is_vertex()) {
    out.push_back({p.edge(), p.offset(), +1});
    out.push_back({p.edge(), p.offset(), -1});
    return out;
  }
  for (const EdgeEnd& end : g.incident(p.vertex())) {
    if (end.side == EdgeSide::from) {
      out.push_back({end.edge, 0.0, +1});
    } else {
      out.push_back({end.edge, g.edge(end.edge).length, -1});
    }
  }
  return out;
}

double room(const MetricGraph& g, const Germ& germ) {
  return germ.sign > 0 ? g.edge(germ.edge).length - germ.base : germ.base;
}

GraphPoint advance(const MetricGraph& g, const Germ& germ, double t) {
  const double available = room(g, germ);
  if (t < 0.0 || t > available) {
    throw Error(Errc::range, "advance beyond the end of edge '" + g.edge(germ.edge).name + "'");
  }
  if (t == available) {
    return GraphPoint::on_edge(g, germ.edge, germ.sign > 0 ? g.edge(germ.edge).length : 0.0);
  }
  double s = germ.base + germ.sign * t;
  s = std::clamp(s, 0.0, g.edge(germ.edge).length);
  return GraphPoint::on_edge(g, germ.edge, s);
}

// ---------------------------------------------------------------------------

Curve Curve::single_point(const MetricGraph& g, const GraphPoint& p) { return Curve(g, p, {}); }

Curve Curve::from_legs(const MetricGraph& g, std::vector<Leg> legs) {
  if (legs.empty()) throw Error(Errc::structural, "curve needs at least one leg");
  for (const Leg& leg : legs) {
    if (leg.edge >= g.edge_count()) throw Error(Errc::structural, "leg on unknown edge");
    const double len = g.edge(leg.edge).length;
    if (!(leg.start >= 0 && leg.start <= len && leg.end >= 0 && leg.end <= len)) {
      throw Error(Errc::structural, "leg offsets outside edge '" + g.edge(leg.edge).name + "'");
    }
  }
  for (std::size_t i = 0; i + 1 < legs.size(); ++i) {
    const GraphPoint a = GraphPoint::on_edge(g, legs[i].edge, legs[i].end);
    const GraphPoint b = GraphPoint::on_edge(g, legs[i + 1].edge, legs[i + 1].start);
    if (!(a == b)) {
      throw Error(Errc::structural, "curve legs " + std::to_string(i) + " and " +
                                        std::to_string(i + 1) + " do not meet");
    }
  }
  const GraphPoint start = GraphPoint::on_edge(g, legs.front().edge, legs.front().start);
  return Curve(g, start, std::move(legs));
}

Curve Curve::through(const MetricGraph& g, std::span<const GraphPoint> points) {
  if (points.empty()) throw Error(Errc::structural, "curve needs at least one point");
  std::vector<Leg> legs;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const GraphPoint& p = points[i];
    const GraphPoint& q = points[i + 1];
    if (p == q) continue;

    std::optional<Leg> best;
    auto consider = [&](EdgeId e) {
      for (double sp : offsets_on(g, p, e)) {
        for (double sq : offsets_on(g, q, e)) {
          Leg leg{e, sp, sq};
          if (leg.length() == 0.0) continue;
          if (!best || leg.length() < best->length()) best = leg;
        }
      }
    };
    if (!p.is_vertex()) {
      consider(p.edge());
    } else if (!q.is_vertex()) {
      consider(q.edge());
    } else {
      for (const EdgeEnd& end : g.incident(p.vertex())) consider(end.edge);
    }
    if (!best) {
      throw Error(Errc::structural, "curve points " + std::to_string(i) + " and " +
                                        std::to_string(i + 1) + " share no edge (" +
                                        describe(g, p) + ", " + describe(g, q) + ")");
    }
    legs.push_back(*best);
  }
  if (legs.empty()) return single_point(g, points.front());
  return from_legs(g, std::move(legs));
}

GraphPoint Curve::end() const {
  if (legs_.empty()) return start_;
  return GraphPoint::on_edge(*graph_, legs_.back().edge, legs_.back().end);
}

std::vector<GraphPoint> Curve::nodes() const {
  std::vector<GraphPoint> out{start_};
  for (const Leg& leg : legs_) out.push_back(GraphPoint::on_edge(*graph_, leg.edge, leg.end));
  return out;
}

Curve Curve::concatenated(const Curve& tail) const {
  if (!(end() == tail.start())) throw Error(Errc::structural, "curves do not meet");
  if (legs_.empty()) return tail;
  if (tail.legs_.empty()) return *this;
  std::vector<Leg> legs = legs_;
  legs.insert(legs.end(), tail.legs_.begin(), tail.legs_.end());
  return from_legs(*graph_, std::move(legs));
}

double curve_length(const Curve& curve) {
  double total = 0.0;
  for (const Leg& leg : curve.legs()) total += leg.length();
  return total;
}

// ---------------------------------------------------------------------------

ArcLengthParametrization::ArcLengthParametrization(Curve curve) : curve_(std::move(curve)) {
  cumulative_.push_back(0.0);
  for (const Leg& leg : curve_.legs()) cumulative_.push_back(cumulative_.back() + leg.length());
  if (!(cumulative_.back() > 0.0)) {
    throw Error(Errc::degenerate, "cannot arc-length parametrize a zero-length curve");
  }
}

std::size_t ArcLengthParametrization::leg_index(double t) const {
  if (!(t >= 0.0 && t <= length())) {
    std::ostringstream msg;
    msg << "curve parameter " << t << " outside [0, " << length() << "]";
    throw Error(Errc::range, msg.str());
  }
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), t);
  std::size_t i = it == cumulative_.end() ? cumulative_.size() - 2
                                          : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  return std::min(i, cumulative_.size() - 2);
}

namespace {

double offset_along(const Leg& leg, double local) {
  if (local >= leg.length()) return leg.end;
  const double s = leg.start < leg.end ? leg.start + local : leg.start - local;
  return std::clamp(s, std::min(leg.start, leg.end), std::max(leg.start, leg.end));
}

}  // namespace

GraphPoint ArcLengthParametrization::at(double t) const {
  const std::size_t i = leg_index(t);
  if (t == length()) return curve_.end();
  const Leg& leg = curve_.legs()[i];
  return GraphPoint::on_edge(curve_.graph(), leg.edge, offset_along(leg, t - cumulative_[i]));
}

Curve ArcLengthParametrization::piece(double t1, double t2) const {
  if (t1 > t2) throw Error(Errc::range, "curve piece with t1 > t2");
  const std::size_t first = leg_index(t1);
  const std::size_t last = leg_index(t2);
  if (t1 == t2) return Curve::single_point(curve_.graph(), at(t1));
  std::vector<Leg> legs;
  for (std::size_t i = first; i <= last; ++i) {
    Leg leg = curve_.legs()[i];
    const double a = i == first ? offset_along(leg, t1 - cumulative_[i]) : leg.start;
    const double b = i == last ? offset_along(leg, t2 - cumulative_[i]) : leg.end;
    legs.push_back({leg.edge, a, b});
  }
  std::erase_if(legs, [](const Leg& l) { return l.length() == 0.0; });
  if (legs.empty()) return Curve::single_point(curve_.graph(), at(t1));
  return Curve::from_legs(curve_.graph(), std::move(legs));
}

Curve ArcLengthParametrization::prefix(double t) const { return piece(0.0, t); }

ArcLengthParametrization arc_length_parametrize(const Curve& curve) {
  return ArcLengthParametrization(curve);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> edge_lengths(const MetricGraph& g) {
  std::vector<double> w;
  w.reserve(g.edge_count());
  for (const Edge& e : g.edges()) w.push_back(e.length);
  return w;
}

double length_between(EdgeId, double s1, double s2) { return std::abs(s2 - s1); }

}  // namespace

double graph_distance(const MetricGraph& g, const GraphPoint& x, const GraphPoint& y) {
  const auto w = edge_lengths(g);
  const double d = point_to_point(g, x, y, w, length_between);
  if (!std::isfinite(d)) throw Error(Errc::unreachable, "points are not connected");
  return d;
}

std::vector<double> vertex_distances(const MetricGraph& g, const GraphPoint& x) {
  const auto w = edge_lengths(g);
  return settle_from_seeds(g, seeds_at(g, x, 0.0, length_between), w);
}

double distance_to_boundary(const MetricGraph& g, const GraphPoint& x) {
  const auto w = edge_lengths(g);
  std::vector<Seed> seeds;
  for (VertexId b : g.boundary_vertices()) seeds.push_back({b, 0.0});
  if (seeds.empty()) return std::numeric_limits<double>::infinity();
  const auto dist = settle_from_seeds(g, seeds, w);
  return cost_at(g, dist, x, length_between);
}

// ---------------------------------------------------------------------------

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::vector<double>> distances)
    : d_(std::move(distances)) {
  const std::size_t n = d_.size();
  if (n == 0) throw Error(Errc::validation, "empty metric space");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i].size() != n) throw Error(Errc::validation, "distance matrix is not square");
    for (double v : d_[i]) {
      if (!std::isfinite(v)) throw Error(Errc::validation, "non-finite distance");
      scale = std::max(scale, std::abs(v));
    }
  }
  const double slack = 1e-12 * scale;
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i][i] != 0.0) throw Error(Errc::validation, "nonzero diagonal entry " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (d_[i][j] != d_[j][i]) {
        throw Error(Errc::validation,
                    "asymmetric entries (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (i != j && !(d_[i][j] > 0.0)) {
        throw Error(Errc::validation,
                    "nonpositive distance (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (d_[i][j] > d_[i][k] + d_[k][j] + slack) {
          throw Error(Errc::validation, "triangle inequality fails at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") via " + std::to_string(k));
        }
      }
    }
  }
}

}  // namespace eikonal
