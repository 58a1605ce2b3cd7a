#include "eikonal/optical_length.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eikonal/error.hpp"
#include "eikonal/shortest_path.hpp"

namespace eikonal {

namespace {

SegmentCost segment_cost(const CostField& f) {
  return [&f](EdgeId e, double s1, double s2) { return f.edge_cost(e, s1, s2); };
}

void check_matches(const MetricGraph& g, const CostField& f) {
  if (f.edge_count() != g.edge_count()) {
    throw Error(Errc::argument, "cost field does not match the graph");
  }
}

bool ties(double candidate, double best) {
  return candidate - best <= 1e-12 * std::max(1.0, std::abs(best));
}

}  // namespace

double optical_length(const MetricGraph& g, const CostField& f, const GraphPoint& x,
                      const GraphPoint& y) {
  check_matches(g, f);
  const auto weights = f.edge_totals();
  const double d = point_to_point(g, x, y, weights, segment_cost(f));
  if (!std::isfinite(d)) throw Error(Errc::unreachable, "points are not connected");
  return d;
}

double path_integral(const Curve& curve, const CostField& f) {
  double total = 0.0;
  for (const Leg& leg : curve.legs()) {
    if (leg.edge >= f.edge_count()) {
      throw Error(Errc::domain, "cost field undefined on a visited edge");
    }
    total += f.edge_cost(leg.edge, leg.start, leg.end);
  }
  return total;
}

double cumulative_path_integral(const ArcLengthParametrization& curve, const CostField& f, double t) {
  return path_integral(curve.prefix(t), f);
}

// ---------------------------------------------------------------------------

OpticalField::OpticalField(std::shared_ptr<const MetricGraph> g, std::shared_ptr<const CostField> f,
                           std::vector<double> vertex_values, std::vector<Source> edge_sources)
    : graph_(std::move(g)),
      cost_(std::move(f)),
      vertex_values_(std::move(vertex_values)),
      edge_sources_(std::move(edge_sources)) {
  check_matches(*graph_, *cost_);
  if (vertex_values_.size() != graph_->vertex_count()) {
    throw Error(Errc::argument, "vertex value table does not match the graph");
  }
  std::erase_if(edge_sources_, [](const Source& s) { return s.point.is_vertex(); });
  std::sort(edge_sources_.begin(), edge_sources_.end(), [](const Source& a, const Source& b) {
    return a.point < b.point || (a.point == b.point && a.cost < b.cost);
  });
}

std::vector<OpticalField::Branch> OpticalField::branches(EdgeId e, double s) const {
  const Edge& ed = graph_->edge(e);
  const double F = cost_->cumulative(e, s);
  const double f = cost_->value(e, s);
  std::vector<Branch> out;
  out.push_back({vertex_values_[ed.from] + F, f, false});
  out.push_back({vertex_values_[ed.to] + (cost_->total(e) - F), -f, false});
  for (const Source& src : edge_sources_) {
    if (src.point.edge() != e) continue;
    const double si = src.point.offset();
    if (s == si) {
      out.push_back({src.cost, 0.0, true});
    } else {
      out.push_back({src.cost + cost_->edge_cost(e, si, s), s > si ? f : -f, false});
    }
  }
  return out;
}

double OpticalField::value(const GraphPoint& x) const {
  if (x.is_vertex()) return vertex_values_[x.vertex()];
  double best = std::numeric_limits<double>::infinity();
  for (const Branch& b : branches(x.edge(), x.offset())) best = std::min(best, b.value);
  return best;
}

std::optional<double> OpticalField::derivative(const GraphPoint&, const Germ& germ) const {
  const auto bs = branches(germ.edge, germ.base);
  double best = std::numeric_limits<double>::infinity();
  for (const Branch& b : bs) best = std::min(best, b.value);
  const double f = cost_->value(germ.edge, germ.base);
  double rate = std::numeric_limits<double>::infinity();
  for (const Branch& b : bs) {
    if (!ties(b.value, best)) continue;
    rate = std::min(rate, b.apex ? f : germ.sign * b.slope);
  }
  return rate;
}

bool OpticalField::is_kink(const GraphPoint& x) const {
  if (x.is_vertex()) return false;
  const auto bs = branches(x.edge(), x.offset());
  double best = std::numeric_limits<double>::infinity();
  for (const Branch& b : bs) best = std::min(best, b.value);
  int active = 0;
  for (const Branch& b : bs) {
    if (ties(b.value, best)) active += b.apex ? 2 : 1;
  }
  return active > 1;
}

OpticalField multi_source_optical(std::shared_ptr<const MetricGraph> g,
                                  std::shared_ptr<const CostField> f, std::span<const Source> sources) {
  if (sources.empty()) throw Error(Errc::argument, "multi-source search needs at least one source");
  check_matches(*g, *f);
  const SegmentCost segment = segment_cost(*f);
  std::vector<Seed> seeds;
  std::vector<Source> edge_sources;
  for (const Source& src : sources) {
    if (!std::isfinite(src.cost)) throw Error(Errc::argument, "source cost must be finite");
    const auto s = seeds_at(*g, src.point, src.cost, segment);
    seeds.insert(seeds.end(), s.begin(), s.end());
    if (!src.point.is_vertex()) edge_sources.push_back(src);
  }
  auto values = settle_from_seeds(*g, seeds, f->edge_totals());
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(Errc::unreachable, "vertex unreachable from the sources");
  }
  return OpticalField(std::move(g), std::move(f), std::move(values), std::move(edge_sources));
}

}  // namespace eikonal
