#include "eikonal/cost_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "eikonal/error.hpp"

namespace eikonal {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t segment_of(const SampledProfile& p, double s) {
  const auto it = std::upper_bound(p.knots.begin(), p.knots.end(), s);
  std::size_t k = it == p.knots.begin() ? 0 : static_cast<std::size_t>(it - p.knots.begin()) - 1;
  return std::min(k, p.knots.size() - 2);
}

double interpolate(const SampledProfile& p, double s) {
  const std::size_t k = segment_of(p, s);
  const double s0 = p.knots[k], s1 = p.knots[k + 1];
  if (s == s0) return p.values[k];
  if (s == s1) return p.values[k + 1];
  const double w = (s - s0) / (s1 - s0);
  return p.values[k] + w * (p.values[k + 1] - p.values[k]);
}

std::string edge_label(const MetricGraph& g, EdgeId e) { return "edge '" + g.edge(e).name + "'"; }

}  // namespace

CostField::CostField(const MetricGraph& g, std::vector<EdgeProfile> profiles, double fmin)
    : fmin_(fmin) {
  if (!(fmin > 0.0)) throw Error(Errc::validation, "fmin must be positive");
  if (profiles.size() != g.edge_count()) {
    throw Error(Errc::validation, "cost field has " + std::to_string(profiles.size()) +
                                      " profiles for " + std::to_string(g.edge_count()) + " edges");
  }
  lower_ = std::numeric_limits<double>::infinity();
  upper_ = -std::numeric_limits<double>::infinity();
  edges_.reserve(profiles.size());
  for (EdgeId e = 0; e < profiles.size(); ++e) {
    EdgeData data{std::move(profiles[e]), g.edge(e).length, 0.0, {}};
    const double len = data.length;
    auto check = [&](double v, const char* where) {
      if (!std::isfinite(v) || v < fmin_) {
        std::ostringstream msg;
        msg << "cost profile on " << edge_label(g, e) << " is " << v << " at " << where
            << " (must be >= fmin = " << fmin_ << ")";
        throw Error(Errc::validation, msg.str());
      }
      lower_ = std::min(lower_, v);
      upper_ = std::max(upper_, v);
    };
    std::visit(Overloaded{
                   [&](const ConstantProfile& c) {
                     check(c.value, "every offset");
                     data.total = c.value * len;
                   },
                   [&](const LinearProfile& l) {
                     check(l.intercept, "offset 0");
                     check(l.intercept + l.slope * len, "the far end");
                     data.total = len * (l.intercept + 0.5 * l.slope * len);
                   },
                   [&](SampledProfile& p) {
                     closed_form_ = false;
                     if (p.knots.size() < 2 || p.knots.size() != p.values.size()) {
                       throw Error(Errc::validation,
                                   "sampled profile on " + edge_label(g, e) + " needs >= 2 knots");
                     }
                     if (p.knots.front() != 0.0) {
                       throw Error(Errc::validation,
                                   "sampled profile on " + edge_label(g, e) + " must start at 0");
                     }
                     if (std::abs(p.knots.back() - len) > 1e-12 * len) {
                       throw Error(Errc::validation, "sampled profile on " + edge_label(g, e) +
                                                         " must end at the edge length");
                     }
                     p.knots.back() = len;
                     for (std::size_t k = 0; k + 1 < p.knots.size(); ++k) {
                       if (!(p.knots[k] < p.knots[k + 1])) {
                         throw Error(Errc::validation, "sampled profile knots on " +
                                                           edge_label(g, e) +
                                                           " are not strictly increasing");
                       }
                     }
                     for (double v : p.values) check(v, "a knot");
                     data.cumulative.assign(p.knots.size(), 0.0);
                     for (std::size_t k = 0; k + 1 < p.knots.size(); ++k) {
                       data.cumulative[k + 1] =
                           data.cumulative[k] +
                           0.5 * (p.knots[k + 1] - p.knots[k]) * (p.values[k] + p.values[k + 1]);
                     }
                     data.total = data.cumulative.back();
                   },
               },
               data.profile);
    edges_.push_back(std::move(data));
  }
  if (edges_.empty()) {
    lower_ = upper_ = fmin_;
  }
}

CostField CostField::uniform(const MetricGraph& g, double value) {
  return CostField(g, std::vector<EdgeProfile>(g.edge_count(), ConstantProfile{value}),
                   std::min(kDefaultFmin, value));
}

double CostField::value(EdgeId e, double s) const {
  const EdgeData& d = edges_.at(e);
  return std::visit(Overloaded{
                        [](const ConstantProfile& c) { return c.value; },
                        [s](const LinearProfile& l) { return l.intercept + l.slope * s; },
                        [s](const SampledProfile& p) { return interpolate(p, s); },
                    },
                    d.profile);
}

double CostField::cumulative(EdgeId e, double s) const {
  const EdgeData& d = edges_.at(e);
  if (s == d.length) return d.total;
  return std::visit(Overloaded{
                        [s](const ConstantProfile& c) { return c.value * s; },
                        [s](const LinearProfile& l) { return s * (l.intercept + 0.5 * l.slope * s); },
                        [&](const SampledProfile& p) {
                          const std::size_t k = segment_of(p, s);
                          const double ds = s - p.knots[k];
                          return d.cumulative[k] + 0.5 * ds * (p.values[k] + interpolate(p, s));
                        },
                    },
                    d.profile);
}

double CostField::edge_cost(EdgeId e, double s1, double s2) const {
  const EdgeData& d = edges_.at(e);
  if (!(s1 >= 0.0 && s1 <= d.length && s2 >= 0.0 && s2 <= d.length)) {
    std::ostringstream msg;
    msg << "edge_cost offsets (" << s1 << ", " << s2 << ") outside [0, " << d.length << "]";
    throw Error(Errc::range, msg.str());
  }
  if (s1 == s2) return 0.0;
  const double lo = std::min(s1, s2), hi = std::max(s1, s2);
  return std::visit(Overloaded{
                        [&](const ConstantProfile& c) { return c.value * (hi - lo); },
                        [&](const LinearProfile& l) {
                          return (hi - lo) * (l.intercept + 0.5 * l.slope * (lo + hi));
                        },
                        [&](const SampledProfile&) { return cumulative(e, hi) - cumulative(e, lo); },
                    },
                    d.profile);
}

std::pair<double, double> CostField::vertex_range(const MetricGraph& g, VertexId v) const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const EdgeEnd& end : g.incident(v)) {
    const double f = value(end.edge, end.side == EdgeSide::from ? 0.0 : length(end.edge));
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return {lo, hi};
}

std::pair<double, double> CostField::range_at(const MetricGraph& g, const GraphPoint& p) const {
  if (p.is_vertex()) return vertex_range(g, p.vertex());
  const double f = value(p.edge(), p.offset());
  return {f, f};
}

std::vector<double> CostField::edge_totals() const {
  std::vector<double> out;
  out.reserve(edges_.size());
  for (const EdgeData& d : edges_) out.push_back(d.total);
  return out;
}

SampledProfile sample_profile(const std::function<double(double)>& fn, std::span<const double> knots,
                              double lo, double hi) {
  SampledProfile p;
  p.knots.assign(knots.begin(), knots.end());
  p.values.reserve(knots.size());
  for (double s : knots) {
    double v = fn(s);
    if (std::isnan(v)) v = hi;
    p.values.push_back(std::clamp(v, lo, hi));
  }
  return p;
}

std::vector<double> uniform_knots(double length, std::size_t count) {
  if (count < 2) throw Error(Errc::argument, "need at least two knots");
  std::vector<double> k(count);
  for (std::size_t i = 0; i < count; ++i) {
    k[i] = length * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  k.back() = length;
  return k;
}

}  // namespace eikonal
