#include "eikonal/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "eikonal/error.hpp"
#include "eikonal/slope_tools.hpp"

namespace eikonal {

Hamiltonian catalog_hamiltonian(const std::string& name, std::shared_ptr<const CostField> f) {
  if (name == "eikonal-affine") {
    return {name, [f](const EdgePoint& x, double, double p) { return p - f->value(x.edge, x.offset); }};
  }
  if (name == "quadratic") {
    return {name, [f](const EdgePoint& x, double, double p) {
              const double fx = f->value(x.edge, x.offset);
              return p * p - fx * fx;
            }};
  }
  if (name == "nonmono-a") {
    return {name,
            [](const EdgePoint&, double, double p) {
              const double tail = std::max(p - 3.0, 0.0);
              return 1.0 - std::abs(p - 2.0) + tail * tail;
            },
            false, false};
  }
  if (name == "nonmono-b") {
    return {name,
            [](const EdgePoint&, double, double p) {
              const double tail = std::max(p - 3.0, 0.0);
              return 1.0 - std::abs(p) + tail * tail;
            },
            false, false};
  }
  if (name == "discounted") {
    return {name,
            [f](const EdgePoint& x, double r, double p) { return p + r - f->value(x.edge, x.offset); },
            true, true};
  }
  throw Error(Errc::argument, "unknown Hamiltonian '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"eikonal-affine", "quadratic", "nonmono-a", "nonmono-b", "discounted"};
}

std::vector<double> probe_grid(double pmax, std::size_t points) {
  if (!(pmax > 0.0) || points < 2) throw Error(Errc::argument, "bad probe grid");
  std::vector<double> grid{0.0};
  for (std::size_t i = 0; i < points; ++i) {
    const double e = -6.0 * (1.0 - static_cast<double>(i) / static_cast<double>(points - 1));
    grid.push_back(pmax * std::pow(10.0, e));
  }
  grid.back() = pmax;
  return grid;
}

namespace {

std::string where(const EdgePoint& x, double r) {
  std::ostringstream os;
  os.precision(12);
  os << "at edge " << x.edge << " offset " << x.offset << " (r = " << r << ")";
  return os.str();
}

}  // namespace

double implicit_slope(const Hamiltonian& H, const EdgePoint& x, double r, const ReduceOptions& options) {
  const auto grid = probe_grid(H.pmax, options.probe_points);
  std::vector<double> vals;
  vals.reserve(grid.size());
  for (double p : grid) {
    const double v = H(x, r, p);
    if (!std::isfinite(v)) throw Error(Errc::coercivity, "H is not finite " + where(x, r));
    vals.push_back(v);
  }

  const auto first = std::find_if(vals.begin(), vals.end(), [](double v) { return v > 0.0; });
  if (first == vals.end()) {
    std::ostringstream msg;
    msg << "H stays nonpositive up to pmax = " << H.pmax << " " << where(x, r);
    throw Error(Errc::coercivity, msg.str());
  }
  const std::size_t k = static_cast<std::size_t>(first - vals.begin());
  for (std::size_t j = k + 1; j < vals.size(); ++j) {
    if (vals[j] <= vals[j - 1]) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "H is not increasing past its zero " << where(x, r) << ": H(" << grid[j - 1]
          << ") = " << vals[j - 1] << " >= H(" << grid[j] << ") = " << vals[j];
      throw Error(Errc::nonmonotone_hamiltonian, msg.str());
    }
  }
  if (k == 0) {
    std::ostringstream msg;
    msg << "H(x, u(x), 0) = " << vals[0] << " > 0 " << where(x, r);
    throw Error(Errc::no_subsolution, msg.str());
  }

  auto sign = [&](double p) { return H(x, r, p) > 0.0 ? 1.0 : -1.0; };
  const double tol = options.bisection_tol;
  const auto bracket = boost::math::tools::bisect(
      sign, grid[k - 1], grid[k], [tol](double a, double b) { return std::abs(b - a) <= tol; });
  return 0.5 * (bracket.first + bracket.second);
}

CostField reduce_to_eikonal(const Hamiltonian& H, const MetricGraph& g, const PointValues& u,
                            const ReduceOptions& options) {
  std::vector<EdgeProfile> profiles;
  profiles.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto knots = uniform_knots(g.edge(e).length, options.knots);
    SampledProfile p{knots, {}};
    p.values.reserve(knots.size());
    for (double s : knots) {
      const EdgePoint x{e, s};
      const double r = u(x);
      double h;
      try {
        h = implicit_slope(H, x, r, options);
      } catch (const Error& err) {
        throw Error(err.code(), std::string(err.what()) + " [edge '" + g.edge(e).name + "']");
      }
      p.values.push_back(std::max(h, options.fmin));
    }
    profiles.emplace_back(std::move(p));
  }
  return CostField(g, std::move(profiles), options.fmin);
}

// ---------------------------------------------------------------------------

namespace {

void probe_r_monotonicity(const Hamiltonian& H, const MetricGraph& g, const BoundaryData& boundary,
                          double lambda, const ReduceOptions& options) {
  double gmin = boundary.begin()->second, gmax = gmin;
  for (const auto& [v, value] : boundary) {
    gmin = std::min(gmin, value);
    gmax = std::max(gmax, value);
  }
  const std::vector<double> rs{gmin - 1.0, gmin, 0.5 * (gmin + gmax), gmax, gmax + 1.0};
  const auto grid = probe_grid(H.pmax, std::min<std::size_t>(options.probe_points, 8));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (double s : uniform_knots(g.edge(e).length, 3)) {
      const EdgePoint x{e, s};
      for (double p : grid) {
        for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
          const double lo = H(x, rs[i], p), hi = H(x, rs[i + 1], p);
          const double need = lambda * (rs[i + 1] - rs[i]);
          if (hi - lo < need - 1e-12 * std::max(1.0, std::abs(need))) {
            std::ostringstream msg;
            msg << "H(x, r, p) - H(x, s, p) >= lambda (r - s) fails " << where(x, rs[i + 1])
                << " with s = " << rs[i] << ", p = " << p;
            throw Error(Errc::precondition, msg.str());
          }
        }
      }
    }
  }
}

double sup_difference(const MetricGraph& g, const ValueFunction& a, const ValueFunction& b,
                      std::size_t knots) {
  double diff = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    diff = std::max(diff, std::abs(a.vertex_values()[v] - b.vertex_values()[v]));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (double s : uniform_knots(g.edge(e).length, knots)) {
      const GraphPoint x = GraphPoint::on_edge(g, e, s);
      diff = std::max(diff, std::abs(a.value(x) - b.value(x)));
    }
  }
  return diff;
}

}  // namespace

GeneralSolution solve_general(const Hamiltonian& H, std::shared_ptr<const MetricGraph> g,
                              const BoundaryData& boundary, double lambda,
                              const GeneralOptions& options) {
  if (!(lambda >= 0.0)) throw Error(Errc::argument, "lambda must be nonnegative");
  validate_boundary(*g, boundary);
  probe_r_monotonicity(H, *g, boundary, lambda, options.reduce);

  double gmax = boundary.begin()->second;
  for (const auto& [v, value] : boundary) gmax = std::max(gmax, value);

  auto step = [&](const PointValues& r) {
    auto h = std::make_shared<const CostField>(reduce_to_eikonal(H, *g, r, options.reduce));
    return solve(g, std::move(h), boundary);
  };

  ValueFunction current = step([gmax](const EdgePoint&) { return gmax; });
  std::vector<double> history;
  std::size_t k = 0;
  for (;;) {
    if (k == options.max_iterations) {
      std::ostringstream msg;
      msg << "fixed-point iteration did not converge in " << k << " iterations; residuals:";
      for (double r : history) msg << ' ' << r;
      throw Error(Errc::divergence, msg.str());
    }
    const MetricGraph& graph = *g;
    ValueFunction next = step([&current, &graph](const EdgePoint& x) {
      return current.value(GraphPoint::on_edge(graph, x.edge, x.offset));
    });
    ++k;
    history.push_back(sup_difference(*g, current, next, options.reduce.knots));
    current = std::move(next);
    if (history.back() < options.stop_tol) break;
  }

  GeneralSolution out{std::move(current), k, std::move(history), 0.0};
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    const auto knots = uniform_knots(g->edge(e).length, options.reduce.knots);
    for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
      const GraphPoint x = GraphPoint::on_edge(*g, e, knots[i]);
      const double sub = slopes(out.u, x).sub_slope;
      out.equation_residual =
          std::max(out.equation_residual, std::abs(H({e, knots[i]}, out.u.value(x), sub)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const GraphFunction> kruzkov(std::shared_ptr<const GraphFunction> u,
                                             KruzkovDirection direction) {
  if (direction == KruzkovDirection::forward) {
    return std::make_shared<ComposedFunction>(
        std::move(u), [](double t) { return -std::exp(-t); }, [](double t) { return std::exp(-t); });
  }
  auto check = [](double t) {
    if (!(t < 0.0)) {
      std::ostringstream msg;
      msg << "inverse Kruzkov transform needs negative values, got " << t;
      throw Error(Errc::domain, msg.str());
    }
  };
  return std::make_shared<ComposedFunction>(
      std::move(u),
      [check](double t) {
        check(t);
        return -std::log(-t);
      },
      [check](double t) {
        check(t);
        return -1.0 / t;
      });
}

KruzkovSlopeReport check_kruzkov_slopes(std::shared_ptr<const GraphFunction> u,
                                        const std::vector<GraphPoint>& samples, double tol) {
  const auto U = kruzkov(u, KruzkovDirection::forward);
  KruzkovSlopeReport report;
  for (const GraphPoint& x : samples) {
    const double lhs = slopes(*U, x).sub_slope;
    const double rhs = std::exp(-u->value(x)) * slopes(*u, x).sub_slope;
    report.worst_gap = std::max(report.worst_gap, std::abs(lhs - rhs));
    ++report.samples;
  }
  report.pass = report.worst_gap <= tol;
  return report;
}

}  // namespace eikonal
