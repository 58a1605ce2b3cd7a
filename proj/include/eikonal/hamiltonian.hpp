#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "eikonal/cost_field.hpp"
#include "eikonal/eikonal_solver.hpp"
#include "eikonal/graph_function.hpp"
#include "eikonal/metric_graph.hpp"

namespace eikonal {

/// Location on a specific edge; offsets 0 and length denote its endpoints as
/// seen from that edge, so per-edge data such as f stays unambiguous.
struct EdgePoint {
  EdgeId edge;
  double offset;
};

/// H(x, r, p) for p >= 0. Negative p is evaluated as p = 0.
struct Hamiltonian {
  std::string name;
  std::function<double(const EdgePoint& x, double r, double p)> evaluator;
  bool depends_on_r = false;
  bool claimed_strictly_increasing = true;
  double pmax = 1e3;

  double operator()(const EdgePoint& x, double r, double p) const {
    return evaluator(x, r, p < 0.0 ? 0.0 : p);
  }
};

/// Built-in Hamiltonians: eikonal-affine (p - f), quadratic (p^2 - f^2),
/// nonmono-a (1 - |p-2| + max{p-3,0}^2), nonmono-b (1 - |p| + max{p-3,0}^2),
/// discounted (p + r - f). `f` supplies the cost profile where needed.
Hamiltonian catalog_hamiltonian(const std::string& name, std::shared_ptr<const CostField> f);
std::vector<std::string> catalog_names();

struct ReduceOptions {
  std::size_t knots = 65;         // per edge
  std::size_t probe_points = 64;  // log-spaced up to pmax, plus p = 0
  double bisection_tol = 1e-10;
  double fmin = kDefaultFmin;     // lower clamp for the resulting profile
};

/// h = inf{p >= 0 : H(x, r, p) > 0} after probing monotonicity on the
/// log-spaced grid. Throws Errc::nonmonotone_hamiltonian, Errc::no_subsolution
/// or Errc::coercivity when the probe rejects H at this point.
double implicit_slope(const Hamiltonian& H, const EdgePoint& x, double r,
                      const ReduceOptions& options = {});

/// The p-grid used by the monotonicity probe.
std::vector<double> probe_grid(double pmax, std::size_t points);

using PointValues = std::function<double(const EdgePoint&)>;

/// Samples h(x) = implicit_slope(H, x, u(x)) at uniform knots of every edge
/// and returns it as a sampled cost field. Rejections name the offending
/// edge point.
CostField reduce_to_eikonal(const Hamiltonian& H, const MetricGraph& g, const PointValues& u,
                            const ReduceOptions& options = {});

struct GeneralOptions {
  ReduceOptions reduce;
  std::size_t max_iterations = 200;
  double stop_tol = 1e-8;
};

struct GeneralSolution {
  ValueFunction u;
  std::size_t iterations = 0;
  std::vector<double> history;  // sup |u_{k+1} - u_k| per iteration
  double equation_residual = 0.0;  // max |H(x, u, |grad- u|)| at interior knots
};

/// Fixed-point iteration u_{k+1} = solve(h(., u_k), g) starting from
/// h(., max g). Probes H(x, r, p) - H(x, s, p) >= lambda (r - s) first
/// (Errc::precondition on failure); Errc::divergence after max_iterations.
GeneralSolution solve_general(const Hamiltonian& H, std::shared_ptr<const MetricGraph> g,
                              const BoundaryData& boundary, double lambda,
                              const GeneralOptions& options = {});

enum class KruzkovDirection { forward, inverse };

/// forward: U = -exp(-u); inverse: u = -log(-U), which throws Errc::domain
/// when evaluated at a nonnegative value.
std::shared_ptr<const GraphFunction> kruzkov(std::shared_ptr<const GraphFunction> u,
                                             KruzkovDirection direction);

struct KruzkovSlopeReport {
  double worst_gap = 0.0;  // max | |grad- U| - exp(-u) |grad- u| |
  std::size_t samples = 0;
  bool pass = true;
};

KruzkovSlopeReport check_kruzkov_slopes(std::shared_ptr<const GraphFunction> u,
                                        const std::vector<GraphPoint>& samples, double tol = 1e-12);

}  // namespace eikonal
