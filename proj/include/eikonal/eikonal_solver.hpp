#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eikonal/cost_field.hpp"
#include "eikonal/graph_function.hpp"
#include "eikonal/metric_graph.hpp"
#include "eikonal/optical_length.hpp"

namespace eikonal {

/// Dirichlet data g, keyed by boundary vertex.
using BoundaryData = std::map<VertexId, double>;

/// Throws Errc::argument unless `g` is finite and defined exactly on the
/// boundary vertices of `graph` (of which there must be at least one).
void validate_boundary(const MetricGraph& graph, const BoundaryData& g);

/// Tolerance used by the verifiers when none is given: 1e-9 for closed-form
/// cost profiles, 1e-6 once any edge is sampled.
double default_tolerance(const CostField& f);

/// u(x) = min over boundary y of (g(y) + L_f(x, y)), together with the data
/// it was computed from.
class ValueFunction : public OpticalField {
 public:
  ValueFunction(OpticalField field, BoundaryData boundary)
      : OpticalField(std::move(field)), boundary_(std::move(boundary)) {}

  /// Evaluator over externally supplied vertex values (u files, perturbed
  /// copies). Within-edge values use the same two-branch minimum.
  static ValueFunction from_vertex_values(std::shared_ptr<const MetricGraph> g,
                                          std::shared_ptr<const CostField> f,
                                          std::vector<double> values, BoundaryData boundary);

  const BoundaryData& boundary() const { return boundary_; }

 private:
  BoundaryData boundary_;
};

ValueFunction solve(std::shared_ptr<const MetricGraph> graph, std::shared_ptr<const CostField> f,
                    const BoundaryData& g);

struct CompatibilityViolation {
  VertexId x;
  VertexId y;
  double excess;  // g(x) - g(y) - L_f(x, y)
};

struct CompatibilityReport {
  bool pass = true;
  std::vector<CompatibilityViolation> violations;  // sorted by (x, y)
};

/// Checks g(x) <= g(y) + L_f(x, y) over all boundary pairs.
CompatibilityReport check_compatibility(const MetricGraph& graph, const CostField& f,
                                        const BoundaryData& g, std::optional<double> tol = {});

// ---------------------------------------------------------------------------

struct DppOptions {
  std::optional<double> tau;  // default: half the shortest edge at the sample
  std::optional<double> tol;
  std::size_t max_walks = 100000;
};

struct DppSample {
  GraphPoint point;
  double tau = 0.0;
  double residual = 0.0;  // min over walks of (u(y) + cost) - u(x)
  std::size_t walks = 0;
  bool skipped = false;
  std::string skip_reason;
};

struct DppReport {
  std::vector<DppSample> samples;
  double tol = 0.0;
  double worst_residual = 0.0;  // largest |residual| over checked samples
  std::optional<GraphPoint> worst_point;
  std::size_t skipped = 0;
  bool pass = true;
};

/// Walks every non-backtracking path of arc length tau from each sample and
/// compares min (u(end) + path cost) with u(sample). Samples on the
/// boundary, or closer to it than tau, are skipped and recorded.
DppReport verify_dpp(const GraphFunction& u, const CostField& f, const std::vector<GraphPoint>& samples,
                     const DppOptions& options = {});

// ---------------------------------------------------------------------------

struct SuboptOptions {
  std::optional<double> tol;
  std::size_t extra_samples = 8;  // random parameters per curve besides its nodes
  std::uint64_t seed = 1;
};

struct SuboptViolation {
  std::size_t curve;
  double t1;
  double t2;
  double rise;  // u(gamma(t2)) - u(gamma(t1))
  double cost;  // integral of f over [t1, t2]
};

struct SuboptReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  double worst_excess = 0.0;  // max(rise - cost), may be negative
  std::vector<SuboptViolation> violations;
};

/// Checks u(gamma(t2)) - u(gamma(t1)) <= int_{t1}^{t2} f for parameter pairs
/// along each curve. Throws Errc::argument when a curve passes through a
/// boundary vertex anywhere but its two ends.
SuboptReport verify_suboptimality(const GraphFunction& u, const CostField& f,
                                  const std::vector<Curve>& curves, const SuboptOptions& options = {});

// ---------------------------------------------------------------------------

struct ModulusViolation {
  GraphPoint x;
  VertexId y;
  double distance;
  double gap;    // u(x) - g(y)
  double bound;
  bool two_sided;  // which of the two inequalities failed
};

struct ModulusReport {
  double lipschitz = 0.0;  // Lipschitz constant of g used in the bounds
  double sup_f = 0.0;
  bool compatible = false;
  std::size_t pairs = 0;
  bool pass = true;
  std::vector<ModulusViolation> violations;
};

/// Brute-force Lipschitz constant of g over boundary pairs in graph distance.
double boundary_lipschitz(const MetricGraph& graph, const BoundaryData& g);

/// Checks u(x) - g(y) <= d(x,y) max{L, sup f} for every sample x and boundary
/// vertex y, and, when g is compatible, |u(x) - g(y)| <= 2 d sup f + L 2 d.
/// Samples default to every vertex. A supplied `lipschitz` smaller than the
/// measured one is a precondition error.
ModulusReport boundary_modulus(const ValueFunction& u, std::optional<double> lipschitz = {},
                               const std::vector<GraphPoint>& samples = {},
                               std::optional<double> tol = {});

}  // namespace eikonal
