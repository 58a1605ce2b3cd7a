#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eikonal/eikonal_solver.hpp"
#include "eikonal/error.hpp"
#include "eikonal/sampling.hpp"
#include "support.hpp"

using namespace eikonal;
using testing_support::interval;
using testing_support::random_instance;
using testing_support::random_point;
using testing_support::unit_cost;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an eikonal::Error";
  return Errc::contract;
}

// [-1, 0, 1] with an interior vertex at 0.
std::shared_ptr<const MetricGraph> split_interval() {
  return std::make_shared<const MetricGraph>(
      std::vector<Vertex>{{"left", true}, {"mid", false}, {"right", true}},
      std::vector<Edge>{{"neg", 0, 1, 1.0}, {"pos", 1, 2, 1.0}});
}

}  // namespace

TEST(Solve, IntervalGivesTent) {
  const auto g = interval();
  const ValueFunction u = solve(g, unit_cost(*g), {{0, 0.0}, {1, 0.0}});
  for (int i = 0; i <= 100; ++i) {
    const double x = -1.0 + 0.02 * i;
    EXPECT_NEAR(u.value(GraphPoint::on_edge(*g, 0, std::clamp(x + 1.0, 0.0, 2.0))), 1.0 - std::abs(x), 1e-15);
  }
  EXPECT_EQ(u.value(GraphPoint::on_edge(*g, 0, 1.0)), 1.0);
}

TEST(Solve, IncompatibleDataNotAttained) {
  const auto g = interval();
  const ValueFunction u = solve(g, unit_cost(*g), {{0, 0.0}, {1, 3.0}});
  EXPECT_EQ(u.value(GraphPoint::at_vertex(1)), 2.0);
  EXPECT_EQ(u.value(GraphPoint::at_vertex(0)), 0.0);
}

TEST(Solve, StarCenter) {
  auto g = std::make_shared<const MetricGraph>(
      std::vector<Vertex>{{"c", false}, {"a", true}, {"b", true}, {"d", true}},
      std::vector<Edge>{{"ca", 0, 1, 1.0}, {"cb", 0, 2, 1.0}, {"cd", 0, 3, 1.0}});
  const ValueFunction u = solve(g, unit_cost(*g), {{1, 0.0}, {2, 0.0}, {3, 0.0}});
  EXPECT_EQ(u.value(GraphPoint::at_vertex(0)), 1.0);
}

TEST(Solve, RejectsBadBoundaryData) {
  auto g = std::make_shared<const MetricGraph>(std::vector<Vertex>{{"a", false}, {"b", false}},
                                               std::vector<Edge>{{"ab", 0, 1, 1.0}});
  EXPECT_EQ(code_of([&] { solve(g, unit_cost(*g), {}); }), Errc::argument);
  const auto h = interval();
  EXPECT_EQ(code_of([&] { solve(h, unit_cost(*h), {{0, 0.0}}); }), Errc::argument);
  EXPECT_EQ(code_of([&] { solve(h, unit_cost(*h), {{0, 0.0}, {1, NAN}}); }), Errc::argument);
  EXPECT_EQ(code_of([&] { CostField(*h, {ConstantProfile{-1.0}}); }), Errc::validation);
}

TEST(Compatibility, Examples) {
  const auto g = interval();
  const auto f = unit_cost(*g);
  EXPECT_TRUE(check_compatibility(*g, *f, {{0, 0.0}, {1, 0.0}}).pass);
  const CompatibilityReport bad = check_compatibility(*g, *f, {{0, 0.0}, {1, 3.0}});
  EXPECT_FALSE(bad.pass);
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.violations[0].x, 1u);
  EXPECT_EQ(bad.violations[0].y, 0u);
  EXPECT_EQ(bad.violations[0].excess, 1.0);
  const CompatibilityReport tight = check_compatibility(*g, *f, {{0, 0.0}, {1, 2.0}});
  EXPECT_TRUE(tight.pass);
  EXPECT_TRUE(tight.violations.empty());
}

TEST(Compatibility, SameAsBoundaryAttainment) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng, 10, 18, 0.1, 5.0, 6.0);
    const ValueFunction u = solve(inst.graph, inst.cost, inst.boundary);
    bool attained = true;
    for (const auto& [v, value] : inst.boundary) attained = attained && u.vertex_values()[v] >= value - 1e-12;
    EXPECT_EQ(check_compatibility(*inst.graph, *inst.cost, inst.boundary).pass, attained);
  }
}

TEST(Dpp, FixtureHasZeroResidual) {
  const auto g = interval();
  const auto f = unit_cost(*g);
  const ValueFunction u = solve(g, f, {{0, 0.0}, {1, 0.0}});
  std::vector<GraphPoint> samples;
  for (double s : {0.3, 0.5, 1.0, 1.4, 1.8}) samples.push_back(GraphPoint::on_edge(*g, 0, s));
  DppOptions opts;
  opts.tau = 0.1;
  const DppReport report = verify_dpp(u, *f, samples, opts);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.skipped, 0u);
  for (const auto& s : report.samples) EXPECT_EQ(s.residual, 0.0);
}

TEST(Dpp, PerturbedVertexIsFlagged) {
  const auto g = split_interval();
  const auto f = unit_cost(*g);
  const ValueFunction u = ValueFunction::from_vertex_values(g, f, {0.0, 1.5, 0.0}, {{0, 0.0}, {2, 0.0}});
  DppOptions opts;
  opts.tau = 0.1;
  const DppReport report = verify_dpp(u, *f, sample_points(*g, 3), opts);
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.worst_point.has_value());
  EXPECT_EQ(*report.worst_point, GraphPoint::at_vertex(1));
  EXPECT_GE(report.worst_residual, 0.5 - 0.1 * f->upper_bound());
}

TEST(Dpp, SampleTooCloseToBoundaryIsSkipped) {
  const auto g = interval();
  const auto f = unit_cost(*g);
  const ValueFunction u = solve(g, f, {{0, 0.0}, {1, 0.0}});
  DppOptions opts;
  opts.tau = 0.1;
  const DppReport report = verify_dpp(u, *f, {GraphPoint::on_edge(*g, 0, 0.05), GraphPoint::at_vertex(0)}, opts);
  EXPECT_EQ(report.skipped, 2u);
  EXPECT_TRUE(report.samples[0].skipped);
  EXPECT_EQ(report.samples[0].skip_reason, "tau exceeds distance to boundary");
  EXPECT_EQ(report.samples[1].skip_reason, "boundary point");
}

TEST(Dpp, HoldsAtInteriorVerticesOfRandomGraphs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = random_instance(rng, 12, 24);
    const ValueFunction u = solve(inst.graph, inst.cost, inst.boundary);
    // the discrete form: u(v) = min over neighbours w of u(w) + edge cost
    const MetricGraph& g = *inst.graph;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.is_boundary(v)) continue;
      double best = INFINITY;
      for (const EdgeEnd& end : g.incident(v)) {
        const VertexId w = g.endpoint(end.edge, end.side == EdgeSide::from ? EdgeSide::to : EdgeSide::from);
        best = std::min(best, u.vertex_values()[w] + inst.cost->total(end.edge));
      }
      EXPECT_NEAR(u.vertex_values()[v], best, 1e-12 * (1 + best));
    }
    const DppReport report = verify_dpp(u, *inst.cost, sample_points(g, 2));
    EXPECT_TRUE(report.pass) << "worst " << report.worst_residual;
  }
}

TEST(Subopt, ValueFunctionPassesOnRandomCurves) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = random_instance(rng, 12, 24);
    const ValueFunction u = solve(inst.graph, inst.cost, inst.boundary);
    const SuboptReport report = verify_suboptimality(u, *inst.cost, random_curves(*inst.graph, 50, trial));
    EXPECT_TRUE(report.pass) << report.worst_excess;
    EXPECT_GT(report.pairs_checked, 0u);
  }
}

TEST(Subopt, DoubledValueFunctionFails) {
  auto g = std::make_shared<const MetricGraph>(std::vector<Vertex>{{"a", true}, {"b", false}, {"c", true}},
                                               std::vector<Edge>{{"ab", 0, 1, 1.0}, {"bc", 1, 2, 2.5}});
  auto f = std::make_shared<const CostField>(*g, std::vector<EdgeProfile>{LinearProfile{1.0, 0.5}, ConstantProfile{2.0}});
  const auto u = std::make_shared<const ValueFunction>(solve(g, f, {{0, 0.0}, {2, 0.4}}));
  const CallableFunction twice(g, [u](const GraphPoint& x) { return 2.0 * u->value(x); });
  const SuboptReport report = verify_suboptimality(twice, *f, random_curves(*g, 20, 4));
  EXPECT_FALSE(report.pass);
  EXPECT_GT(report.worst_excess, 0.0);
}

TEST(Subopt, NegatedValueFunctionPasses) {
  std::mt19937_64 rng(38);
  const auto inst = random_instance(rng, 10, 18);
  const auto u = std::make_shared<const ValueFunction>(solve(inst.graph, inst.cost, inst.boundary));
  EXPECT_TRUE(verify_suboptimality(*negated(u), *inst.cost, random_curves(*inst.graph, 50, 2)).pass);
}

TEST(Subopt, ConstantPasses) {
  const auto g = split_interval();
  const auto f = unit_cost(*g);
  const CallableFunction c(g, [](const GraphPoint&) { return 4.2; });
  const SuboptReport report = verify_suboptimality(c, *f, random_curves(*g, 10, 1));
  EXPECT_TRUE(report.pass);
  EXPECT_LT(report.worst_excess, 0.0);
}

TEST(Subopt, CurveThroughBoundaryIsArgumentError) {
  auto g = std::make_shared<const MetricGraph>(std::vector<Vertex>{{"a", false}, {"b", true}, {"c", false}},
                                               std::vector<Edge>{{"ab", 0, 1, 1.0}, {"bc", 1, 2, 1.0}});
  const auto f = unit_cost(*g);
  const ValueFunction u = solve(g, f, {{1, 0.0}});
  const std::vector pts{GraphPoint::on_edge(*g, 0, 0.5), GraphPoint::at_vertex(1), GraphPoint::on_edge(*g, 1, 0.5)};
  EXPECT_EQ(code_of([&] { verify_suboptimality(u, *f, {Curve::through(*g, pts)}); }), Errc::argument);
}

TEST(Modulus, FixturePoint) {
  const auto g = interval();
  const ValueFunction u = solve(g, unit_cost(*g), {{0, 0.0}, {1, 0.0}});
  const GraphPoint x = GraphPoint::on_edge(*g, 0, 1.5);
  // u(0.5) - g(1) = 0.5 = d * max{0, 1}
  EXPECT_EQ(u.value(x), 0.5);
  const ModulusReport report = boundary_modulus(u, 0.0, {x});
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.compatible);
  EXPECT_EQ(report.lipschitz, 0.0);
  EXPECT_EQ(report.sup_f, 1.0);
}

TEST(Modulus, ZeroDataBoundedByDistanceToBoundary) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = random_instance(rng, 12, 24);
    for (auto& [v, value] : inst.boundary) value = 0.0;
    const ValueFunction u = solve(inst.graph, inst.cost, inst.boundary);
    std::vector<GraphPoint> pts = sample_points(*inst.graph, 3);
    for (const auto& x : pts) {
      EXPECT_LE(u.value(x), distance_to_boundary(*inst.graph, x) * inst.cost->upper_bound() * (1 + 1e-12));
    }
    EXPECT_TRUE(boundary_modulus(u, std::nullopt, pts).pass);
  }
}

TEST(Modulus, BoundaryPointsUnderCompatibility) {
  const auto g = interval();
  const ValueFunction u = solve(g, unit_cost(*g), {{0, 0.0}, {1, 1.5}});
  const ModulusReport report = boundary_modulus(u, std::nullopt, {GraphPoint::at_vertex(0), GraphPoint::at_vertex(1)});
  EXPECT_TRUE(report.compatible);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(u.value(GraphPoint::at_vertex(1)), 1.5);
  EXPECT_DOUBLE_EQ(report.lipschitz, 0.75);
}

TEST(Modulus, UnderstatedLipschitzIsPrecondition) {
  const auto g = interval();
  const ValueFunction u = solve(g, unit_cost(*g), {{0, 0.0}, {1, 1.5}});
  EXPECT_EQ(code_of([&] { boundary_modulus(u, 0.5); }), Errc::precondition);
}

TEST(ValueFunctionProperties, ComparisonOnRandomPairs) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng, 12, 24);
    std::vector<EdgeProfile> bigger;
    for (EdgeId e = 0; e < inst.graph->edge_count(); ++e) {
      const auto& p = std::get<LinearProfile>(inst.cost->profile(e));
      bigger.push_back(LinearProfile{p.intercept + unit(rng), p.slope});
    }
    auto f2 = std::make_shared<const CostField>(*inst.graph, std::move(bigger));
    BoundaryData g2 = inst.boundary;
    for (auto& [v, value] : g2) value += unit(rng);
    const ValueFunction u1 = solve(inst.graph, inst.cost, inst.boundary);
    const ValueFunction u2 = solve(inst.graph, f2, g2);
    for (VertexId v = 0; v < inst.graph->vertex_count(); ++v) {
      EXPECT_LE(u1.vertex_values()[v], u2.vertex_values()[v] + 1e-12);
    }
    for (int k = 0; k < 10; ++k) {
      const GraphPoint x = random_point(*inst.graph, rng);
      EXPECT_LE(u1.value(x), u2.value(x) + 1e-12);
    }
  }
}

TEST(ValueFunctionProperties, SuperOptimalityAndNonexpansiveness) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 15; ++trial) {
    const auto inst = random_instance(rng, 10, 18);
    const MetricGraph& g = *inst.graph;
    const ValueFunction u = solve(inst.graph, inst.cost, inst.boundary);
    std::vector<GraphPoint> pts;
    for (int k = 0; k < 12; ++k) pts.push_back(random_point(g, rng));
    for (const auto& x : pts) {
      double best = INFINITY;
      for (const auto& [y, gy] : inst.boundary) {
        const double candidate = gy + optical_length(g, *inst.cost, x, GraphPoint::at_vertex(y));
        EXPECT_LE(u.value(x), candidate + 1e-12 * (1 + candidate));
        best = std::min(best, candidate);
      }
      EXPECT_NEAR(u.value(x), best, 1e-12 * (1 + best));
      for (const auto& y : pts) {
        EXPECT_LE(std::abs(u.value(x) - u.value(y)), optical_length(g, *inst.cost, x, y) + 1e-12);
      }
    }
  }
}

// Over any set S of interior vertices, min of u over S and its neighbours is
// attained outside S: every interior vertex has a strictly cheaper
// neighbour chain towards the boundary.
TEST(ValueFunctionProperties, MinimumOverSubgraphOnItsRelativeBoundary) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = random_instance(rng, 14, 26);
    const MetricGraph& g = *inst.graph;
    const ValueFunction u = solve(inst.graph, inst.cost, inst.boundary);
    std::vector<bool> in(g.vertex_count(), false);
    for (VertexId v = 0; v < g.vertex_count(); ++v) in[v] = !g.is_boundary(v) && unit(rng) < 0.5;
    double inside = INFINITY, rim = INFINITY;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!in[v]) continue;
      inside = std::min(inside, u.vertex_values()[v]);
      for (const EdgeEnd& end : g.incident(v)) {
        const VertexId w = g.endpoint(end.edge, end.side == EdgeSide::from ? EdgeSide::to : EdgeSide::from);
        if (!in[w]) rim = std::min(rim, u.vertex_values()[w]);
      }
    }
    if (std::isinf(inside)) continue;
    EXPECT_LT(rim, inside);
  }
}
