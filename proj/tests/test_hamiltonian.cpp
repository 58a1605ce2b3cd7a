#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eikonal/error.hpp"
#include "eikonal/hamiltonian.hpp"
#include "eikonal/sampling.hpp"
#include "eikonal/slope_tools.hpp"
#include "support.hpp"

using namespace eikonal;
using testing_support::interval;
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

const PointValues zero = [](const EdgePoint&) { return 0.0; };

Hamiltonian custom(std::function<double(double)> h) {
  Hamiltonian H;
  H.name = "custom";
  H.evaluator = [h](const EdgePoint&, double, double p) { return h(p); };
  return H;
}

}  // namespace

TEST(ProbeGrid, LogSpacedWithZero) {
  const auto grid = probe_grid(1e3, 64);
  ASSERT_EQ(grid.size(), 65u);
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_DOUBLE_EQ(grid.back(), 1e3);
  for (std::size_t i = 2; i < grid.size(); ++i) {
    EXPECT_NEAR(grid[i] / grid[i - 1], grid[2] / grid[1], 1e-9);
  }
  EXPECT_EQ(code_of([] { probe_grid(0.0, 64); }), Errc::argument);
}

TEST(Reduce, AffineGivesCostBack) {
  auto g = interval();
  auto f = std::make_shared<const CostField>(*g, std::vector<EdgeProfile>{LinearProfile{0.5, 1.0}});
  const Hamiltonian H = catalog_hamiltonian("eikonal-affine", f);
  const CostField h = reduce_to_eikonal(H, *g, zero);
  for (int i = 0; i <= 64; ++i) {
    const double s = 2.0 * i / 64.0;
    EXPECT_NEAR(h.value(0, s), f->value(0, s), 1e-9);
  }
}

TEST(Reduce, QuadraticGivesOne) {
  auto g = interval();
  const Hamiltonian H = catalog_hamiltonian("quadratic", unit_cost(*g));
  const CostField h = reduce_to_eikonal(H, *g, zero);
  for (double s : {0.0, 0.3, 1.0, 1.77, 2.0}) EXPECT_NEAR(h.value(0, s), 1.0, 1e-9);
}

TEST(Reduce, ResidualAtImplicitSlope) {
  auto g = interval();
  auto f = std::make_shared<const CostField>(*g, std::vector<EdgeProfile>{LinearProfile{0.5, 1.0}});
  for (const std::string name : {"eikonal-affine", "quadratic", "discounted"}) {
    const Hamiltonian H = catalog_hamiltonian(name, f);
    for (double s : {0.0, 0.4, 1.3, 2.0}) {
      const EdgePoint x{0, s};
      const double r = name == "discounted" ? 0.2 : 0.0;
      const double h = implicit_slope(H, x, r);
      EXPECT_LE(std::abs(H(x, r, h)), 1e-9) << name << " at " << s;
    }
  }
}

TEST(Reduce, CatalogRejections) {
  auto g = interval();
  const auto f = unit_cost(*g);
  EXPECT_EQ(code_of([&] { reduce_to_eikonal(catalog_hamiltonian("nonmono-a", f), *g, zero); }),
            Errc::nonmonotone_hamiltonian);
  EXPECT_EQ(code_of([&] { reduce_to_eikonal(catalog_hamiltonian("nonmono-b", f), *g, zero); }),
            Errc::nonmonotone_hamiltonian);
  EXPECT_EQ(code_of([&] { catalog_hamiltonian("nope", f); }), Errc::argument);
  const auto names = catalog_names();
  EXPECT_EQ(names.size(), 5u);
}

TEST(Reduce, ProbeRejections) {
  const EdgePoint x{0, 0.5};
  EXPECT_EQ(code_of([&] { implicit_slope(custom([](double p) { return p + 1.0; }), x, 0.0); }), Errc::no_subsolution);
  EXPECT_EQ(code_of([&] { implicit_slope(custom([](double) { return -1.0; }), x, 0.0); }), Errc::coercivity);
  EXPECT_EQ(code_of([&] { implicit_slope(custom([](double p) { return p > 5 ? NAN : p - 1.0; }), x, 0.0); }),
            Errc::coercivity);
  // flat after crossing zero is not strictly increasing
  EXPECT_EQ(code_of([&] { implicit_slope(custom([](double p) { return std::min(p - 1.0, 1.0); }), x, 0.0); }),
            Errc::nonmonotone_hamiltonian);
  EXPECT_NEAR(implicit_slope(custom([](double p) { return p * p * p - 8.0; }), x, 0.0), 2.0, 1e-9);
}

TEST(Reduce, RejectionNamesEdge) {
  auto g = interval();
  try {
    reduce_to_eikonal(catalog_hamiltonian("nonmono-a", unit_cost(*g)), *g, zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("edge 'i'"), std::string::npos);
  }
}

TEST(SolveGeneral, AffineOneIteration) {
  auto g = interval();
  const GeneralSolution sol = solve_general(catalog_hamiltonian("eikonal-affine", unit_cost(*g)), g,
                                            {{0, 0.0}, {1, 0.0}}, 0.0);
  EXPECT_EQ(sol.iterations, 1u);
  const ValueFunction direct = solve(g, unit_cost(*g), {{0, 0.0}, {1, 0.0}});
  for (int i = 0; i <= 40; ++i) {
    const GraphPoint x = GraphPoint::on_edge(*g, 0, 0.05 * i);
    EXPECT_NEAR(sol.u.value(x), direct.value(x), 1e-9);
  }
  EXPECT_LE(sol.equation_residual, 1e-8);
}

TEST(SolveGeneral, QuadraticMatchesEikonalSolve) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 5; ++trial) {
    const auto inst = testing_support::random_instance(rng, 8, 12);
    const GeneralSolution sol =
        solve_general(catalog_hamiltonian("quadratic", inst.cost), inst.graph, inst.boundary, 0.0);
    const ValueFunction direct = solve(inst.graph, inst.cost, inst.boundary);
    for (VertexId v = 0; v < inst.graph->vertex_count(); ++v) {
      EXPECT_NEAR(sol.u.vertex_values()[v], direct.vertex_values()[v], 1e-7 * (1 + direct.vertex_values()[v]));
    }
  }
}

TEST(SolveGeneral, DiscountedOnInterval) {
  auto g = interval();
  GeneralOptions opts;
  opts.reduce.knots = 1025;
  const GeneralSolution sol = solve_general(catalog_hamiltonian("discounted", unit_cost(*g)), g,
                                            {{0, 0.0}, {1, 0.0}}, 1.0, opts);
  EXPECT_GT(sol.iterations, 1u);
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double s = 0.01 * i;
    const double d = 1.0 - std::abs(s - 1.0);
    worst = std::max(worst, std::abs(sol.u.value(GraphPoint::on_edge(*g, 0, s)) - (1.0 - std::exp(-d))));
  }
  EXPECT_LE(worst, 1e-6);
  for (std::size_t k = 1; k < sol.history.size(); ++k) EXPECT_LE(sol.history[k], sol.history[k - 1]);
}

TEST(SolveGeneral, DivergenceAndPreconditions) {
  auto g = interval();
  GeneralOptions opts;
  opts.max_iterations = 2;
  const auto f = unit_cost(*g);
  EXPECT_EQ(code_of([&] { solve_general(catalog_hamiltonian("discounted", f), g, {{0, 0.0}, {1, 0.0}}, 1.0, opts); }),
            Errc::divergence);
  // p - r - f decreases in r
  Hamiltonian anti;
  anti.name = "anti";
  anti.depends_on_r = true;
  anti.evaluator = [](const EdgePoint&, double r, double p) { return p - r - 1.0; };
  EXPECT_EQ(code_of([&] { solve_general(anti, g, {{0, 0.0}, {1, 0.0}}, 0.0); }), Errc::precondition);
  EXPECT_EQ(code_of([&] { solve_general(catalog_hamiltonian("quadratic", f), g, {{0, 0.0}, {1, 0.0}}, -1.0); }),
            Errc::argument);
}

TEST(Kruzkov, RoundTrip) {
  auto g = interval();
  const auto u = std::make_shared<const ValueFunction>(solve(g, unit_cost(*g), {{0, 0.0}, {1, 0.3}}));
  const auto U = kruzkov(u, KruzkovDirection::forward);
  const auto back = kruzkov(U, KruzkovDirection::inverse);
  for (int i = 0; i <= 40; ++i) {
    const GraphPoint x = GraphPoint::on_edge(*g, 0, 0.05 * i);
    EXPECT_NEAR(back->value(x), u->value(x), 1e-12);
    EXPECT_LT(U->value(x), 0.0);
  }
  // x = 0.5: u = 0.5
  const GraphPoint half = GraphPoint::on_edge(*g, 0, 1.5);
  const auto tent_u = std::make_shared<const ValueFunction>(solve(g, unit_cost(*g), {{0, 0.0}, {1, 0.0}}));
  EXPECT_NEAR(kruzkov(tent_u, KruzkovDirection::forward)->value(half), -std::exp(-0.5), 1e-15);
}

TEST(Kruzkov, SlopeRelation) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = testing_support::random_instance(rng, 8, 14);
    const auto u = std::make_shared<const ValueFunction>(solve(inst.graph, inst.cost, inst.boundary));
    const KruzkovSlopeReport r = check_kruzkov_slopes(u, sample_points(*inst.graph, 4));
    EXPECT_TRUE(r.pass) << r.worst_gap;
    EXPECT_GT(r.samples, 0u);
  }
  auto g = interval();
  const auto c = std::make_shared<const CallableFunction>(g, [](const GraphPoint&) { return 2.0; });
  const auto Uc = kruzkov(c, KruzkovDirection::forward);
  const SlopeEstimate est = slopes(*Uc, GraphPoint::on_edge(*g, 0, 0.7));
  EXPECT_EQ(est.slope, 0.0);
  EXPECT_TRUE(check_kruzkov_slopes(c, {GraphPoint::on_edge(*g, 0, 0.7)}).pass);
}

TEST(Kruzkov, InverseDomain) {
  auto g = interval();
  const auto nonneg = std::make_shared<const CallableFunction>(g, [](const GraphPoint&) { return 0.0; });
  const auto inv = kruzkov(nonneg, KruzkovDirection::inverse);
  EXPECT_EQ(code_of([&] { inv->value(GraphPoint::at_vertex(0)); }), Errc::domain);
}

TEST(NonmonotoneKink, SlopeThreeIsAZero) {
  auto g = interval();
  // -3|x|
  const auto w = std::make_shared<PiecewiseLinearFunction>(
      g, std::vector<PiecewiseLinearFunction::EdgeSamples>{{{0.0, 1.0, 2.0}, {-3.0, 0.0, -3.0}}});
  const GraphPoint origin = GraphPoint::on_edge(*g, 0, 1.0);
  const SlopeEstimate top = slopes(*w, origin);
  EXPECT_EQ(top.sub_slope, 3.0);
  EXPECT_EQ(top.super_slope, 0.0);
  const Hamiltonian H = catalog_hamiltonian("nonmono-a", unit_cost(*g));
  EXPECT_EQ(H({0, 1.0}, w->value(origin), top.sub_slope), 0.0);
}
