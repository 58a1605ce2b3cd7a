#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eikonal/ekeland.hpp"
#include "eikonal/error.hpp"

using namespace eikonal;

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

FiniteMetricSpace line(const std::vector<double>& coords) {
  std::vector<std::vector<double>> d(coords.size(), std::vector<double>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j) d[i][j] = std::abs(coords[i] - coords[j]);
  return FiniteMetricSpace(std::move(d));
}

// every x satisfying both conditions of the principle, by enumeration
std::vector<std::size_t> ekeland_points(const FiniteMetricSpace& X, const std::vector<double>& f, double eps,
                                        std::size_t x0) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < X.size(); ++x) {
    if (!(f[x] <= f[x0] - eps * X.distance(x0, x))) continue;
    bool strict = true;
    for (std::size_t y = 0; y < X.size(); ++y) {
      if (y != x && !(f[x] < f[y] + eps * X.distance(y, x))) strict = false;
    }
    if (strict) out.push_back(x);
  }
  return out;
}

// integer L1 points in a box, so all distances are exact
FiniteMetricSpace random_l1(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coord(0, 20);
  std::vector<std::array<int, 2>> pts;
  while (pts.size() < n) {
    const std::array<int, 2> p{coord(rng), coord(rng)};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = std::abs(pts[i][0] - pts[j][0]) + std::abs(pts[i][1] - pts[j][1]);
  return FiniteMetricSpace(std::move(d));
}

}  // namespace

TEST(Ekeland, TwoPoints) {
  const auto X = line({0.0, 1.0});
  EXPECT_EQ(ekeland_point(X, {0.0, 5.0}, 1.0, 0), 0u);
  EXPECT_TRUE(check_ekeland(X, {0.0, 5.0}, 1.0, 0, 0).pass());
}

TEST(Ekeland, ThreeCollinearPoints) {
  const auto X = line({0.0, 1.0, 2.0});
  const std::vector<double> f{3.0, 1.0, 0.0};
  const auto oracle = ekeland_points(X, f, 0.5, 0);
  ASSERT_EQ(oracle, std::vector<std::size_t>{2});
  const EkelandResult r = ekeland_descent(X, f, 0.5, 0);
  EXPECT_EQ(r.point, 2u);
  EXPECT_EQ(r.sequence, (std::vector<std::size_t>{0, 2}));
  const EkelandCheck bad = check_ekeland(X, f, 0.5, 0, 1);
  EXPECT_TRUE(bad.decrease);
  EXPECT_FALSE(bad.strict);
  EXPECT_EQ(bad.violator, std::optional<std::size_t>{2});
}

TEST(Ekeland, HugeEpsilonStaysPut) {
  const auto X = line({0.0, 1.0, 2.0, 5.0});
  EXPECT_EQ(ekeland_point(X, {3.0, 1.0, 0.0, -4.0}, 1e6, 1), 1u);
}

TEST(Ekeland, InfiniteValuesAllowed) {
  const auto X = line({0.0, 1.0, 2.0});
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(ekeland_point(X, {inf, 2.0, 0.0}, 0.5, 1), 2u);
}

TEST(Ekeland, RandomSpacesAgainstEnumeration) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 25)(rng);
    const auto X = random_l1(rng, n);
    std::vector<double> f(n);
    for (double& v : f) v = std::uniform_int_distribution<int>(-40, 40)(rng) / 4.0;
    const double eps = std::ldexp(1.0, std::uniform_int_distribution<int>(-4, 2)(rng));
    const std::size_t x0 = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const EkelandResult r = ekeland_descent(X, f, eps, x0);
    const auto oracle = ekeland_points(X, f, eps, x0);
    EXPECT_NE(std::find(oracle.begin(), oracle.end(), r.point), oracle.end());
    EXPECT_EQ(r.sequence.front(), x0);
    EXPECT_EQ(r.sequence.back(), r.point);
    // each step lowers f + eps d(x_0, .)
    for (std::size_t k = 1; k < r.sequence.size(); ++k) {
      const std::size_t a = r.sequence[k - 1], b = r.sequence[k];
      EXPECT_LE(f[b] + eps * X.distance(a, b), f[a]);
      EXPECT_LT(f[b], f[a]);
    }
  }
}

TEST(Ekeland, ArgumentErrors) {
  const auto X = line({0.0, 1.0});
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(code_of([&] { ekeland_point(X, {0.0}, 1.0, 0); }), Errc::argument);
  EXPECT_EQ(code_of([&] { ekeland_point(X, {0.0, 1.0}, 1.0, 2); }), Errc::argument);
  EXPECT_EQ(code_of([&] { ekeland_point(X, {0.0, 1.0}, 0.0, 0); }), Errc::argument);
  EXPECT_EQ(code_of([&] { ekeland_point(X, {0.0, NAN}, 1.0, 0); }), Errc::argument);
  EXPECT_EQ(code_of([&] { ekeland_point(X, {0.0, -inf}, 1.0, 0); }), Errc::argument);
  EXPECT_EQ(code_of([&] { ekeland_point(X, {inf, 1.0}, 1.0, 0); }), Errc::argument);
  EXPECT_EQ(code_of([&] { FiniteMetricSpace({{0.0, 1.0}, {2.0, 0.0}}); }), Errc::validation);
}

TEST(EkelandMaximize, ConstantAndSinglePoint) {
  const auto X = line({0.0, 1.0, 3.0});
  EXPECT_EQ(ekeland_maximize(X, {2.0, 2.0, 2.0}, 0.25, 0.5, 1), 1u);
  EXPECT_EQ(ekeland_maximize(line({0.0}), {7.0}, 0.25, 0.5, 0), 0u);
}

TEST(EkelandMaximize, RandomSpaces) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 10;
    const auto X = random_l1(rng, n);
    std::vector<double> f(n);
    for (double& v : f) v = std::uniform_int_distribution<int>(-40, 40)(rng) / 8.0;
    const double eps = std::ldexp(1.0, std::uniform_int_distribution<int>(-3, 1)(rng));
    const double delta = eps * eps, lambda = eps;
    const double sup = *std::max_element(f.begin(), f.end());
    std::vector<std::size_t> admissible;
    for (std::size_t i = 0; i < n; ++i)
      if (f[i] >= sup - delta) admissible.push_back(i);
    const std::size_t x0 = admissible[std::uniform_int_distribution<std::size_t>(0, admissible.size() - 1)(rng)];
    const std::size_t x = ekeland_maximize(X, f, delta, lambda, x0);
    EXPECT_TRUE(check_corollary(X, f, delta, lambda, x0, x).pass());
    EXPECT_GE(f[x], f[x0]);
    EXPECT_LE(X.distance(x, x0), lambda);
  }
}

TEST(EkelandMaximize, Precondition) {
  const auto X = line({0.0, 1.0});
  EXPECT_EQ(code_of([&] { ekeland_maximize(X, {0.0, 1.0}, 0.5, 1.0, 0); }), Errc::precondition);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(ekeland_maximize(X, {-inf, 1.0}, 0.5, 1.0, 1), 1u);
}
