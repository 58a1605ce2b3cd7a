#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eikonal/metric_graph.hpp"

namespace eikonal {

struct EkelandResult {
  std::size_t point = 0;
  std::vector<std::size_t> sequence;  // x_0, x_1, ..., ending at `point`
};

/// Descent x_{n+1} = the f-minimizer of S(x_n) = {y : f(y) + eps d(x_n, y) <= f(x_n)}
/// (smallest index on ties), stopping once S(x_n) = {x_n}. f may be +inf
/// but not -inf or NaN. The result is re-checked against both conditions
/// by a full scan; Errc::contract if rounding broke either of them.
EkelandResult ekeland_descent(const FiniteMetricSpace& space, const std::vector<double>& f,
                              double eps, std::size_t x0);

std::size_t ekeland_point(const FiniteMetricSpace& space, const std::vector<double>& f, double eps,
                          std::size_t x0);

struct EkelandCheck {
  bool decrease = true;  // f(x) <= f(x0) - eps d(x0, x)
  bool strict = true;    // f(x) < f(y) + eps d(y, x) for y != x
  std::optional<std::size_t> violator;  // first y breaking `strict`
  bool pass() const { return decrease && strict; }
};

/// Brute-force check of a candidate point.
EkelandCheck check_ekeland(const FiniteMetricSpace& space, const std::vector<double>& f, double eps,
                           std::size_t x0, std::size_t x);

/// Maximization form: for f(x0) >= sup f - delta returns x with f(x) >= f(x0),
/// d(x, x0) <= lambda and f(x) > f(y) - (delta/lambda) d(y, x) for y != x.
/// f may be -inf. Throws Errc::precondition when f(x0) < sup f - delta.
std::size_t ekeland_maximize(const FiniteMetricSpace& space, const std::vector<double>& f,
                             double delta, double lambda, std::size_t x0);

struct CorollaryCheck {
  bool no_lower = true;   // f(x) >= f(x0)
  bool close = true;      // d(x, x0) <= lambda
  bool strict = true;     // f(x) > f(y) - (delta/lambda) d(y, x)
  bool pass() const { return no_lower && close && strict; }
};

CorollaryCheck check_corollary(const FiniteMetricSpace& space, const std::vector<double>& f,
                               double delta, double lambda, std::size_t x0, std::size_t x);

}  // namespace eikonal
