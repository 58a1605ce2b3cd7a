#include "eikonal/ekeland.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "eikonal/error.hpp"

namespace eikonal {

namespace {

void check_inputs(const FiniteMetricSpace& space, const std::vector<double>& f, std::size_t x0) {
  if (f.size() != space.size()) {
    std::ostringstream msg;
    msg << "expected " << space.size() << " values, got " << f.size();
    throw Error(Errc::argument, msg.str());
  }
  if (x0 >= space.size()) throw Error(Errc::argument, "starting point out of range");
}

}  // namespace

EkelandResult ekeland_descent(const FiniteMetricSpace& space, const std::vector<double>& f,
                              double eps, std::size_t x0) {
  check_inputs(space, f, x0);
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(Errc::argument, "eps must be positive");
  bool any_finite = false;
  for (double v : f) {
    if (std::isnan(v) || v == -std::numeric_limits<double>::infinity()) {
      throw Error(Errc::argument, "values must be real or +inf");
    }
    any_finite = any_finite || std::isfinite(v);
  }
  if (!any_finite) throw Error(Errc::argument, "all values are infinite");
  if (!std::isfinite(f[x0])) throw Error(Errc::argument, "f(x0) must be finite");

  EkelandResult result{x0, {x0}};
  std::size_t x = x0;
  for (;;) {
    std::size_t best = x;
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (y == x || !(f[y] + eps * space.distance(x, y) <= f[x])) continue;
      if (best == x || f[y] < f[best]) best = y;
    }
    if (best == x) break;
    x = best;
    result.sequence.push_back(x);
  }
  result.point = x;

  const EkelandCheck check = check_ekeland(space, f, eps, x0, x);
  if (!check.pass()) {
    std::ostringstream msg;
    msg << "rounding broke the Ekeland conditions at point " << x;
    throw Error(Errc::contract, msg.str());
  }
  return result;
}

std::size_t ekeland_point(const FiniteMetricSpace& space, const std::vector<double>& f, double eps,
                          std::size_t x0) {
  return ekeland_descent(space, f, eps, x0).point;
}

EkelandCheck check_ekeland(const FiniteMetricSpace& space, const std::vector<double>& f, double eps,
                           std::size_t x0, std::size_t x) {
  check_inputs(space, f, x0);
  EkelandCheck out;
  out.decrease = f[x] <= f[x0] - eps * space.distance(x0, x);
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (y != x && !(f[x] < f[y] + eps * space.distance(y, x))) {
      out.strict = false;
      out.violator = y;
      break;
    }
  }
  return out;
}

std::size_t ekeland_maximize(const FiniteMetricSpace& space, const std::vector<double>& f,
                             double delta, double lambda, std::size_t x0) {
  check_inputs(space, f, x0);
  if (!(delta > 0.0) || !(lambda > 0.0)) throw Error(Errc::argument, "delta and lambda must be positive");
  double sup = -std::numeric_limits<double>::infinity();
  std::vector<double> neg(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::isnan(f[i]) || f[i] == std::numeric_limits<double>::infinity()) {
      throw Error(Errc::argument, "values must be real or -inf");
    }
    sup = std::max(sup, f[i]);
    neg[i] = -f[i];
  }
  if (!(f[x0] >= sup - delta)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "f(x0) = " << f[x0] << " is below sup f - delta = " << sup - delta;
    throw Error(Errc::precondition, msg.str());
  }
  const std::size_t x = ekeland_point(space, neg, delta / lambda, x0);
  if (!check_corollary(space, f, delta, lambda, x0, x).pass()) {
    std::ostringstream msg;
    msg << "rounding broke the corollary conditions at point " << x;
    throw Error(Errc::contract, msg.str());
  }
  return x;
}

CorollaryCheck check_corollary(const FiniteMetricSpace& space, const std::vector<double>& f,
                               double delta, double lambda, std::size_t x0, std::size_t x) {
  check_inputs(space, f, x0);
  const double eps = delta / lambda;
  CorollaryCheck out;
  out.no_lower = f[x] >= f[x0];
  out.close = space.distance(x, x0) <= lambda;
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (y != x && !(f[x] > f[y] - eps * space.distance(y, x))) out.strict = false;
  }
  return out;
}

}  // namespace eikonal
