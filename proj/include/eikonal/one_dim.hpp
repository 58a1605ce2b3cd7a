#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "eikonal/graph_function.hpp"
#include "eikonal/metric_graph.hpp"

namespace eikonal::one_dim {

/// Samples on the uniform grid x_i = (2i - (n-1)) / (n-1) over [-1, 1]. The
/// numerator form makes the grid exactly symmetric.
class Profile1D {
 public:
  explicit Profile1D(std::vector<double> values, std::string label = {});

  static double grid_point(std::size_t i, std::size_t n);
  static std::vector<double> grid(std::size_t n);

  std::size_t size() const { return values_.size(); }
  double x(std::size_t i) const { return grid_point(i, values_.size()); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  const std::string& label() const { return label_; }

  /// Piecewise-linear interpolant.
  double at(double x) const;

 private:
  std::vector<double> values_;
  std::string label_;
};

/// Samples fn on an n-point grid.
template <class Fn>
Profile1D sample(Fn&& fn, std::size_t n, std::string label = {}) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = fn(Profile1D::grid_point(i, n));
  return Profile1D(std::move(v), std::move(label));
}

/// log cosh t without overflow: |t| - log 2 + log1p(exp(-2|t|)).
double logcosh(double t);

/// u_eps(x) = eps (log cosh(1/eps) - log cosh(x/eps)), the solution of
/// |u'|^2 - eps u'' = 1 on (-1, 1) with zero boundary values.
double viscous_value(double eps, double x);
Profile1D viscous_solution(double eps, std::size_t n);

struct MonotoneReport {
  bool pass = true;
  std::size_t worst_index = 0;  // index where the largest increase occurs
  double worst_increase = 0.0;
};

/// u(x) - int_{-1}^x f nonincreasing on the grid (trapezoid integral),
/// which certifies u' <= f in the viscosity sense.
MonotoneReport check_subsolution_monotone(const Profile1D& u, const Profile1D& f);

/// For nonincreasing u: u(x) + int_{-1}^x f nonincreasing, which certifies
/// |u'| >= f. Throws Errc::precondition when u increases somewhere.
MonotoneReport check_supersolution_monotone(const Profile1D& u, const Profile1D& f);

/// Sawtooth solutions of |u'| = 1 a.e. with u(+-1) = 0; member j has j
/// teeth of width 2/j, member 1 is 1 - |x|.
std::vector<Profile1D> weak_solution_zoo(std::size_t k, std::size_t n);

/// The interval [-1, 1] as one edge of length 2, both ends boundary.
std::shared_ptr<const MetricGraph> interval_graph();

/// Point of interval_graph() at coordinate x.
GraphPoint interval_point(const MetricGraph& g, double x);

/// Profile as a piecewise-linear function on interval_graph().
std::shared_ptr<const GraphFunction> as_graph_function(const Profile1D& u,
                                                       std::shared_ptr<const MetricGraph> g);

void write_csv(std::ostream& os, const std::vector<Profile1D>& profiles);

/// Line plot of up to 8 profiles in an 800x600 viewBox with axes and legend.
void write_svg(std::ostream& os, const std::vector<Profile1D>& profiles, const std::string& title);

}  // namespace eikonal::one_dim
