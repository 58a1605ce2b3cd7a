#include "eikonal/one_dim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "eikonal/error.hpp"

namespace eikonal::one_dim {

Profile1D::Profile1D(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.size() < 3) throw Error(Errc::argument, "profile needs at least 3 grid points");
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(Errc::argument, "profile values must be finite");
  }
}

double Profile1D::grid_point(std::size_t i, std::size_t n) {
  const double m = static_cast<double>(n - 1);
  return (2.0 * static_cast<double>(i) - m) / m;
}

std::vector<double> Profile1D::grid(std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = grid_point(i, n);
  return xs;
}

double Profile1D::at(double x) const {
  const std::size_t n = values_.size();
  const double pos = std::clamp((x + 1.0) * 0.5 * static_cast<double>(n - 1), 0.0,
                                static_cast<double>(n - 1));
  const std::size_t i = std::min(static_cast<std::size_t>(pos), n - 2);
  const double w = pos - static_cast<double>(i);
  return values_[i] + w * (values_[i + 1] - values_[i]);
}

double logcosh(double t) {
  const double a = std::abs(t);
  return a - std::log(2.0) + std::log1p(std::exp(-2.0 * a));
}

double viscous_value(double eps, double x) {
  if (!(eps > 0.0)) throw Error(Errc::argument, "viscosity must be positive");
  return eps * (logcosh(1.0 / eps) - logcosh(x / eps));
}

Profile1D viscous_solution(double eps, std::size_t n) {
  if (!(eps > 0.0)) throw Error(Errc::argument, "viscosity must be positive");
  char label[64];
  std::snprintf(label, sizeof label, "eps=%g", eps);
  return sample([eps](double x) { return viscous_value(eps, x); }, n, label);
}

namespace {

void require_same_grid(const Profile1D& u, const Profile1D& f) {
  if (u.size() != f.size()) throw Error(Errc::argument, "profiles live on different grids");
}

MonotoneReport nonincreasing(const Profile1D& u, const Profile1D& f, double sign) {
  const std::size_t n = u.size();
  const double h = 2.0 / static_cast<double>(n - 1);
  MonotoneReport report;
  double integral = 0.0;
  double prev = u[0];
  for (std::size_t i = 1; i < n; ++i) {
    integral += 0.5 * h * (f[i - 1] + f[i]);
    const double w = u[i] + sign * integral;
    const double increase = w - prev;
    if (increase > report.worst_increase) {
      report.worst_increase = increase;
      report.worst_index = i;
    }
    prev = w;
  }
  report.pass = report.worst_increase <= 1e-12;
  return report;
}

}  // namespace

MonotoneReport check_subsolution_monotone(const Profile1D& u, const Profile1D& f) {
  require_same_grid(u, f);
  return nonincreasing(u, f, -1.0);
}

MonotoneReport check_supersolution_monotone(const Profile1D& u, const Profile1D& f) {
  require_same_grid(u, f);
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] > u[i - 1] + 1e-12) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "u increases between x = %.12g and x = %.12g", u.x(i - 1), u.x(i));
      throw Error(Errc::precondition, msg);
    }
  }
  return nonincreasing(u, f, +1.0);
}

std::vector<Profile1D> weak_solution_zoo(std::size_t k, std::size_t n) {
  if (k < 1) throw Error(Errc::argument, "zoo size must be at least 1");
  std::vector<Profile1D> zoo;
  for (std::size_t j = 1; j <= k; ++j) {
    const double width = 2.0 / static_cast<double>(j);
    auto tooth = [j, width](double x) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i <= j; ++i) {
        const double zero = i == j ? 1.0 : -1.0 + width * static_cast<double>(i);
        best = std::min(best, std::abs(x - zero));
      }
      return best;
    };
    zoo.push_back(sample(tooth, n, std::to_string(j) + (j == 1 ? " tooth" : " teeth")));
  }
  return zoo;
}

std::shared_ptr<const MetricGraph> interval_graph() {
  return std::make_shared<const MetricGraph>(
      std::vector<Vertex>{{"left", true}, {"right", true}},
      std::vector<Edge>{{"interval", 0, 1, 2.0}});
}

GraphPoint interval_point(const MetricGraph& g, double x) {
  return GraphPoint::on_edge(g, 0, std::clamp(x + 1.0, 0.0, 2.0));
}

std::shared_ptr<const GraphFunction> as_graph_function(const Profile1D& u,
                                                       std::shared_ptr<const MetricGraph> g) {
  PiecewiseLinearFunction::EdgeSamples samples;
  for (std::size_t i = 0; i < u.size(); ++i) {
    samples.knots.push_back(u.x(i) + 1.0);
    samples.values.push_back(u[i]);
  }
  samples.knots.front() = 0.0;
  samples.knots.back() = 2.0;
  return std::make_shared<PiecewiseLinearFunction>(std::move(g), std::vector{std::move(samples)});
}

void write_csv(std::ostream& os, const std::vector<Profile1D>& profiles) {
  if (profiles.empty()) return;
  const std::size_t n = profiles.front().size();
  os << "x";
  for (const Profile1D& p : profiles) {
    if (p.size() != n) throw Error(Errc::argument, "profiles live on different grids");
    os << ',' << p.label();
  }
  os << '\n';
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", Profile1D::grid_point(i, n));
    os << buf;
    for (const Profile1D& p : profiles) {
      std::snprintf(buf, sizeof buf, ",%.12g", p[i]);
      os << buf;
    }
    os << '\n';
  }
}

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 70, kRight = 20, kTop = 50, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& os, const std::vector<Profile1D>& profiles, const std::string& title) {
  if (profiles.size() > 8) throw Error(Errc::argument, "at most 8 profiles per plot");
  double ymin = 0.0, ymax = 1.0;
  for (const Profile1D& p : profiles) {
    for (double v : p.values()) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x + 1.0) * 0.5 * plot_w; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
     << escape(title) << "</text>\n";

  // axes
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\"" << fmt(kLeft + plot_w)
     << "\" y2=\"" << fmt(kTop + plot_h) << "\"/>\n";
  os << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
     << "\" y2=\"" << fmt(kTop + plot_h) << "\"/>\n";
  os << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = -1.0 + 0.5 * i;
    os << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\"" << fmt(px(x))
       << "\" y2=\"" << fmt(kTop + plot_h + 6) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(kTop + plot_h + 22)
       << "\" text-anchor=\"middle\">" << fmt(x) << "</text>\n";
    const double y = ymin + (ymax - ymin) * i / 4.0;
    os << "<line x1=\"" << fmt(kLeft - 6) << "\" y1=\"" << fmt(py(y)) << "\" x2=\"" << fmt(kLeft)
       << "\" y2=\"" << fmt(py(y)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(kLeft - 10) << "\" y=\"" << fmt(py(y) + 4) << "\" text-anchor=\"end\">"
       << fmt(y) << "</text>\n";
  }
  os << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 15)
     << "\" text-anchor=\"middle\">x</text>\n";
  os << "</g>\n";

  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const Profile1D& p = profiles[k];
    os << "<polyline fill=\"none\" stroke=\"" << kPalette[k] << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) os << ' ';
      os << fmt(px(p.x(i))) << ',' << fmt(py(p[i]));
    }
    os << "\"/>\n";
  }

  // legend
  const double lx = kLeft + plot_w - 200, ly = kTop + 10;
  os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" width=\"190\" height=\""
     << fmt(10 + 18 * static_cast<double>(profiles.size()))
     << "\" fill=\"white\" stroke=\"#888888\"/>\n";
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const double y = ly + 18 + 18 * static_cast<double>(k);
    os << "<line x1=\"" << fmt(lx + 8) << "\" y1=\"" << fmt(y - 4) << "\" x2=\"" << fmt(lx + 32)
       << "\" y2=\"" << fmt(y - 4) << "\" stroke=\"" << kPalette[k] << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << fmt(lx + 38) << "\" y=\"" << fmt(y) << "\">" << escape(profiles[k].label())
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
}

}  // namespace eikonal::one_dim
