#include "eikonal/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "eikonal/ekeland.hpp"
#include "eikonal/error.hpp"
#include "eikonal/hamiltonian.hpp"
#include "eikonal/io.hpp"
#include "eikonal/one_dim.hpp"
#include "eikonal/sampling.hpp"

namespace eikonal {

namespace {

namespace fs = std::filesystem;

struct Flags {
  std::string out_dir = ".";
  std::optional<double> tol;
  std::optional<double> slope_radius;
  std::optional<double> tau;
  std::uint64_t seed = 1;
  std::size_t quad_knots = 65;
  std::size_t per_edge = 3;
};

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::argument, "cannot write '" + path.string() + "'");
  out << content;
}

fs::path prepare(const Flags& flags) {
  const fs::path dir(flags.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::argument, "cannot create '" + dir.string() + "': " + ec.message());
  return dir;
}

int cmd_solve(const std::string& graph_file, const std::optional<std::string>& csv_edge, std::size_t csv_samples,
              const Flags& flags, std::ostream& out, std::ostream& err) {
  const io::Problem problem = io::load_problem(graph_file);
  const ValueFunction u = solve(problem.graph, problem.cost, problem.boundary);
  const CompatibilityReport compat = check_compatibility(*problem.graph, *problem.cost, problem.boundary, flags.tol);
  const fs::path dir = prepare(flags);
  write_text(dir / "u.json", io::dump(io::value_function_json(u)));
  write_text(dir / "compat.json", io::dump(io::compatibility_json(*problem.graph, compat)));
  if (csv_edge) {
    const auto e = problem.graph->find_edge(*csv_edge);
    if (!e) throw Error(Errc::argument, "unknown edge '" + *csv_edge + "'");
    std::ofstream csv(dir / ("u_" + *csv_edge + ".csv"), std::ios::binary);
    io::write_edge_csv(csv, u, *e, csv_samples);
  }
  if (!compat.pass) {
    for (const auto& v : compat.violations) {
      err << "incompatible boundary data: g(" << problem.graph->vertex(v.x).name << ") exceeds g("
          << problem.graph->vertex(v.y).name << ") + L_f by " << io::csv_number(v.excess) << '\n';
    }
    return kExitIncompatible;
  }
  out << "solved " << problem.graph->vertex_count() << " vertices, " << problem.graph->edge_count() << " edges\n";
  return kExitOk;
}

int cmd_verify(const std::string& graph_file, const std::string& u_file, const std::string& mode,
               const std::optional<std::string>& curves_file, std::size_t curve_count, const Flags& flags,
               std::ostream& out, std::ostream& err) {
  const io::Problem problem = io::load_problem(graph_file);
  const ValueFunction u = io::parse_value_function(io::parse_located(io::read_file(u_file), u_file), problem);
  const MetricGraph& g = *problem.graph;
  const auto samples = sample_points(g, flags.per_edge);
  const fs::path dir = prepare(flags);

  bool pass = false;
  std::string where;
  if (mode == "monge") {
    SlopeOptions so;
    if (flags.slope_radius) {
      so.r0 = flags.slope_radius;
      so.force_radius = true;
    }
    const MongeReport report = verify_monge(u, *problem.cost, samples, flags.tol, so);
    write_text(dir / "monge.json", io::dump(io::monge_json(g, report)));
    std::ofstream csv(dir / "monge.csv", std::ios::binary);
    io::write_monge_csv(csv, g, report);
    pass = report.solution;
    if (report.worst_point) where = describe(g, *report.worst_point);
    out << "monge: " << (pass ? "pass" : "FAIL") << ", worst violation " << io::csv_number(report.worst_violation);
  } else if (mode == "dpp") {
    DppOptions opts;
    opts.tau = flags.tau;
    opts.tol = flags.tol;
    const DppReport report = verify_dpp(u, *problem.cost, samples, opts);
    write_text(dir / "dpp.json", io::dump(io::dpp_json(g, report)));
    pass = report.pass;
    if (report.worst_point) where = describe(g, *report.worst_point);
    out << "dpp: " << (pass ? "pass" : "FAIL") << ", worst residual " << io::csv_number(report.worst_residual);
  } else if (mode == "subopt") {
    const std::vector<Curve> curves =
        curves_file ? io::parse_curves(io::parse_located(io::read_file(*curves_file), *curves_file), g)
                    : random_curves(g, curve_count, flags.seed);
    SuboptOptions opts;
    opts.tol = flags.tol;
    opts.seed = flags.seed;
    const SuboptReport report = verify_suboptimality(u, *problem.cost, curves, opts);
    write_text(dir / "subopt.json", io::dump(io::subopt_json(report)));
    pass = report.pass;
    if (!report.violations.empty()) where = "curve " + std::to_string(report.violations.front().curve);
    out << "subopt: " << (pass ? "pass" : "FAIL") << ", " << report.pairs_checked << " pairs, worst excess "
        << io::csv_number(report.worst_excess);
  } else if (mode == "modulus") {
    const ModulusReport report = boundary_modulus(u, std::nullopt, samples, flags.tol);
    write_text(dir / "modulus.json", io::dump(io::modulus_json(g, report)));
    pass = report.pass;
    if (!report.violations.empty()) where = describe(g, report.violations.front().x);
    out << "modulus: " << (pass ? "pass" : "FAIL") << ", " << report.pairs << " pairs";
  } else {
    throw Error(Errc::argument, "unknown verification mode '" + mode + "'");
  }
  if (!pass && !where.empty()) out << " at " << where;
  out << '\n';
  if (!pass) err << "verification failed (" << mode << ")\n";
  return pass ? kExitOk : kExitVerification;
}

int cmd_reduce(const std::string& graph_file, const std::string& name, double lambda, const Flags& flags,
               std::ostream& out) {
  const io::Problem problem = io::load_problem(graph_file);
  const Hamiltonian H = catalog_hamiltonian(name, problem.cost);
  GeneralOptions opts;
  opts.reduce.knots = flags.quad_knots;
  GeneralSolution sol = [&] {
    try {
      return solve_general(H, problem.graph, problem.boundary, lambda, opts);
    } catch (const Error& e) {
      // a failed r-monotonicity probe rejects H as well
      if (e.code() == Errc::precondition) throw Error(Errc::nonmonotone_hamiltonian, e.what());
      throw;
    }
  }();
  const fs::path dir = prepare(flags);
  write_text(dir / "u.json", io::dump(io::value_function_json(sol.u)));
  io::Json history = io::Json::array();
  for (double h : sol.history) history.push_back(h);
  write_text(dir / "reduce.json", io::dump({{"hamiltonian", name},
                                            {"lambda", lambda},
                                            {"iterations", sol.iterations},
                                            {"history", std::move(history)},
                                            {"equation_residual", sol.equation_residual}}));
  out << "reduced '" << name << "' in " << sol.iterations << " iterations, residual "
      << io::csv_number(sol.equation_residual) << '\n';
  return kExitOk;
}

int cmd_viscous(const std::vector<double>& eps, std::size_t grid, const Flags& flags, std::ostream& out) {
  if (eps.empty() || eps.size() > 7) throw Error(Errc::argument, "give between 1 and 7 viscosities");
  std::vector<one_dim::Profile1D> profiles;
  for (double e : eps) profiles.push_back(one_dim::viscous_solution(e, grid));
  profiles.push_back(one_dim::sample([](double x) { return 1.0 - std::abs(x); }, grid, "1 - |x|"));
  const fs::path dir = prepare(flags);
  {
    std::ofstream csv(dir / "viscous.csv", std::ios::binary);
    one_dim::write_csv(csv, profiles);
  }
  std::ofstream svg(dir / "viscous.svg", std::ios::binary);
  one_dim::write_svg(svg, profiles, "vanishing viscosity: u_eps and 1 - |x|");
  out << "wrote " << profiles.size() << " profiles on " << grid << " points\n";
  return kExitOk;
}

int cmd_ekeland(const std::string& dist_file, const std::string& f_file, double eps, std::size_t x0,
                std::ostream& out) {
  const auto matrix = io::parse_csv_numbers(io::read_file(dist_file), dist_file);
  std::vector<double> f;
  for (const auto& row : io::parse_csv_numbers(io::read_file(f_file), f_file)) f.insert(f.end(), row.begin(), row.end());
  const FiniteMetricSpace space(matrix);
  out << ekeland_point(space, f, eps, x0) << '\n';
  return kExitOk;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::nonmonotone_hamiltonian:
    case Errc::no_subsolution:
    case Errc::coercivity:
    case Errc::divergence:
      return kExitHamiltonian;
    default:
      return kExitInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eikonal equation solver and viscosity-solution verifier on metric graphs", "eikonal"};
  app.require_subcommand(1);
  Flags flags;
  auto common = [&flags](CLI::App* sub) {
    sub->add_option("--out-dir", flags.out_dir, "Directory for output files")->capture_default_str();
  };

  std::string graph_file, u_file, mode, ham, dist_file, f_file;
  std::optional<std::string> csv_edge, curves_file;
  std::size_t csv_samples = 101, curve_count = 100, grid = 4097, x0 = 0;
  double lambda = 0.0, eps = 0.0;
  std::vector<double> eps_list;

  auto* solve_cmd = app.add_subcommand("solve", "Solve |grad u| = f with the boundary data in GRAPH");
  solve_cmd->add_option("graph", graph_file, "Graph JSON")->required();
  solve_cmd->add_option("--tol", flags.tol, "Compatibility tolerance");
  solve_cmd->add_option("--edge-csv", csv_edge, "Also write u sampled along this edge");
  solve_cmd->add_option("--csv-samples", csv_samples, "Points for --edge-csv")->capture_default_str();
  common(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a u file against the graph");
  verify_cmd->add_option("graph", graph_file, "Graph JSON")->required();
  verify_cmd->add_option("u", u_file, "u JSON written by solve")->required();
  verify_cmd->add_option("mode", mode, "monge, dpp, subopt or modulus")
      ->required()
      ->check(CLI::IsMember({"monge", "dpp", "subopt", "modulus"}));
  verify_cmd->add_option("--tol", flags.tol, "Tolerance (mode-specific default)");
  verify_cmd->add_option("--slope-radii", flags.slope_radius,
                         "Use difference quotients at radii R0 2^-k instead of exact slopes");
  verify_cmd->add_option("--tau", flags.tau, "DPP arc length (default: half the local shortest edge)");
  verify_cmd->add_option("--seed", flags.seed, "Seed for sampled curves and parameters")->capture_default_str();
  verify_cmd->add_option("--samples-per-edge", flags.per_edge, "Interior sample points per edge")
      ->capture_default_str();
  verify_cmd->add_option("--curves", curves_file, "Curves JSON for subopt (default: random curves)");
  verify_cmd->add_option("--curve-count", curve_count, "Random curves for subopt")->capture_default_str();
  common(verify_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "Solve H(x, u, |grad u|) = 0 by reduction to eikonal form");
  reduce_cmd->add_option("graph", graph_file, "Graph JSON (f feeds the catalog Hamiltonians)")->required();
  reduce_cmd->add_option("hamiltonian", ham, "Catalog name")->required()->check(CLI::IsMember(catalog_names()));
  reduce_cmd->add_option("--lambda", lambda, "Monotonicity constant in r")->capture_default_str();
  reduce_cmd->add_option("--quad-knots", flags.quad_knots, "Knots per edge for the reduced cost")
      ->capture_default_str();
  common(reduce_cmd);

  auto* viscous_cmd = app.add_subcommand("viscous", "Vanishing-viscosity profiles on [-1, 1]");
  viscous_cmd->add_option("eps", eps_list, "Comma-separated viscosities")->required()->delimiter(',');
  viscous_cmd->add_option("--grid", grid, "Grid points")->capture_default_str();
  common(viscous_cmd);

  auto* ekeland_cmd = app.add_subcommand("ekeland", "Ekeland point of a finite metric space");
  ekeland_cmd->add_option("distances", dist_file, "CSV distance matrix")->required();
  ekeland_cmd->add_option("values", f_file, "CSV values")->required();
  ekeland_cmd->add_option("--eps", eps, "Penalty slope")->required();
  ekeland_cmd->add_option("--x0", x0, "Starting point index")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(graph_file, csv_edge, csv_samples, flags, out, err);
    if (*verify_cmd) return cmd_verify(graph_file, u_file, mode, curves_file, curve_count, flags, out, err);
    if (*reduce_cmd) return cmd_reduce(graph_file, ham, lambda, flags, out);
    if (*viscous_cmd) return cmd_viscous(eps_list, grid, flags, out);
    return cmd_ekeland(dist_file, f_file, eps, x0, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace eikonal
