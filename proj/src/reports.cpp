#include "fracstab/reports.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fracstab/hilfer_derivative.hpp"
#include "fracstab/picard.hpp"
#include "fracstab/rl_quadrature.hpp"

namespace fracstab {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + file.string() +
                                     " for writing");
  return out;
}

const char* kind_name(StabilityKind kind) {
  switch (kind) {
    case StabilityKind::UlamHyersRassias: return "UHR";
    case StabilityKind::UlamHyers: return "UH";
    case StabilityKind::Hadamard: return "Hadamard";
    case StabilityKind::Classical: return "Classical";
  }
  return "?";
}

void write_certificate(const std::filesystem::path& file, const Scenario& s,
                       const StabilityCertificate& cert,
                       const DelayProblem& problem) {
  std::ofstream out = open_out(file);
  out << "kind: " << kind_name(cert.kind) << "\n";
  out << "scenario: " << s.name << "\n";
  out << "lipschitz_warning: "
      << (problem.lipschitz_warning() ? problem.lipschitz_note() : "none")
      << "\n";
  if (cert.kind == StabilityKind::UlamHyersRassias)
    out << "K: " << fmt17(cert.K) << "\n";
  out << "contraction: " << fmt17(cert.contraction) << "\n";
  out << "condition_ok: " << (cert.condition_ok ? "true" : "false") << "\n";
  out << "reason: " << (cert.reason.empty() ? "none" : cert.reason) << "\n";
  if (cert.bound) {
    out << "B_min: " << fmt17(cert.bound->values().minCoeff()) << "\n";
    out << "B_max: " << fmt17(cert.bound->values().maxCoeff()) << "\n";
  }
  out << "experiments: " << cert.experiments << "\n";
  out << "empirical_sup_ratio: " << fmt17(cert.empirical_sup_ratio) << "\n";
  out << "generalized_c_phi: " << fmt17(cert.generalized_c_phi) << "\n";
  out << "pass: " << (cert.pass ? "true" : "false") << "\n";
  out << "\n";
  out << "experiment,worst_t,sup_ratio\n";
  for (std::size_t e = 0; e < cert.worst_nodes.size(); ++e)
    out << e << "," << fmt17(cert.worst_nodes[e].first) << ","
        << fmt17(cert.worst_nodes[e].second) << "\n";
}

void write_table(const std::filesystem::path& file,
                 const StabilityCertificate& cert, const TimeGrid& grid) {
  std::ofstream out = open_out(file);
  out << "t,y0,B,max_abs_deviation\n";
  if (!cert.solution) return;  // fail-closed certificate: header only
  for (int i = 0; i < grid.node_count(); ++i)
    out << fmt17(grid.node(i)) << "," << fmt17((*cert.solution)[i]) << ","
        << fmt17((*cert.bound)[i]) << "," << fmt17(cert.max_deviation[i])
        << "\n";
}

}  // namespace

CertifyOutcome run_certify(const Scenario& s, StabilityKind kind,
                           const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const DelayProblem problem = s.make_problem();
  StabilityCertificate cert;
  if (kind == StabilityKind::UlamHyersRassias) {
    cert = certify_uhr(problem, s.make_phi(), s.experiments, s.seed, s.mode());
  } else {
    cert = certify_uh(problem, s.epsilon, s.experiments, s.seed, s.mode(),
                      s.uhmode(), kind);
  }
  CertifyOutcome outcome{std::move(cert),
                         out_dir / (s.name + ".certificate.txt"),
                         out_dir / (s.name + ".table.csv")};
  write_certificate(outcome.certificate_file, s, outcome.certificate, problem);
  write_table(outcome.table_file, outcome.certificate, problem.grid());
  return outcome;
}

SolveOutcome run_solve(const Scenario& s, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const DelayProblem problem = s.make_problem();
  SolveReport report =
      solve_fixed_point(problem, s.mode(), 1e-10, 200, s.make_phi());
  if (!report.solution.finite())
    throw std::runtime_error("divergent iteration");

  SolveOutcome outcome{std::move(report), out_dir / (s.name + ".solution.csv"),
                       out_dir / (s.name + ".solve.txt")};
  {
    std::ofstream out = open_out(outcome.solution_file);
    out << "t,y0\n";
    const TimeGrid& grid = problem.grid();
    for (int i = 0; i < grid.node_count(); ++i)
      out << fmt17(grid.node(i)) << "," << fmt17(outcome.report.solution[i])
          << "\n";
  }
  {
    std::ofstream out = open_out(outcome.report_file);
    out << "scenario: " << s.name << "\n";
    out << "iterations: " << outcome.report.iterations << "\n";
    out << "converged: " << (outcome.report.converged ? "true" : "false")
        << "\n";
    out << "contraction_observed: " << fmt17(outcome.report.contraction_observed)
        << "\n";
    out << "final_residual_sup: "
        << (outcome.report.final_residual_sup
                ? fmt17(*outcome.report.final_residual_sup)
                : "n/a")
        << "\n";
    out << "initial_jump: " << fmt17(outcome.report.initial_jump) << "\n";
    out << "weighted_sup_norm: "
        << fmt17(weighted_sup_norm(outcome.report.solution, problem.order(),
                                   problem.psi()))
        << "\n";
    out << "lipschitz_warning: "
        << (problem.lipschitz_warning() ? problem.lipschitz_note() : "none")
        << "\n";
  }
  return outcome;
}

std::filesystem::path run_convergence_study(const Scenario& s, int refinements,
                                            const std::filesystem::path& out_dir) {
  if (refinements < 2)
    throw std::invalid_argument("refinements must be at least 2");
  std::filesystem::create_directories(out_dir);
  const PsiMap psi = s.make_psi();
  const std::filesystem::path file = out_dir / (s.name + ".convergence.csv");
  std::ofstream out = open_out(file);
  out << "n,error,ratio,order\n";
  double prev_err = 0.0;
  for (int r = 0; r < refinements; ++r) {
    const int steps = s.steps_per_delay << r;
    const GridPtr grid = fracstab::make_grid(s.t0, s.T, s.delay_a, steps);
    const double delta = s.study_delta;
    const double u0 = psi.eval(grid->t0());
    const Path f = Path::sampled(grid, [&](double t) {
      return t < grid->t0() ? 0.0
                            : pow_frac(psi.eval(t) - u0, delta - 1.0);
    });
    const double value = rl_integral_at_end(f, s.alpha, psi);
    const double oracle =
        power_rule_oracle(delta, s.alpha, psi, grid->t0(), grid->t_end());
    const double err = std::abs(value - oracle);
    out << grid->main_steps() << "," << fmt17(err);
    if (r == 0) {
      out << ",,";
    } else {
      const double ratio = err > 0.0 ? prev_err / err
                                     : std::numeric_limits<double>::infinity();
      out << "," << fmt17(ratio) << "," << fmt17(std::log2(ratio));
    }
    out << "\n";
    prev_err = err;
  }
  return file;
}

namespace {

int dispatch(const std::string& verb, const Scenario& s,
             const std::filesystem::path& out_dir) {
  if (verb == "solve") {
    SolveOutcome o = run_solve(s, out_dir);
    std::cout << "solve " << s.name << ": converged="
              << (o.report.converged ? "true" : "false")
              << " iterations=" << o.report.iterations << " -> "
              << o.solution_file.string() << "\n";
  } else if (verb == "certify-uhr" || verb == "certify-uh") {
    const StabilityKind kind = verb == "certify-uhr"
                                   ? StabilityKind::UlamHyersRassias
                                   : StabilityKind::UlamHyers;
    CertifyOutcome o = run_certify(s, kind, out_dir);
    std::cout << verb << " " << s.name << ": condition_ok="
              << (o.certificate.condition_ok ? "true" : "false")
              << " pass=" << (o.certificate.pass ? "true" : "false")
              << " empirical_sup_ratio=" << fmt17(o.certificate.empirical_sup_ratio)
              << " -> " << o.certificate_file.string() << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"psi-Hilfer delay fractional differential equations: Picard "
               "solver and Ulam-Hyers stability certification"};
  app.require_subcommand(1);

  std::string scenario_file;
  std::string out_dir = "out";
  std::string mode_override, uh_mode_override;
  std::int64_t seed_override = -1;
  int experiments_override = -1;
  int refinements = 4;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_file, "scenario JSON document")
        ->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed_override, "override scenario seed");
    cmd->add_option("--experiments", experiments_override,
                    "override experiment count");
    cmd->add_option("--mode", mode_override,
                    "initial-term mode: paper-literal | weighted-hilfer");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve the delay problem");
  CLI::App* uhr_cmd =
      app.add_subcommand("certify-uhr", "Ulam-Hyers-Rassias certification");
  CLI::App* uh_cmd = app.add_subcommand("certify-uh", "Ulam-Hyers certification");
  CLI::App* conv_cmd =
      app.add_subcommand("converge", "quadrature convergence study");
  for (CLI::App* cmd : {solve_cmd, uhr_cmd, uh_cmd, conv_cmd}) add_common(cmd);
  uh_cmd->add_option("--uh-mode", uh_mode_override,
                     "contraction base: paper-literal | tight");
  conv_cmd->add_option("--refinements", refinements, "number of doublings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    std::ifstream in(scenario_file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read scenario file '" << scenario_file
                << "'\n";
      return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    std::vector<Scenario> scenarios = parse_scenario_list(text.str());
    for (Scenario& s : scenarios) {
      if (seed_override >= 0) s.seed = static_cast<std::uint64_t>(seed_override);
      if (experiments_override >= 0) s.experiments = experiments_override;
      if (!mode_override.empty()) {
        if (mode_override != "paper-literal" && mode_override != "weighted-hilfer")
          throw std::invalid_argument(
              "initial_term_mode must be paper-literal or weighted-hilfer");
        s.initial_term_mode = mode_override;
      }
      if (!uh_mode_override.empty()) {
        if (uh_mode_override != "paper-literal" && uh_mode_override != "tight")
          throw std::invalid_argument("uh_mode must be paper-literal or tight");
        s.uh_mode = uh_mode_override;
      }
      if (verb == "converge") {
        const std::filesystem::path file =
            run_convergence_study(s, refinements, out_dir);
        std::cout << "converge " << s.name << " -> " << file.string() << "\n";
      } else {
        dispatch(verb, s, out_dir);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace fracstab
