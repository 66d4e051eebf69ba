#pragma once

#include <filesystem>
#include <string>

#include "fracstab/scenario.hpp"
#include "fracstab/stability.hpp"

namespace fracstab {

// Runs the Rassias-type (function-bound) or constant-bound certification
// flow for a scenario and writes <name>.certificate.txt and <name>.table.csv
// under out_dir. A certificate whose contraction condition fails is still
// written (the run "fails closed"); only solver breakdown is an error.
struct CertifyOutcome {
  StabilityCertificate certificate;
  std::filesystem::path certificate_file;
  std::filesystem::path table_file;
};
CertifyOutcome run_certify(const Scenario& s, StabilityKind kind,
                           const std::filesystem::path& out_dir);

// Solves the scenario's problem and writes <name>.solution.csv and
// <name>.solve.txt.
struct SolveOutcome {
  SolveReport report;
  std::filesystem::path solution_file;
  std::filesystem::path report_file;
};
SolveOutcome run_solve(const Scenario& s, const std::filesystem::path& out_dir);

// Accuracy study of the fractional integral against the closed-form power
// rule with exponent study_delta, doubling steps_per_delay `refinements`
// times. Writes <name>.convergence.csv with rows (n, error, ratio, order).
std::filesystem::path run_convergence_study(const Scenario& s, int refinements,
                                            const std::filesystem::path& out_dir);

// CLI entry point (verbs: solve, certify-uhr, certify-uh, converge).
// Exit codes: 0 = ran, 2 = input error, 3 = numerical failure.
int run_cli(int argc, const char* const* argv);

// %.17g rendering used by every report writer
std::string fmt17(double v);

}  // namespace fracstab
