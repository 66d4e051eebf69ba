#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracstab/delay_problem.hpp"
#include "fracstab/expression.hpp"
#include "fracstab/stability.hpp"

namespace fracstab {

// A fully validated scenario description. Parsed from a JSON document with
// exactly these keys (unknown keys are rejected); one scenario per document
// or a top-level list.
struct Scenario {
  std::string name;
  std::string psi_key = "identity";
  double sigma = 1.0;  // power psi only
  double alpha = 1.0, beta = 0.0;
  double t0 = 0.0, T = 1.0, delay_a = 1.0;
  int steps_per_delay = 64;
  std::string rhs, history, phi;
  double L1 = 0.0, L2 = 0.0;
  double epsilon = 0.1;
  int experiments = 100;
  std::uint64_t seed = 0;
  std::string initial_term_mode = "paper-literal";
  std::string uh_mode = "paper-literal";
  double study_delta = 1.5;  // test exponent of convergence studies

  PsiMap make_psi() const;
  GridPtr make_grid() const;
  DelayProblem make_problem() const;
  WeightFn make_phi() const;
  InitialTermMode mode() const;
  UhMode uhmode() const;
};

Scenario parse_scenario(const std::string& json_text);
// accepts a single object or a list of scenario objects
std::vector<Scenario> parse_scenario_list(const std::string& json_text);

// built-in named scenarios; the same documents ship under scenarios/
const std::vector<Scenario>& catalog();
Scenario catalog_scenario(const std::string& name);
// built-in documents keyed by file stem, for writing scenarios/*.json
const std::vector<std::pair<std::string, std::string>>& catalog_documents();

}  // namespace fracstab
