#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracstab/scenario.hpp"
#include "fracstab/stability.hpp"
#include "test_util.hpp"

using namespace fracstab;

namespace {

DelayProblem uh_probe_problem(const PsiMap& psi, double t0, double T,
                              double alpha, double L1, double L2) {
  return DelayProblem(
      [L1, L2](double, double y, double yd) { return L1 * y + L2 * yd; }, L1,
      L2, [](double) { return 0.25; }, FracOrder(alpha, 1.0), psi,
      make_grid(t0, T, (T - t0) / 2.0, 8));
}

}  // namespace

TEST_CASE("estimate_K hand values") {
  const WeightFn one = [](double) { return 1.0; };

  // ordinary integral of 1 on [0,1]: sup ratio is 1
  CHECK(estimate_K(one, 1.0, psi_identity(), *make_grid(0.0, 1.0, 0.5, 128)) ==
        doctest::Approx(1.02).epsilon(1e-12));

  // phi = e^t on [0,2]: sup (1 - e^{-t}) = 1 - e^{-2}
  CHECK(estimate_K([](double t) { return std::exp(t); }, 1.0, psi_identity(),
                   *make_grid(0.0, 2.0, 1.0, 1024)) ==
        doctest::Approx(0.88195801109865505).epsilon(1e-6));

  // alpha = 1/2 on [0,1]: sup t^{1/2}/Gamma(3/2) hit exactly at T
  CHECK(estimate_K(one, 0.5, psi_identity(), *make_grid(0.0, 1.0, 0.5, 256)) ==
        doctest::Approx(1.1509467504374228).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(
      estimate_K([](double t) { return t; }, 1.0, psi_identity(),
                 *make_grid(0.0, 1.0, 0.5, 16)),
      "phi must be positive", std::invalid_argument);
}

TEST_CASE("estimate_K is scale invariant") {
  auto grid = make_grid(0.0, 1.5, 0.5, 192);
  const WeightFn phi = [](double t) { return 1.0 + 0.25 * std::cos(t); };
  const double base = estimate_K(phi, 0.6, psi_identity(), *grid);
  for (double c : {0.125, 3.0, 1e6}) {
    const WeightFn scaled = [phi, c](double t) { return c * phi(t); };
    CHECK(estimate_K(scaled, 0.6, psi_identity(), *grid) ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("degenerate Lipschitz data fails closed") {
  DelayProblem problem([](double t, double, double) { return std::sin(t); },
                       0.0, 0.0, [](double) { return 0.0; }, FracOrder(1.0, 0.0),
                       psi_identity(), make_grid(0.0, 1.0, 0.5, 64));
  const StabilityCertificate cert =
      certify_uhr(problem, [](double) { return 1.0; }, 10, 1);
  CHECK_FALSE(cert.condition_ok);
  CHECK_FALSE(cert.pass);
  CHECK(cert.reason.find("degenerate Lipschitz") != std::string::npos);
  CHECK(cert.experiments == 0);
}

TEST_CASE("an overdriven contraction fails closed") {
  DelayProblem problem(
      [](double, double y, double yd) { return 0.8 * y + 0.8 * yd; }, 0.8, 0.8,
      [](double) { return 1.0; }, FracOrder(1.0, 0.0), psi_identity(),
      make_grid(0.0, 1.0, 0.5, 64));
  const StabilityCertificate cert =
      certify_uhr(problem, [](double) { return 1.0; }, 10, 1);
  CHECK_FALSE(cert.condition_ok);
  CHECK(cert.contraction >= 1.0);
  CHECK(cert.experiments == 0);
}

TEST_CASE("UHR certificate on the worked classical scenario") {
  Scenario s = catalog_scenario("classical-delay-uhr");
  s.steps_per_delay = 256;  // desk-scale for the unit suite
  s.experiments = 10;
  const StabilityCertificate cert =
      certify_uhr(s.make_problem(), s.make_phi(), s.experiments, s.seed);
  CHECK(cert.K == doctest::Approx(1.02).epsilon(1e-12));
  CHECK(cert.contraction == doctest::Approx(0.408).epsilon(1e-12));
  CHECK(cert.condition_ok);
  REQUIRE(cert.bound.has_value());
  CHECK(cert.bound->values().minCoeff() ==
        doctest::Approx(1.7229729729729730).epsilon(1e-12));
  CHECK(cert.experiments == 10);
  CHECK(cert.empirical_sup_ratio <= 1.0 + 1e-6);
  CHECK(cert.pass);
  // Definition-3 probe: empirical c_phi below the theoretical coefficient
  CHECK(cert.generalized_c_phi <= cert.K / (1.0 - cert.contraction) + 1e-6);
  CHECK(static_cast<int>(cert.worst_nodes.size()) == 10);
}

TEST_CASE("UH certificate reproduces the worked bound 0.2") {
  Scenario s = catalog_scenario("classical-uh-worked");
  s.steps_per_delay = 256;
  s.experiments = 5;
  const StabilityCertificate cert =
      certify_uh(s.make_problem(), s.epsilon, s.experiments, s.seed);
  CHECK(cert.condition_ok);
  CHECK(cert.contraction == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(cert.bound.has_value());
  const double B = (*cert.bound)[0];
  CHECK(B == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(cert.pass);

  // closed-form specializations agree to 1e-12
  CHECK(hadamard_bound(0.1, std::exp(1.0), 1.0, 0.3, 0.2) ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK(classical_bound(0.1, 1.0, 0.3, 0.2) ==
        doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("UH bound is linear in epsilon and degenerates cleanly at zero") {
  Scenario s = catalog_scenario("nodelay-caputo-uh");
  s.steps_per_delay = 128;
  s.experiments = 3;
  const DelayProblem problem = s.make_problem();
  const StabilityCertificate c1 = certify_uh(problem, 0.05, 3, s.seed);
  const StabilityCertificate c2 = certify_uh(problem, 0.10, 3, s.seed);
  REQUIRE(c1.condition_ok);
  CHECK((*c2.bound)[0] == doctest::Approx(2.0 * (*c1.bound)[0]).epsilon(1e-12));

  const StabilityCertificate c0 = certify_uh(problem, 0.0, 3, s.seed);
  CHECK((*c0.bound)[0] == 0.0);
  CHECK(c0.empirical_sup_ratio == 0.0);
  CHECK(c0.max_deviation.maxCoeff() == 0.0);
  CHECK(c0.pass);
}

TEST_CASE("UH contraction in the Hadamard scale") {
  // psi = ln t, t0 = 1, T = e^2, alpha = 1/2, L1+L2 = 0.1
  auto problem = uh_probe_problem(psi_log(), 1.0, std::exp(2.0), 0.5, 0.05, 0.05);
  const StabilityCertificate cert = certify_uh(problem, 1.0, 1, 0);
  CHECK(cert.contraction ==
        doctest::Approx(0.15957691216057307).epsilon(1e-12));
  // tight mode coincides because psi(t0) = ln 1 = 0
  const StabilityCertificate tight =
      certify_uh(problem, 1.0, 1, 0, InitialTermMode::PaperLiteral, UhMode::Tight);
  CHECK(tight.contraction == doctest::Approx(cert.contraction).epsilon(1e-15));
}

TEST_CASE("hadamard bound hand values and preconditions") {
  CHECK(hadamard_bound(0.1, std::exp(1.0), 1.0, 0.25, 0.25) ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK(hadamard_bound(0.0, 2.0, 0.5, 0.1, 0.1) == 0.0);
  CHECK(hadamard_bound(1.0, std::exp(2.0), 0.5, 0.1, 0.0) ==
        doctest::Approx(1.8987687805057324).epsilon(1e-12));
  CHECK_THROWS_WITH_AS(hadamard_bound(0.1, std::exp(1.0), 1.0, 0.6, 0.5),
                       "contraction violated", std::invalid_argument);
  CHECK_THROWS_AS(hadamard_bound(0.1, 0.9, 0.5, 0.1, 0.1),
                  std::invalid_argument);
}

TEST_CASE("classical bound hand values and preconditions") {
  CHECK(classical_bound(0.1, 1.0, 0.25, 0.25) ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK(classical_bound(0.0, 1.0, 0.25, 0.25) == 0.0);
  CHECK(classical_bound(1.0, 0.5, 0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_WITH_AS(classical_bound(0.1, 2.0, 0.3, 0.3),
                       "contraction violated", std::invalid_argument);
}

TEST_CASE("verify_bound reports the worst node") {
  auto grid = make_grid(0.0, 1.0, 0.5, 32);
  const Path y0 = Path::sampled(grid, [](double t) { return std::cos(t); });
  const Path bound = Path::constant(grid, 0.5);

  const BoundCheck same = verify_bound(y0, y0, bound);
  CHECK(same.sup_ratio == 0.0);
  CHECK(same.worst_node == grid->node(0));
  CHECK(same.ok);

  // constant paths keep the ratio exactly 0.5 everywhere, so the reported
  // worst node is the first one
  const Path flat = Path::constant(grid, 2.0);
  const BoundCheck half =
      verify_bound(Path(grid, flat.values() + 0.5 * bound.values()), flat, bound);
  CHECK(half.sup_ratio == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half.worst_node == grid->node(0));
  CHECK(half.ok);

  Eigen::ArrayXd spiked = y0.values();
  const int k = grid->t0_index() + 7;
  spiked[k] += 2.0 * bound[k];
  const BoundCheck bad = verify_bound(Path(grid, spiked), y0, bound);
  CHECK(bad.sup_ratio == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(bad.worst_node == grid->node(k));
  CHECK_FALSE(bad.ok);

  CHECK_THROWS_WITH_AS(verify_bound(y0, y0, Path::constant(grid, 0.0)),
                       "bound must be positive", std::invalid_argument);
}
