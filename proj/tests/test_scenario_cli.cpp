#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fracstab/expression.hpp"
#include "fracstab/reports.hpp"
#include "fracstab/scenario.hpp"

using namespace fracstab;
namespace fs = std::filesystem;

namespace {

const char* kMinimalDoc = R"({
  "name": "minimal", "alpha": 1.0, "beta": 0.0, "psi": "identity",
  "t0": 0.0, "T": 1.0, "delay_a": 1.0,
  "rhs": "0.2*y + 0.2*yd", "L1": 0.2, "L2": 0.2,
  "history": "1", "phi": "1", "epsilon": 0.1
})";

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("fracstab-test-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string patched(const std::string& doc, const std::string& from,
                    const std::string& to) {
  std::string out = doc;
  out.replace(out.find(from), from.size(), to);
  return out;
}

}  // namespace

TEST_CASE("expression grammar") {
  const Expression e = Expression::parse("0.2*y + 0.2*yd - sin(t)*0.5");
  CHECK(e.eval(0.0, 1.0, 2.0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(e.uses_state());

  CHECK(Expression::parse("-t").eval_t(2.0) == -2.0);
  CHECK(Expression::parse("(1 + t)*(1 - t)").eval_t(0.5) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK(Expression::parse("tanh(t)").eval_t(100.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(Expression::parse("cos(0)").eval_t(5.0) == 1.0);
  CHECK_FALSE(Expression::parse("1 + t").uses_state());

  CHECK_THROWS_AS(Expression::parse("y / 2"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("exp(t)"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("sin t"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("(1 + t"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("1 + "), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("z"), std::invalid_argument);
  CHECK_NOTHROW(Expression::parse("1 + t").eval_t(1.0));
  CHECK_THROWS_AS(Expression::parse("y").eval_t(1.0), std::invalid_argument);
}

TEST_CASE("scenario parsing applies defaults and validates") {
  const Scenario s = parse_scenario(kMinimalDoc);
  CHECK(s.name == "minimal");
  CHECK(s.steps_per_delay == 64);
  CHECK(s.experiments == 100);
  CHECK(s.seed == 0);
  CHECK(s.initial_term_mode == "paper-literal");
  CHECK(s.uh_mode == "paper-literal");
  CHECK(s.study_delta == 1.5);

  CHECK_THROWS_WITH_AS(parse_scenario(patched(kMinimalDoc, "\"alpha\": 1.0",
                                              "\"alpha\": 1.5")),
                       "alpha must lie in (0,1]", std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scenario(patched(kMinimalDoc, "\"t0\": 0.0",
                                              "\"t0\": 2.0")),
                       "T must exceed t0", std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scenario(patched(kMinimalDoc, "\"name\"",
                                              "\"nme\"")),
                       "unknown key 'nme'", std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario(patched(kMinimalDoc, "\"rhs\": \"0.2*y + 0.2*yd\"",
                                         "\"rhs\": \"0.2*q\"")),
                  std::invalid_argument);

  // negative phi parses but is rejected when sampled on the grid
  const Scenario bad_phi =
      parse_scenario(patched(kMinimalDoc, "\"phi\": \"1\"", "\"phi\": \"-1\""));
  CHECK_THROWS_WITH_AS(sample_weight(*bad_phi.make_grid(), bad_phi.make_phi()),
                       "phi must be positive", std::invalid_argument);

  // list documents
  const std::string list = std::string("[") + kMinimalDoc + "," +
                           patched(kMinimalDoc, "minimal", "minimal-2") + "]";
  CHECK(parse_scenario_list(list).size() == 2);
}

TEST_CASE("catalog spans the advertised parameter ranges") {
  const std::vector<Scenario>& entries = catalog();
  CHECK(entries.size() >= 6);
  std::set<std::string> psis;
  std::set<double> alphas, betas;
  for (const Scenario& s : entries) {
    psis.insert(s.psi_key);
    alphas.insert(s.alpha);
    betas.insert(s.beta);
    CHECK_NOTHROW(s.make_problem());
  }
  for (const char* key : {"identity", "log", "power"}) CHECK(psis.count(key));
  for (double a : {0.4, 0.7, 1.0}) CHECK(alphas.count(a));
  for (double b : {0.0, 0.5, 1.0}) CHECK(betas.count(b));
  CHECK_THROWS_AS(catalog_scenario("not-a-scenario"), std::invalid_argument);
}

TEST_CASE("shipped scenario files match the embedded catalog") {
  const fs::path dir = fs::path(FRACSTAB_SOURCE_DIR) / "scenarios";
  for (const auto& [stem, doc] : catalog_documents()) {
    const fs::path file = dir / (stem + ".json");
    REQUIRE(fs::exists(file));
    const Scenario from_file = parse_scenario(read_file(file));
    const Scenario embedded = parse_scenario(doc);
    CHECK(from_file.name == embedded.name);
    CHECK(from_file.alpha == embedded.alpha);
    CHECK(from_file.beta == embedded.beta);
    CHECK(from_file.rhs == embedded.rhs);
    CHECK(from_file.seed == embedded.seed);
    CHECK(from_file.steps_per_delay == embedded.steps_per_delay);
  }
}

TEST_CASE("certification reports are byte-identical across runs") {
  Scenario s = catalog_scenario("classical-uh-worked");
  s.steps_per_delay = 64;
  s.experiments = 3;
  const fs::path dir1 = fresh_dir("det1");
  const fs::path dir2 = fresh_dir("det2");
  const CertifyOutcome a = run_certify(s, StabilityKind::UlamHyers, dir1);
  const CertifyOutcome b = run_certify(s, StabilityKind::UlamHyers, dir2);
  CHECK(read_file(a.certificate_file) == read_file(b.certificate_file));
  CHECK(read_file(a.table_file) == read_file(b.table_file));
  CHECK(a.certificate.pass);

  // tables carry the published header and one row per node
  const std::string table = read_file(a.table_file);
  CHECK(table.rfind("t,y0,B,max_abs_deviation\n", 0) == 0);
  CHECK(std::count(table.begin(), table.end(), '\n') ==
        1 + s.make_grid()->node_count());
  CHECK(table.find("\r") == std::string::npos);
}

TEST_CASE("convergence study shows the expected orders") {
  SUBCASE("half-order kernel, curved data: order about 1.5 on the last row") {
    Scenario s = parse_scenario(kMinimalDoc);
    s.alpha = 0.5;
    s.steps_per_delay = 128;
    const fs::path dir = fresh_dir("conv1");
    const fs::path file = run_convergence_study(s, 4, dir);
    const std::string text = read_file(file);
    CHECK(text.rfind("n,error,ratio,order\n", 0) == 0);
    // last row order
    std::istringstream lines(text);
    std::string line, last;
    std::getline(lines, line);  // header
    while (std::getline(lines, line))
      if (!line.empty()) last = line;
    const auto comma = last.rfind(',');
    const double order = std::stod(last.substr(comma + 1));
    CHECK(order >= 1.45);

    // identical runs give identical bytes
    const fs::path dir2 = fresh_dir("conv2");
    CHECK(read_file(run_convergence_study(s, 4, dir2)) == text);
  }

  SUBCASE("alpha = 1 with linear data integrates exactly") {
    Scenario s = parse_scenario(kMinimalDoc);
    s.study_delta = 2.0;  // linear in psi-space
    s.steps_per_delay = 64;
    const fs::path dir = fresh_dir("conv3");
    const std::string text = read_file(run_convergence_study(s, 3, dir));
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(run_convergence_study(parse_scenario(kMinimalDoc), 1, "x"),
                  std::invalid_argument);
}

TEST_CASE("cli exit statuses distinguish input and numerical failures") {
  const fs::path dir = fresh_dir("cli");
  const fs::path good = dir / "good.json";
  std::ofstream(good) << patched(std::string(kMinimalDoc),
                                 "\"epsilon\": 0.1",
                                 "\"epsilon\": 0.1, \"steps_per_delay\": 64, "
                                 "\"experiments\": 3");
  const fs::path bad_range = dir / "bad_range.json";
  std::ofstream(bad_range) << patched(kMinimalDoc, "\"alpha\": 1.0",
                                      "\"alpha\": 7.0");
  const fs::path divergent = dir / "divergent.json";
  std::ofstream(divergent) << patched(
      std::string(kMinimalDoc), "\"rhs\": \"0.2*y + 0.2*yd\", \"L1\": 0.2",
      "\"rhs\": \"y*y\", \"L1\": 2.0");
  // note: the divergent document declares history 1; steepen it
  const fs::path divergent2 = dir / "divergent2.json";
  std::ofstream(divergent2) << patched(read_file(divergent), "\"history\": \"1\"",
                                       "\"history\": \"3\"");

  const std::string out = (dir / "out").string();
  const auto run = [&](std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"fracstab"};
    argv.insert(argv.end(), args.begin(), args.end());
    return run_cli(static_cast<int>(argv.size()), argv.data());
  };

  const std::string good_s = good.string();
  CHECK(run({"certify-uh", "--scenario", good_s.c_str(), "--out",
             out.c_str()}) == 0);
  CHECK(run({"solve", "--scenario", good_s.c_str(), "--out", out.c_str()}) == 0);
  CHECK(run({"converge", "--scenario", good_s.c_str(), "--out", out.c_str(),
             "--refinements", "2"}) == 0);

  const std::string bad_s = bad_range.string();
  CHECK(run({"certify-uh", "--scenario", bad_s.c_str(), "--out",
             out.c_str()}) == 2);
  CHECK(run({"solve", "--scenario", "no-such-file.json"}) == 2);
  CHECK(run({"solve", "--scenario", good_s.c_str(), "--mode", "bogus"}) == 2);

  const std::string div_s = divergent2.string();
  CHECK(run({"solve", "--scenario", div_s.c_str(), "--out", out.c_str()}) == 3);

  // a failed contraction condition is a fail-closed certificate, exit 0
  const fs::path failed_cond = dir / "failed_cond.json";
  std::ofstream(failed_cond) << patched(
      std::string(kMinimalDoc), "\"L1\": 0.2, \"L2\": 0.2",
      "\"L1\": 0.9, \"L2\": 0.9");
  const std::string cond_s = failed_cond.string();
  CHECK(run({"certify-uhr", "--scenario", cond_s.c_str(), "--out",
             out.c_str(), "--experiments", "2"}) == 0);
}
