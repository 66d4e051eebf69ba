#include "fracstab/scenario.hpp"

#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fracstab {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "name",    "psi",        "sigma",          "alpha",
    "beta",    "t0",         "T",              "delay_a",
    "steps_per_delay",       "rhs",            "L1",
    "L2",      "history",    "phi",            "epsilon",
    "experiments",           "seed",           "initial_term_mode",
    "uh_mode", "study_delta"};

const std::set<std::string> kRequiredKeys = {
    "name", "psi", "alpha", "beta", "t0",      "T",  "delay_a",
    "rhs",  "L1",  "L2",    "history", "phi", "epsilon"};

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

double get_number(const json& j, const std::string& key) {
  if (!j.at(key).is_number()) fail("key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

std::string get_string(const json& j, const std::string& key) {
  if (!j.at(key).is_string()) fail("key '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

Scenario from_json(const json& doc) {
  if (!doc.is_object()) fail("scenario document must be an object");
  for (const auto& item : doc.items())
    if (!kKnownKeys.count(item.key())) fail("unknown key '" + item.key() + "'");
  for (const auto& key : kRequiredKeys)
    if (!doc.contains(key)) fail("missing key '" + key + "'");

  Scenario s;
  s.name = get_string(doc, "name");
  if (s.name.empty()) fail("name must not be empty");
  s.psi_key = get_string(doc, "psi");
  if (s.psi_key != "identity" && s.psi_key != "log" && s.psi_key != "power" &&
      s.psi_key != "exp")
    fail("psi must be one of identity, log, power, exp");
  if (s.psi_key == "power") {
    if (!doc.contains("sigma")) fail("missing key 'sigma' (required for power psi)");
    s.sigma = get_number(doc, "sigma");
    if (!(s.sigma > 0.0)) fail("sigma must be positive");
  }
  s.alpha = get_number(doc, "alpha");
  if (!(s.alpha > 0.0) || s.alpha > 1.0) fail("alpha must lie in (0,1]");
  s.beta = get_number(doc, "beta");
  if (s.beta < 0.0 || s.beta > 1.0) fail("beta must lie in [0,1]");
  s.t0 = get_number(doc, "t0");
  s.T = get_number(doc, "T");
  if (!(s.T > s.t0)) fail("T must exceed t0");
  s.delay_a = get_number(doc, "delay_a");
  if (!(s.delay_a > 0.0)) fail("delay_a must be positive");
  if (doc.contains("steps_per_delay")) {
    s.steps_per_delay = doc.at("steps_per_delay").get<int>();
    if (s.steps_per_delay < 1) fail("steps_per_delay must be at least 1");
  }
  s.rhs = get_string(doc, "rhs");
  Expression::parse(s.rhs);
  s.L1 = get_number(doc, "L1");
  s.L2 = get_number(doc, "L2");
  if (s.L1 < 0.0 || s.L2 < 0.0) fail("L1 and L2 must be nonnegative");
  s.history = get_string(doc, "history");
  if (Expression::parse(s.history).uses_state())
    fail("history must depend on t only");
  s.phi = get_string(doc, "phi");
  if (Expression::parse(s.phi).uses_state()) fail("phi must depend on t only");
  s.epsilon = get_number(doc, "epsilon");
  if (s.epsilon < 0.0 || s.epsilon > 1.0) fail("epsilon must lie in [0,1]");
  if (doc.contains("experiments")) {
    s.experiments = doc.at("experiments").get<int>();
    if (s.experiments < 1) fail("experiments must be at least 1");
  }
  if (doc.contains("seed")) s.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("initial_term_mode"))
    s.initial_term_mode = get_string(doc, "initial_term_mode");
  if (s.initial_term_mode != "paper-literal" &&
      s.initial_term_mode != "weighted-hilfer")
    fail("initial_term_mode must be paper-literal or weighted-hilfer");
  if (doc.contains("uh_mode")) s.uh_mode = get_string(doc, "uh_mode");
  if (s.uh_mode != "paper-literal" && s.uh_mode != "tight")
    fail("uh_mode must be paper-literal or tight");
  if (doc.contains("study_delta")) {
    s.study_delta = get_number(doc, "study_delta");
    if (!(s.study_delta > 0.0)) fail("study_delta must be positive");
  }
  return s;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed scenario document: ") + e.what());
  }
}

}  // namespace

PsiMap Scenario::make_psi() const { return psi_from_key(psi_key, sigma); }

GridPtr Scenario::make_grid() const {
  return fracstab::make_grid(t0, T, delay_a, steps_per_delay);
}

DelayProblem Scenario::make_problem() const {
  const Expression rhs_expr = Expression::parse(rhs);
  const Expression hist_expr = Expression::parse(history);
  Rhs f = [rhs_expr](double t, double y, double yd) {
    return rhs_expr.eval(t, y, yd);
  };
  ScalarFn hist = [hist_expr](double t) { return hist_expr.eval_t(t); };
  return DelayProblem(std::move(f), L1, L2, std::move(hist),
                      FracOrder(alpha, beta), make_psi(), make_grid());
}

WeightFn Scenario::make_phi() const {
  const Expression phi_expr = Expression::parse(phi);
  return [phi_expr](double t) { return phi_expr.eval_t(t); };
}

InitialTermMode Scenario::mode() const {
  return initial_term_mode == "weighted-hilfer" ? InitialTermMode::WeightedHilfer
                                                : InitialTermMode::PaperLiteral;
}

UhMode Scenario::uhmode() const {
  return uh_mode == "tight" ? UhMode::Tight : UhMode::PaperLiteral;
}

namespace {

Scenario from_json_checked(const json& doc) {
  try {
    return from_json(doc);
  } catch (const json::exception& e) {
    fail(std::string("malformed scenario document: ") + e.what());
  }
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  return from_json_checked(parse_document(json_text));
}

std::vector<Scenario> parse_scenario_list(const std::string& json_text) {
  const json doc = parse_document(json_text);
  std::vector<Scenario> out;
  if (doc.is_array()) {
    for (const auto& item : doc) out.push_back(from_json_checked(item));
    if (out.empty()) fail("scenario list is empty");
  } else {
    out.push_back(from_json_checked(doc));
  }
  return out;
}

const std::vector<std::pair<std::string, std::string>>& catalog_documents() {
  static const std::vector<std::pair<std::string, std::string>> docs = {
      {"classical-delay-uhr", R"json({
  "name": "classical-delay-uhr",
  "psi": "identity",
  "alpha": 1.0, "beta": 0.0,
  "t0": 0.0, "T": 1.0, "delay_a": 1.0, "steps_per_delay": 1024,
  "rhs": "0.2*y + 0.2*yd", "L1": 0.2, "L2": 0.2,
  "history": "1", "phi": "1",
  "epsilon": 0.1, "experiments": 100, "seed": 2024
})json"},
      {"classical-uh-worked", R"json({
  "name": "classical-uh-worked",
  "psi": "identity",
  "alpha": 1.0, "beta": 0.0,
  "t0": 0.0, "T": 1.0, "delay_a": 1.0, "steps_per_delay": 1024,
  "rhs": "0.3*y + 0.2*yd", "L1": 0.3, "L2": 0.2,
  "history": "1", "phi": "1",
  "epsilon": 0.1, "experiments": 100, "seed": 2025
})json"},
      {"hadamard-log-uhr", R"json({
  "name": "hadamard-log-uhr",
  "psi": "log",
  "alpha": 0.5, "beta": 0.0,
  "t0": 1.0, "T": 2.718281828459045, "delay_a": 0.5, "steps_per_delay": 300,
  "rhs": "0.05*y + 0.05*yd + 0.1*cos(t)", "L1": 0.05, "L2": 0.05,
  "history": "0", "phi": "1",
  "epsilon": 0.1, "experiments": 100, "seed": 2026
})json"},
      {"power-psi-uhr", R"json({
  "name": "power-psi-uhr",
  "psi": "power", "sigma": 2.0,
  "alpha": 0.7, "beta": 0.5,
  "t0": 1.0, "T": 2.0, "delay_a": 0.5, "steps_per_delay": 512,
  "rhs": "0.1*y + 0.05*yd + 0.2*sin(t)", "L1": 0.1, "L2": 0.05,
  "history": "0", "phi": "1",
  "epsilon": 0.1, "experiments": 100, "seed": 2027
})json"},
      {"caputo-driven-uhr", R"json({
  "name": "caputo-driven-uhr",
  "psi": "identity",
  "alpha": 0.7, "beta": 1.0,
  "t0": 0.0, "T": 1.5, "delay_a": 0.5, "steps_per_delay": 342,
  "rhs": "0.2*y + 0.1*yd + 0.1*sin(t)", "L1": 0.2, "L2": 0.1,
  "history": "1", "phi": "1 + 0.5*tanh(t)",
  "epsilon": 0.1, "experiments": 100, "seed": 2028
})json"},
      {"hilfer-mid-uhr", R"json({
  "name": "hilfer-mid-uhr",
  "psi": "identity",
  "alpha": 0.4, "beta": 0.5,
  "t0": 0.0, "T": 1.0, "delay_a": 1.0, "steps_per_delay": 1024,
  "rhs": "0.15*y + 0.1*yd + 0.2*cos(t)", "L1": 0.15, "L2": 0.1,
  "history": "0", "phi": "1",
  "epsilon": 0.1, "experiments": 100, "seed": 2029
})json"},
      {"nodelay-caputo-uh", R"json({
  "name": "nodelay-caputo-uh",
  "psi": "identity",
  "alpha": 0.7, "beta": 1.0,
  "t0": 0.0, "T": 1.0, "delay_a": 1.0, "steps_per_delay": 1024,
  "rhs": "0.3*y + 0.1*t", "L1": 0.3, "L2": 0.0,
  "history": "0.5", "phi": "1",
  "epsilon": 0.1, "experiments": 100, "seed": 2030
})json"},
  };
  return docs;
}

const std::vector<Scenario>& catalog() {
  static const std::vector<Scenario> entries = [] {
    std::vector<Scenario> out;
    for (const auto& [stem, doc] : catalog_documents())
      out.push_back(parse_scenario(doc));
    return out;
  }();
  return entries;
}

Scenario catalog_scenario(const std::string& name) {
  for (const Scenario& s : catalog())
    if (s.name == name) return s;
  throw std::invalid_argument("no catalog scenario named '" + name + "'");
}

}  // namespace fracstab
