#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "check.hpp"

namespace pdual {

namespace {

using verify::CheckDef;

std::vector<CheckDef> checks_of(std::string_view suite) {
  if (suite == "lattice") return verify::lattice_checks();
  if (suite == "bpa") return verify::bpa_checks();
  if (suite == "hom") return verify::hom_checks();
  if (suite == "duality") return verify::duality_checks();
  if (suite == "tree") return verify::tree_checks();
  throw MisuseError("unknown suite '" + std::string(suite) + "'");
}

void check_bound(const char* name, int value, int cap) {
  if (value < 1 || value > cap) {
    throw MisuseError(std::string(name) + " must lie in 1.." + std::to_string(cap) + ", got " +
                      std::to_string(value));
  }
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::size_t SuiteReport::instances() const {
  return std::accumulate(checks.begin(), checks.end(), std::size_t{0},
                         [](std::size_t n, const CheckResult& c) { return n + c.instances; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lattice", "bpa", "hom", "duality", "tree"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteBounds& bounds) {
  auto checks = checks_of(name);
  check_bound("max_atoms", bounds.max_atoms, kMaxSuiteAtoms);
  check_bound("max_points", bounds.max_points, kMaxSuitePoints);
  check_bound("max_morphism_size", bounds.max_morphism_size, kMaxSuiteMorphismSize);
  check_bound("depth", bounds.depth, kMaxSuiteDepth);
  SuiteReport report;
  report.suite = std::string(name);
  report.bounds = bounds;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : checks) report.checks.push_back(c.run(bounds));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool replay_fails(const Json& counterexample) {
  std::string name;
  try {
    name = counterexample.at("check").get<std::string>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("counterexample: ") + e.what());
  }
  for (const auto& suite : suite_names()) {
    for (const auto& c : checks_of(suite)) {
      if (c.name != name) continue;
      try {
        return c.fails_on(counterexample.at("instance"));
      } catch (const Json::exception& e) {
        throw ParseError(std::string("instance: ") + e.what());
      } catch (const MisuseError&) {
        throw;
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(std::string("instance: ") + e.what());
      }
    }
  }
  throw MisuseError("unknown check '" + name + "'");
}

Json to_record(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"name", c.name}, {"instances", c.instances}, {"failures", c.failures}, {"passed", c.passed()}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    checks.push_back(std::move(j));
  }
  return Json{{"suite", report.suite},
              {"bounds",
               {{"max_atoms", report.bounds.max_atoms},
                {"max_points", report.bounds.max_points},
                {"max_morphism_size", report.bounds.max_morphism_size},
                {"depth", report.bounds.depth}}},
              {"passed", report.passed()},
              {"instances", report.instances()},
              {"seconds", report.seconds},
              {"checks", std::move(checks)}};
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.instances << " instances";
    if (!c.passed()) out << ", " << c.failures << " failures";
    out << ")\n";
    if (c.counterexample) out << "  counterexample: " << c.counterexample->dump() << '\n';
  }
  out << report.suite << ": " << (report.passed() ? "passed" : "FAILED") << ", " << report.checks.size()
      << " checks, " << report.instances() << " instances, " << std::fixed << std::setprecision(2)
      << report.seconds << "s\n";
  return out.str();
}

}  // namespace pdual
