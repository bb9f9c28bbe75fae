// Runs the six acceptance criteria and prints one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "pdual/verify.hpp"

namespace {

namespace fs = std::filesystem;

constexpr double kSuiteSeconds = 30.0;

struct Outcome {
  bool passed = false;
  std::string detail;
};

const pdual::CheckResult* find(const pdual::SuiteReport& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                               [&](const pdual::CheckResult& c) { return c.name == name; });
  return it == r.checks.end() ? nullptr : &*it;
}

Outcome suite_outcome(const pdual::SuiteReport& r, bool extra, const std::string& note) {
  std::size_t failures = 0;
  for (const auto& c : r.checks) failures += c.failures;
  std::ostringstream d;
  d << r.checks.size() << " checks, " << r.instances() << " instances, " << failures << " failures, "
    << r.seconds << "s";
  if (!note.empty()) d << "; " << note;
  return {r.passed() && extra && r.seconds < kSuiteSeconds, d.str()};
}

Outcome lattice() {
  pdual::SuiteBounds b;
  b.max_atoms = 4;
  const auto r = pdual::run_suite("lattice", b);
  const auto* glb = find(r, "lattice.meet_is_glb");
  // 105 unordered pairs at four atoms, 10 at three, 1 at two.
  const bool counts = glb && glb->instances == 116;
  return suite_outcome(r, counts, "meet pairs " + std::to_string(glb ? glb->instances : 0));
}

Outcome bpa() {
  pdual::SuiteBounds b;
  b.max_atoms = 4;
  const auto r = pdual::run_suite("bpa", b);
  // 15 principal filters on P(4) plus 1 + 2 + 5 on the smaller algebras.
  const bool counts = std::all_of(r.checks.begin(), r.checks.end(),
                                  [](const pdual::CheckResult& c) { return c.instances == 23; });
  return suite_outcome(r, counts, "");
}

Outcome hom() {
  pdual::SuiteBounds b;
  b.max_morphism_size = 3;
  const auto r = pdual::run_suite("hom", b);
  const auto* t = find(r, "hom.triples_iff_axioms");
  const auto* e = find(r, "hom.extended_iff_partitional");
  // Every table between full algebras on at most 3 atoms with at most 4^8 tables.
  const bool counts = t && e && t->instances >= 65536 && e->instances == t->instances;
  return suite_outcome(r, counts, "tables " + std::to_string(t ? t->instances : 0));
}

Outcome duality() {
  pdual::SuiteBounds b;
  b.max_points = 4;
  b.max_atoms = 4;
  b.max_morphism_size = 3;
  return suite_outcome(pdual::run_suite("duality", b), true, "");
}

Outcome tree() {
  pdual::SuiteBounds b;
  b.depth = 8;
  return suite_outcome(pdual::run_suite("tree", b), true, "");
}

int run(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(PDUAL_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli() {
  const fs::path dir = fs::temp_directory_path() / "pdual_acceptance";
  fs::create_directories(dir);
  const fs::path corrupted = dir / "corrupted.json";
  const fs::path invalid = dir / "invalid.json";
  const fs::path ce = dir / "counterexample.json";
  // Overlapping blocks: not a partition.
  std::ofstream(corrupted) << R"({"kind":"bpa","algebra":{"atoms":3},"generators":[[[0,1],[1,2]]]})";
  // Well formed, but {b, b'} is missing for b = {0}.
  std::ofstream(invalid) << R"({"kind":"bpa","algebra":{"atoms":4},"generators":[[[0,1],[2,3]]]})";
  const int verify = run("verify --suite all --max-atoms 4 --max-points 4 --depth 8", dir / "verify.txt");
  const int parse = run("dual " + corrupted.string(), dir / "parse.txt");
  const int dual = run("dual " + invalid.string(), ce);
  const int again = run("dual " + ce.string(), dir / "again.json");
  const int replay = run("replay " + ce.string(), dir / "replay.txt");
  std::ostringstream d;
  d << "verify=" << verify << " corrupted=" << parse << " invalid=" << dual << " dual-replay=" << again
    << " replay=" << replay;
  return {verify == 0 && parse == 2 && dual == 1 && again == 1 && replay == 1, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"lattice suite", lattice}, {"bpa suite", bpa},   {"hom suite", hom},
      {"duality suite", duality}, {"tree suite", tree}, {"cli contract", cli},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::cout << "criterion " << index++ << " " << (o.passed ? "PASS" : "FAIL") << " " << name << " (" << o.detail
              << ")" << std::endl;
    failed += !o.passed;
  }
  return failed == 0 ? 0 : 1;
}
