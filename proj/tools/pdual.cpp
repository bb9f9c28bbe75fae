// pdual: run the law suites, compute duals and completions.
//
// Exit codes: 0 success, 1 mathematical failure or diagnostic, 2 usage or
// parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pdual/duality.hpp"
#include "pdual/errors.hpp"
#include "pdual/records.hpp"
#include "pdual/tree_models.hpp"
#include "pdual/verify.hpp"

namespace {

using pdual::Json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Name of the check behind a failed dual request.
constexpr const char* kDualCheck = "dual.partition_algebra";

struct Options {
  std::string suite = "all";
  pdual::SuiteBounds bounds;
  std::string format = "text";
  std::string input;
  int depth = 8;
  int atoms = 3;
  std::string what = "partitions";
};

Json read_record(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw pdual::ParseError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return pdual::parse_record(text);
}

bool is_counterexample(const Json& j) { return j.is_object() && j.contains("check"); }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = pdual::suite_names();
  } else {
    suites.push_back(o.suite);
  }
  bool passed = true;
  Json reports = Json::array();
  for (const auto& s : suites) {
    const auto report = pdual::run_suite(s, o.bounds);
    passed = passed && report.passed();
    if (o.format == "json") {
      reports.push_back(pdual::to_record(report));
    } else {
      std::cout << pdual::to_text(report) << std::flush;
    }
  }
  if (o.format == "json") emit(suites.size() == 1 ? reports[0] : Json{{"passed", passed}, {"suites", reports}});
  return passed ? kOk : kFailure;
}

// A BPA without the partition-algebra condition has no spectrum; the record
// names the missing complement pair and can be fed back to dual or replay.
Json dual_counterexample(const pdual::Bpa& bpa, const pdual::ValidityReport& r) {
  Json j{{"kind", "counterexample"}, {"check", kDualCheck}, {"instance", pdual::to_record(bpa)}};
  if (r.witness) {
    j["witness"] = pdual::to_record(*r.witness);
    j["error"] = "the partition {b, b'} for the witness b is not in the filter; the spectrum is undefined";
  } else {
    j["error"] = "the partition-algebra conditions fail";
  }
  j["conditions"] = {{"complement_pairs", r.complement_pairs},
                     {"covers_elements", r.covers_elements},
                     {"all_finite_partitions", r.all_finite_partitions}};
  return j;
}

int dual_of_bpa(const pdual::Bpa& bpa) {
  const auto r = pdual::validate_bpa(bpa);
  if (!r.all()) {
    emit(dual_counterexample(bpa, r));
    std::cerr << "dual: not a partition algebra\n";
    return kFailure;
  }
  emit(pdual::to_record(pdual::spectrum_space(bpa)));
  return kOk;
}

int cmd_dual(const Options& o) {
  Json j = read_record(o.input);
  if (is_counterexample(j)) {
    if (j.at("check") != kDualCheck) throw pdual::ParseError("dual accepts only its own counterexamples");
    j = j.at("instance");
  }
  switch (pdual::record_kind(j)) {
    case pdual::RecordKind::Bpa:
      return dual_of_bpa(pdual::bpa_from_record(j));
    case pdual::RecordKind::Space:
      emit(pdual::to_record(pdual::algebra_of_space(pdual::space_from_record(j)).bpa));
      return kOk;
    default:
      throw pdual::ParseError("dual expects a bpa or space record");
  }
}

Json report_record(bool uc, bool dense, bool embedding, bool homeomorphism) {
  return Json{{"uniformly_continuous", uc},
              {"dense", dense},
              {"embedding", embedding},
              {"homeomorphism", homeomorphism}};
}

void print_report(const Json& report) {
  for (const auto& [k, v] : report.items()) std::cout << k << ": " << (v.get<bool>() ? "yes" : "no") << '\n';
}

int complete_space(const pdual::PartitionSpace& x, const Options& o) {
  const auto c = pdual::completion(x);
  const Json report = report_record(c.report.uniformly_continuous, c.report.dense, c.report.embedding,
                                    c.report.homeomorphism);
  if (o.format == "text") {
    std::cout << "points: " << x.points() << " -> " << c.space.points() << '\n';
    std::cout << "C:";
    for (int v : c.c.table()) std::cout << ' ' << v;
    std::cout << '\n';
    print_report(report);
    return kOk;
  }
  emit(Json{{"kind", "completion"},
            {"space", pdual::to_record(x)},
            {"completion", pdual::to_record(c.space)},
            {"c", pdual::to_record(c.c)},
            {"report", report}});
  return kOk;
}

Json probe_record(const pdual::ProbeReport& p) {
  Json divergences = Json::array();
  for (const auto& d : p.divergences) {
    divergences.push_back({{"representative", pdual::to_string(d.representative)}, {"depth", d.depth}});
  }
  return Json{{"target", pdual::to_string(p.target)},
              {"depth", p.depth},
              {"bounded_evidence", p.bounded_evidence},
              {"note", p.note},
              {"divergences", std::move(divergences)}};
}

int complete_tree(const pdual::TreeModel& model, const Options& o) {
  const auto r = pdual::tree_completion(model, o.depth);
  const Json report = report_record(r.uniformly_continuous, r.dense, r.embedding, r.homeomorphism);
  if (o.format == "text") {
    for (const auto& l : r.levels) {
      std::cout << "level " << l.depth << ": " << l.points << " points onto " << l.level_nodes << " nodes, "
                << (l.bijective() ? "bijective" : "not bijective") << '\n';
    }
    print_report(report);
    if (r.completeness.unrealized) {
      std::cout << "unrealized point: " << pdual::to_string(*r.completeness.unrealized) << '\n';
    }
    if (!r.completeness.note.empty()) std::cout << "note: " << r.completeness.note << '\n';
    return kOk;
  }
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"depth", l.depth},
                      {"points", l.points},
                      {"level_nodes", l.level_nodes},
                      {"injective", l.injective},
                      {"covers_level", l.covers_level}});
  }
  Json completeness{{"complete", r.completeness.complete}, {"note", r.completeness.note}};
  if (r.completeness.unrealized) completeness["unrealized"] = pdual::to_record(*r.completeness.unrealized);
  if (r.completeness.probe) completeness["probe"] = probe_record(*r.completeness.probe);
  emit(Json{{"kind", "tree-completion"},
            {"tree", pdual::to_record(model)},
            {"depth", o.depth},
            {"c", "a branch goes to the ultrafilter of the nodes on its path"},
            {"levels", std::move(levels)},
            {"report", report},
            {"completeness", std::move(completeness)}});
  return kOk;
}

int cmd_complete(const Options& o) {
  const Json j = read_record(o.input);
  switch (pdual::record_kind(j)) {
    case pdual::RecordKind::Space:
      return complete_space(pdual::space_from_record(j), o);
    case pdual::RecordKind::Tree:
      return complete_tree(pdual::tree_from_record(j), o);
    default:
      throw pdual::ParseError("complete expects a space or tree record");
  }
}

int cmd_replay(const Options& o) {
  const Json j = read_record(o.input);
  if (!is_counterexample(j)) throw pdual::ParseError("replay expects a counterexample record");
  bool fails = false;
  if (j.at("check") == kDualCheck) {
    fails = !pdual::validate_bpa(pdual::bpa_from_record(j.at("instance"))).all();
  } else {
    fails = pdual::replay_fails(j);
  }
  std::cout << (fails ? "reproduced: " : "not reproduced: ") << j.at("check").get<std::string>() << '\n';
  return fails ? kFailure : kOk;
}

int cmd_enumerate(const Options& o) {
  if (o.what == "partitions") {
    Json out = Json::array();
    for (const auto& p : pdual::enumerate_partitions(pdual::Algebra(o.atoms))) out.push_back(pdual::to_record(p));
    emit(out);
    return kOk;
  }
  const Json j = read_record(o.input);
  const pdual::Bpa bpa = pdual::record_kind(j) == pdual::RecordKind::Space
                             ? pdual::Bpa(pdual::space_from_record(j).crevasses())
                             : pdual::bpa_from_record(j);
  const auto r = pdual::validate_bpa(bpa);
  if (!r.all()) {
    emit(dual_counterexample(bpa, r));
    return kFailure;
  }
  Json out = Json::array();
  for (const auto& u : pdual::enumerate_f_ultrafilters(bpa)) out.push_back(pdual::to_record(u.least()));
  emit(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition algebras and partition spaces"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Run law suites");
  verify->add_option("--suite", o.suite, "lattice, bpa, hom, duality, tree or all");
  verify->add_option("--max-atoms", o.bounds.max_atoms, "Largest algebra");
  verify->add_option("--max-points", o.bounds.max_points, "Largest space");
  verify->add_option("--max-morphism-size", o.bounds.max_morphism_size, "Largest object in morphism checks");
  verify->add_option("--depth", o.bounds.depth, "Tree probe depth");

  auto* dual = app.add_subcommand("dual", "Dual of a bpa or space record");
  dual->add_option("input", o.input, "Record file, or - for stdin")->required();

  auto* complete = app.add_subcommand("complete", "Completion of a space or tree record");
  complete->add_option("input", o.input, "Record file, or - for stdin")->required();
  complete->add_option("--depth", o.depth, "Depth for tree records");

  auto* replay = app.add_subcommand("replay", "Re-run the check behind a counterexample record");
  replay->add_option("input", o.input, "Counterexample file, or - for stdin")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List partitions or a spectrum");
  enumerate->add_option("what", o.what, "partitions or spectrum")
      ->check(CLI::IsMember({"partitions", "spectrum"}));
  enumerate->add_option("input", o.input, "bpa or space record (spectrum)");
  enumerate->add_option("--atoms", o.atoms, "Atom count (partitions)")->check(CLI::Range(1, 8));

  for (auto* sub : {verify, complete}) {
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*dual) return cmd_dual(o);
    if (*complete) return cmd_complete(o);
    if (*replay) return cmd_replay(o);
    if (o.what == "spectrum" && o.input.empty()) throw pdual::MisuseError("spectrum needs an input record");
    return cmd_enumerate(o);
  } catch (const pdual::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const pdual::MisuseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const pdual::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
