#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

const fs::path kDir = fs::temp_directory_path() / "pdual_cli_test";

fs::path write(const std::string& name, const std::string& text) {
  fs::create_directories(kDir);
  const fs::path p = kDir / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& args, const std::string& out_name = "out.txt") {
  const std::string cmd =
      std::string(PDUAL_CLI) + " " + args + " > " + (kDir / out_name).string() + " 2> " + (kDir / "err.txt").string();
  fs::create_directories(kDir);
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run("verify --suite lattice --max-atoms 4") == 0);
  CHECK(slurp(kDir / "out.txt").find("lattice: passed") != std::string::npos);
  CHECK(run("verify --suite duality --max-points 4 --format json") == 0);
  CHECK(slurp(kDir / "out.txt").find("\"passed\": true") != std::string::npos);
  CHECK(run("verify --suite nosuch") == 2);
  CHECK(run("verify --max-atoms 40") == 2);
  CHECK(run("verify --format yaml") == 2);
  CHECK(run("") == 2);
}

TEST_CASE("dual round trip") {
  const auto space = write("space.json", R"({"kind":"space","points":4,"crevasses":[[[0],[1],[2],[3]]]})");
  REQUIRE(run(space.string(), "ignored.txt") == 2);
  REQUIRE(run("dual " + space.string(), "bpa.json") == 0);
  const std::string bpa = slurp(kDir / "bpa.json");
  CHECK(bpa.find("\"kind\": \"bpa\"") != std::string::npos);
  REQUIRE(run("dual " + (kDir / "bpa.json").string(), "space2.json") == 0);
  CHECK(slurp(kDir / "space2.json").find("\"kind\": \"space\"") != std::string::npos);
  CHECK(run("dual " + (kDir / "space2.json").string(), "bpa2.json") == 0);
  CHECK(slurp(kDir / "bpa2.json") == bpa);
}

TEST_CASE("dual failures") {
  CHECK(run("dual " + write("bad.json", "{\"kind\": \"bpa\",").string()) == 2);
  CHECK(run("dual " + (kDir / "missing.json").string()) == 2);
  const auto invalid = write("invalid.json", R"({"kind":"bpa","algebra":{"atoms":4},"generators":[[[0,1],[2,3]]]})");
  REQUIRE(run("dual " + invalid.string(), "ce.json") == 1);
  const auto ce = kDir / "ce.json";
  CHECK(slurp(ce).find("\"check\": \"dual.partition_algebra\"") != std::string::npos);
  CHECK(run("dual " + ce.string()) == 1);
  CHECK(run("replay " + ce.string()) == 1);
}

TEST_CASE("complete") {
  const auto sep = write("sep.json", R"({"points":3,"crevasses":[[[0],[1],[2]]]})");
  REQUIRE(run("complete " + sep.string()) == 0);
  CHECK(slurp(kDir / "out.txt").find("homeomorphism: yes") != std::string::npos);
  const auto nonsep = write("nonsep.json", R"({"points":4,"crevasses":[[[0,1],[2,3]]]})");
  REQUIRE(run("complete " + nonsep.string()) == 0);
  const std::string r = slurp(kDir / "out.txt");
  CHECK(r.find("dense: yes") != std::string::npos);
  CHECK(r.find("embedding: no") != std::string::npos);
  const auto tree = write("tree.json", R"({"branching":[2],"depth_bound":12,"subspace":"eventually-zero"})");
  REQUIRE(run("complete " + tree.string() + " --depth 8 --format json") == 0);
  const std::string t = slurp(kDir / "out.txt");
  CHECK(t.find("\"dense\": true") != std::string::npos);
  CHECK(t.find("\"embedding\": true") != std::string::npos);
  CHECK(t.find("\"homeomorphism\": false") != std::string::npos);
}

TEST_CASE("enumerate") {
  CHECK(run("enumerate partitions --atoms 4") == 0);
  std::size_t count = 0;
  const std::string out = slurp(kDir / "out.txt");
  for (std::size_t i = out.find("\n  [\n"); i != std::string::npos; i = out.find("\n  [\n", i + 1)) ++count;
  CHECK(count == 15);
  const auto bpa = write("full3.json", R"({"algebra":{"atoms":3},"generators":[[[0],[1],[2]]]})");
  CHECK(run("enumerate spectrum " + bpa.string()) == 0);
  CHECK(run("enumerate spectrum") == 2);
}
