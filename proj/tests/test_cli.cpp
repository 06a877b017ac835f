#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "rhp/cli.hpp"
#include "rhp/enumeration.hpp"
#include "rhp/tuple_io.hpp"
#include "support.hpp"

using namespace rhp;
using rhp::testing::fixture;
using rhp::testing::slurp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rhp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("rhp_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("verify-dm on the 4x4 example") {
  const auto r = run({"verify-dm", "--matrix", fixture("example1_matrix.json"), "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lhs = -1696") != std::string::npos);
  CHECK(r.out.find("rhs = -1696") != std::string::npos);
  CHECK(r.out.find("sigma 123  +96") != std::string::npos);
  CHECK(r.out.find("sigma 213  -1792") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 5) == "PASS\n");
}

TEST_CASE("verify-dm on a 1x1 matrix") {
  const auto dir = scratch_dir("one");
  write(dir / "m.json", R"({"dim":1,"entries":[[5]]})");
  const auto r = run({"verify-dm", "--matrix", (dir / "m.json").string(), "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lhs = 5\n  rhs = 5\n") != std::string::npos);
}

TEST_CASE("verify-dm accepts big entries as strings and checks every k") {
  const auto dir = scratch_dir("big");
  write(dir / "m.json", R"({"dim":2,"entries":[["100000000000000000000",1],[2,"-3"]]})");
  const auto r = run({"verify-dm", "--matrix", (dir / "m.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("k = 2") != std::string::npos);
  CHECK(r.out.find("-300000000000000000002") != std::string::npos);
}

TEST_CASE("verify-dm random trials") {
  const auto r = run({"verify-dm", "--mode", "random-trials", "--n", "6", "--trials", "3", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 random 6x6 matrices, seed 42: PASS\n");
  const auto a = random_matrix(4, 9), b = random_matrix(4, 9), c = random_matrix(4, 10);
  bool same = true, differs = false;
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      same = same && a.entries(i, j) == b.entries(i, j);
      differs = differs || a.entries(i, j) != c.entries(i, j);
    }
  }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("verify-dm input errors exit 2") {
  const auto dir = scratch_dir("bad");
  write(dir / "bad.json", R"({"dim":2,"entries":[[1,2]]})");
  CHECK(run({"verify-dm", "--matrix", (dir / "bad.json").string()}).code == 2);
  write(dir / "junk.json", "not json");
  CHECK(run({"verify-dm", "--matrix", (dir / "junk.json").string()}).code == 2);
  CHECK(run({"verify-dm", "--matrix", (dir / "missing.json").string()}).code == 2);
  CHECK(run({"verify-dm", "--matrix", fixture("example1_matrix.json"), "--k", "5"}).code == 2);
  CHECK(run({"verify-dm", "--mode", "sideways"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate counts") {
  CHECK(run({"enumerate", "--n", "3", "--k", "3", "--set", "S3", "--count-only"}).out ==
        "{\"n\":3,\"k\":3,\"set\":\"S3\",\"count\":16}\n");
  CHECK(run({"enumerate", "--n", "3", "--k", "3", "--set", "S0", "--count-only"}).out ==
        "{\"n\":3,\"k\":3,\"set\":\"S0\",\"count\":16}\n");
  CHECK(run({"enumerate", "--n", "3", "--k", "3", "--set", "forbidden", "--count-only"}).out ==
        "{\"n\":3,\"k\":3,\"set\":\"forbidden\",\"count\":11,\"forest_tuples\":27,"
        "\"per_sigma\":{\"132\":3,\"213\":3,\"231\":1,\"312\":1,\"321\":3}}\n");
}

TEST_CASE("enumerate streams one tuple per line, deterministically") {
  const auto a = run({"enumerate", "--n", "3", "--k", "2", "--set", "S3"});
  const auto b = run({"enumerate", "--n", "3", "--k", "2", "--set", "S3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    CHECK(is_in(parse_tuple(line), SetName::S3));
    ++lines;
  }
  CHECK(lines == enumerate_set(3, 2, SetName::S3).size());
  CHECK(run({"enumerate", "--n", "3", "--k", "3", "--set", "forbidden"}).out.size() > 0);
}

TEST_CASE("enumerate refuses oversized instances") {
  const auto r = run({"enumerate", "--n", "9", "--k", "4", "--set", "S1", "--count-only"});
  CHECK(r.code == 2);
  CHECK(r.err.find("InstanceTooLarge") != std::string::npos);
  CHECK(run({"enumerate", "--n", "3", "--k", "3", "--set", "S9"}).code == 2);
}

TEST_CASE("bijection writes the result, snapshots and manifest") {
  const auto dir = scratch_dir("trace");
  const auto r = run({"bijection", "--in", fixture("walkthrough_initial.json"), "--direction", "forward",
                      "--trace", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(fixture("walkthrough_final.json")));
  CHECK(slurp((dir / "result.json").string()) == slurp(fixture("walkthrough_final.json")));
  CHECK(slurp((dir / "trace.json").string()) == slurp(fixture("walkthrough_trace.json")));
  const auto manifest = nlohmann::json::parse(slurp((dir / "trace.json").string()));
  const auto steps = manifest["steps"].size();
  CHECK(std::filesystem::exists(dir / "step_000.dot"));
  CHECK(std::filesystem::exists(dir / ("step_0" + std::to_string(steps) + ".dot")));
  CHECK_FALSE(std::filesystem::exists(dir / ("step_0" + std::to_string(steps + 1) + ".dot")));
}

TEST_CASE("bijection errors") {
  CHECK(run({"bijection", "--in", fixture("walkthrough_final.json")}).code == 2);
  CHECK(run({"bijection", "--in", fixture("walkthrough_initial.json"), "--trace"}).code == 2);
  CHECK(run({"bijection", "--in", fixture("nope.json")}).code == 2);
}

TEST_CASE("RHP_STEP_BOUND") {
  setenv("RHP_STEP_BOUND", "1", 1);
  CHECK(default_run_config().step_bound == 1);
  const auto r = run({"bijection", "--in", fixture("walkthrough_initial.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("NonTermination") != std::string::npos);
  setenv("RHP_STEP_BOUND", "lots", 1);
  CHECK(run({"bijection", "--in", fixture("walkthrough_initial.json")}).code == 2);
  unsetenv("RHP_STEP_BOUND");
  CHECK(default_run_config().step_bound == kDefaultStepBound);
}

TEST_CASE("forward then backward through the CLI is byte-identical on S0, n = k = 3") {
  const auto dir = scratch_dir("roundtrip");
  std::size_t count = 0;
  for (const auto& t : enumerate_set(3, 3, SetName::S0)) {
    const std::string text = dump_tuple(t) + "\n";
    write(dir / "in.json", text);
    const auto fwd = run({"bijection", "--in", (dir / "in.json").string()});
    REQUIRE(fwd.code == 0);
    write(dir / "mid.json", fwd.out);
    const auto back = run({"bijection", "--in", (dir / "mid.json").string(), "--direction", "backward"});
    REQUIRE(back.code == 0);
    CHECK(back.out == text);
    ++count;
  }
  CHECK(count == 16);
}

TEST_CASE("k = 1 bijection returns its input") {
  const auto dir = scratch_dir("k1");
  const std::string text = R"({"n":2,"k":1,"graphs":[{"edges":[[1,0,"black"],[2,1,"black"]]}]})" "\n";
  write(dir / "t.json", text);
  CHECK(run({"bijection", "--in", (dir / "t.json").string()}).out == text);
}

TEST_CASE("verify-all") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {3, 3}, {4, 2}}) {
    const auto r = run({"verify-all", "--n", std::to_string(n), "--k", std::to_string(k)});
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("phi1") != std::string::npos);
  }
  CHECK(run({"verify-all", "--n", "2", "--k", "3"}).code == 2);
}
