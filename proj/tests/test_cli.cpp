#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

int g_counter = 0;

RunResult run(const std::string& args) {
  const char* cli = std::getenv("POLYLAW_CLI");
  REQUIRE(cli != nullptr);
  std::string path = "/tmp/polylaw_cli_" + std::to_string(::getpid()) + "_" +
                     std::to_string(g_counter++) + ".out";
  std::string cmd = std::string(cli) + " " + args + " >" + path + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(path.c_str());
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, ss.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const char* kMinimalTable = R"({
  "objects": ["*"],
  "bound": 1,
  "homs": [{"id": 0, "dom": ["*"], "cod": ["*"]}],
  "identities": {"*": 0},
  "exchange": {"dom": [], "cod": []},
  "composition": [[0, 0, 1, 1, 0]]
})";

}  // namespace

TEST_CASE("span analysis") {
  auto r = run("span --left 1,2@3 --right 1,1@2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "components 3"));
  CHECK(contains(r.out, "acyclic yes"));
  CHECK(contains(r.out, "connected no"));

  auto tree = run("span --left 1,1@1 --right 1,2@2");
  CHECK(tree.exit_code == 0);
  CHECK(contains(tree.out, "suitable yes"));
}

TEST_CASE("enumerations in canonical order with counts") {
  auto s2 = run("enumerate s2 --n 2 --m 2");
  CHECK(s2.exit_code == 0);
  CHECK(contains(s2.out, "count 3"));

  auto d = run("enumerate delta1 --phi 1,1@1 --psi 1,2@2");
  CHECK(d.exit_code == 0);
  CHECK(contains(d.out, "1,2@2"));
  CHECK(contains(d.out, "2,1@2"));
  CHECK(contains(d.out, "count 2"));

  // Mismatched top cardinals: empty listing, not an error.
  auto e = run("enumerate delta1 --phi 1,1@1 --psi 1@1");
  CHECK(e.exit_code == 0);
  CHECK(contains(e.out, "count 0"));
}

TEST_CASE("malformed encodings exit 2") {
  CHECK(run("span --left bogus --right 1@1").exit_code == 2);
  CHECK(run("enumerate delta1 --phi 9@1 --psi 1@1").exit_code == 2);
  CHECK(run("verify --suite nosuchsuite").exit_code == 2);
}

TEST_CASE("verify output is byte-identical across runs") {
  auto a = run("verify --suite spans --bound 3 --format json");
  auto b = run("verify --suite spans --bound 3 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto c = run("verify --suite monad --bound 2 --seed 7 --format json");
  auto d = run("verify --suite monad --bound 2 --seed 7 --format json");
  CHECK(c.exit_code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("json reports carry anchor tags") {
  auto r = run("verify --suite pda --bound 1 --format json");
  CHECK(r.exit_code == 0);
  for (int i = 1; i <= 10; ++i)
    CHECK(contains(r.out, "PDA" + std::to_string(i)));
}

TEST_CASE("minimal table parses and passes the table suites") {
  auto path = write_file("cli_min_table.json", kMinimalTable);
  auto r = run("verify --suite polyaxioms --table " + path);
  CHECK(r.exit_code == 0);
  auto rt = run("verify --suite roundtrip --table " + path);
  CHECK(rt.exit_code == 0);
}

TEST_CASE("parse, serialize, parse is identity on the corpus") {
  auto path = write_file("cli_rt_table.json", kMinimalTable);
  auto once = run("compose --table " + path + " --print");
  REQUIRE(once.exit_code == 0);
  auto norm = write_file("cli_rt_norm.json", once.out);
  auto twice = run("compose --table " + norm + " --print");
  CHECK(twice.exit_code == 0);
  CHECK(once.out == twice.out);
}

TEST_CASE("compose reports the composite with provenance") {
  auto path = write_file("cli_comp_table.json", kMinimalTable);
  auto r = run("compose --table " + path + " --fs 0 --gs 0 --pairs 0.1:0.1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "ref 0"));
  CHECK(contains(r.out, "f0.1"));
  CHECK(contains(r.out, "g0.1"));

  // An unpaired output makes the matching non-suitable.
  auto bad = run("compose --table " + path + " --fs 0 --gs 0 --pairs \"\"");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "not suitable"));
}

TEST_CASE("table errors are diagnosed") {
  auto dangling = write_file("cli_dangling.json", R"({
    "objects": ["*"], "bound": 1,
    "homs": [{"id": 0, "dom": ["*"], "cod": ["*"]}],
    "identities": {"*": 5},
    "exchange": {"dom": [], "cod": []}, "composition": []})");
  auto r1 = run("verify --suite polyaxioms --table " + dangling);
  CHECK(r1.exit_code == 2);
  CHECK(contains(r1.out, "id 5"));

  auto mismatch = write_file("cli_mismatch.json", R"({
    "objects": ["a", "b"], "bound": 1,
    "homs": [{"id": 0, "dom": ["a"], "cod": ["a"]},
             {"id": 1, "dom": ["b"], "cod": ["b"]}],
    "identities": {"a": 0, "b": 1},
    "exchange": {"dom": [], "cod": []},
    "composition": [[1, 0, 1, 1, 0]]})");
  auto r2 = run("verify --suite polyaxioms --table " + mismatch);
  CHECK(r2.exit_code == 2);
  CHECK(contains(r2.out, "cut objects differ"));

  auto syntax = write_file("cli_syntax.json", "{not json");
  auto r3 = run("compose --table " + syntax + " --print");
  CHECK(r3.exit_code == 2);
  CHECK(contains(r3.out, "line 1"));
}

TEST_CASE("suite violations exit 1 with a witness") {
  // Parses cleanly but breaks the unit law: composing the identity with
  // itself claims to give the other element.
  auto mutated = write_file("cli_mutated.json", R"({
    "objects": ["*"], "bound": 1,
    "homs": [{"id": 0, "dom": ["*"], "cod": ["*"]},
             {"id": 1, "dom": ["*"], "cod": ["*"]}],
    "identities": {"*": 0},
    "exchange": {"dom": [], "cod": []},
    "composition": [[0, 0, 1, 1, 1]]})");
  auto r = run("verify --suite polyaxioms --table " + mutated);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "FAIL"));
  CHECK(contains(r.out, "witness"));
}
