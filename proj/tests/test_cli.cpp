#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/cli.hpp"
#include "ringlab/ring_spec.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ringlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "ringlab_cli_test";
  fs::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

const std::string t2z2 = write_file("t2z2.json", R"({"triangular":{"n":2,"base":{"zn":2}}})");
const std::string z3 = write_file("z3.json", R"({"zn":3})");
const std::string z4 = write_file("z4.json", R"({"zn":4})");
const std::string bad = write_file("bad.json", R"({"triangular":{"n":2,"base":{"zn":-1}}})");
const std::string broken = write_file("broken.json", R"({"zn":)");

}  // namespace

TEST_CASE("classify T2(Z2) as JSON") {
  const auto r = run({"classify", "--spec", t2z2, "--json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["classification"]["is_CUSC"] == true);
  CHECK(j["classification"]["is_CUC"] == false);
  CHECK(j["order"] == 8);
}

TEST_CASE("classify Z3 names the witness 2") {
  const auto r = run({"classify", "--spec", z3, "--json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["classification"]["is_CUSC"] == false);
  CHECK(j["classification"]["witnesses"]["is_CUSC"][0] == "2");
}

TEST_CASE("classify with the element summary") {
  const auto r = run({"classify", "--spec", z4, "--json", "--elements"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["elements"].size() == 4);
  CHECK(run({"classify", "--spec", z4, "--elements"}).out.find("decompositions") != std::string::npos);
}

TEST_CASE("spec errors exit 2 with the path") {
  const auto r = run({"classify", "--spec", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("$.triangular.base.zn") != std::string::npos);
  CHECK(run({"classify", "--spec", broken}).code == 2);
  CHECK(run({"classify", "--spec", "/nonexistent/x.json"}).code == 2);
}

TEST_CASE("element decompositions") {
  auto r = run({"element", "--spec", z3, "--label", "2", "--json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["decompositions"].size() == 2);

  r = run({"element", "--spec", z4, "--label", "3", "--json"});
  const auto j = Json::parse(r.out);
  REQUIRE(j["decompositions"].size() == 1);
  CHECK(j["decompositions"][0]["idempotent"] == "0");
  CHECK(j["decompositions"][0]["unit"] == "3");

  r = run({"element", "--spec", t2z2, "--label", "(1 1;0 0)"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("e = (0 1;0 1)   u = (1 0;0 1)   commuting") != std::string::npos);

  CHECK(run({"element", "--spec", z4, "--label", "7"}).code == 2);
}

TEST_CASE("every label printed by build resolves in element") {
  const auto r = run({"build", "--spec", t2z2, "--json"});
  REQUIRE(r.code == 0);
  for (const auto& label : Json::parse(r.out)["elements"])
    CHECK(run({"element", "--spec", t2z2, "--label", label.get<std::string>()}).code == 0);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--theorem", "nope"}).code == 2);
  const auto manifest = write_file("cat.json", R"([{"name":"Z2","spec":{"zn":2}},{"spec":{"zn":3}}])");
  const auto r = run({"verify", "--catalog", manifest, "--theorem", "thm3.4,diagram", "--jobs", "1", "--json"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["theorems"].size() == 2);
  CHECK(j["all_pass"] == true);
  CHECK(j["theorems"][0]["rows"][1]["ring"] == "Z3");
  const auto bad_manifest = write_file("badcat.json", R"([{"name":"Z2"}])");
  CHECK(run({"verify", "--catalog", bad_manifest}).code == 2);
}

TEST_CASE("catalog command over a manifest") {
  const auto manifest = write_file("cat2.json", R"([{"name":"Z4","spec":{"zn":4}},{"name":"F4","spec":{"gf":{"p":2,"k":2}}}])");
  const auto r = run({"catalog", "--catalog", manifest, "--json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["rings"].size() == 2);
  CHECK(j["rings"][1]["classification"]["is_UUSC"] == false);
  CHECK(run({"catalog", "--catalog", manifest}).out.rfind("ring", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "--spec", z4, "--threshold", "0"}).code == 2);
  CHECK(run({"classify", "--spec", z4, "--usc-reading", "sometimes"}).code == 2);
  CHECK(run({"classify", "--spec", z4, "--usc-reading", "at-most-one"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("threshold from the environment") {
  setenv("RINGLAB_THRESHOLD", "4", 1);
  const auto r = run({"build", "--spec", t2z2, "--json"});
  unsetenv("RINGLAB_THRESHOLD");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["materialized"] == false);
  CHECK(Json::parse(run({"build", "--spec", t2z2, "--json"}).out)["materialized"] == true);
  const auto flag = run({"build", "--spec", t2z2, "--json", "--threshold", "4"});
  CHECK(Json::parse(flag.out)["materialized"] == false);
}
