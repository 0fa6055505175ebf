#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string data(const std::string& name) { return std::string(CRJET_TEST_DATA) + "/" + name; }

std::filesystem::path scratch() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("crjet_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const auto out_file = scratch() / "stdout.txt";
  const std::string cmd =
      std::string("\"") + CRJET_CLI + "\" " + args + " > \"" + out_file.string() + "\" 2> /dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

TEST_CASE("validate exit codes", "[cli]") {
  const Run ok = run("validate " + data("codim5.json"));
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out).at("ok") == true);

  const Run bad = run("validate " + data("non_hermitian.json"));
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out).at("non_hermitian") == json::array({"H2"}));

  CHECK(run("validate " + data("malformed.json")).code == 2);
  CHECK(run("validate " + data("bad_shape.json")).code == 2);
  CHECK(run("validate " + data("missing.json")).code == 2);
  CHECK(run("validate " + data("degenerate.json")).code == 1);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("validate text output", "[cli]") {
  const Run r = run("validate --text " + data("non_hermitian.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("H2 NOT hermitian") != std::string::npos);
}

TEST_CASE("prolong", "[cli]") {
  const Run c5 = run("prolong " + data("codim5.json"));
  REQUIRE(c5.code == 0);
  const json j = json::parse(c5.out);
  CHECK(j.at("top_degree") == 6);
  CHECK(j.at("jet_order") == 4);

  const Run h = run("prolong " + data("heisenberg.json"));
  REQUIRE(h.code == 0);
  CHECK(json::parse(h.out).at("dims") == json{{"-2", 1}, {"-1", 2}, {"0", 2}, {"1", 2}, {"2", 1}});

  const Run c4 = run("prolong --text " + data("codim4.json"));
  REQUIRE(c4.code == 0);
  CHECK(c4.out.find("top degree: 4") != std::string::npos);
  CHECK(c4.out.find("jet order: 3") != std::string::npos);

  CHECK(run("prolong " + data("degenerate.json")).code == 1);
  CHECK(run("prolong --catalog codim5 --max-degree 3").code == 1);
}

TEST_CASE("output is deterministic", "[cli]") {
  CHECK(run("prolong --catalog codim4").out == run("prolong --catalog codim4").out);
  CHECK(run("report --catalog codim5").out == run("report --catalog codim5").out);
}

TEST_CASE("realize", "[cli]") {
  const Run r = run("realize --catalog codim5 --degree 6");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("degree") == 6);
  CHECK(j.at("fields").size() == 1);
  CHECK(run("realize --catalog codim5 --degree 7").code == 1);
  CHECK(run("realize --catalog codim5").code == 2);
}

TEST_CASE("verify", "[cli]") {
  CHECK(run("verify " + data("codim5.json") + " --field " + data("codim5_T.json")).code == 0);
  CHECK(run("verify --catalog heisenberg --field " + data("heisenberg_rotation.json")).code == 0);
  CHECK(run("verify --catalog codim4 --field-name F_relabeled").code == 0);
  const Run f = run("verify --catalog codim4 --field-name F");
  CHECK(f.code == 1);
  CHECK(json::parse(f.out).at("verdict") == false);
  CHECK(run("verify --catalog heisenberg --field " + data("codim5_T.json")).code == 1);
  CHECK(run("verify --catalog codim5").code == 1);
}

TEST_CASE("report", "[cli]") {
  const Run c5 = run("report --catalog codim5");
  REQUIRE(c5.code == 0);
  const std::string conclusion = json::parse(c5.out).at("conclusion");
  CHECK(conclusion.find("nontrivial automorphism with vanishing 2-jet; 4-jet determination") == 0);

  const Run su = run("report --catalog su_family --m 2");
  REQUIRE(su.code == 0);
  const json sj = json::parse(su.out);
  CHECK(sj.at("conclusion") == conclusion);
  CHECK(sj.at("notes").size() == 1);

  const Run so = run("report --text --catalog so_family --n 3");
  REQUIRE(so.code == 0);
  CHECK(so.out.find("3-jet determined") != std::string::npos);

  const Run timed = run("report --catalog heisenberg --timing");
  CHECK(json::parse(timed.out).contains("timing_seconds"));
  CHECK_FALSE(json::parse(run("report --catalog heisenberg").out).contains("timing_seconds"));

  const Run bad = run("report " + data("non_hermitian.json"));
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(run("report " + data("malformed.json")).code == 2);
}

TEST_CASE("catalog", "[cli]") {
  const Run list = run("catalog");
  REQUIRE(list.code == 0);
  CHECK(list.out.find("codim5") != std::string::npos);
  const Run one = run("catalog codim4");
  REQUIRE(one.code == 0);
  CHECK(json::parse(one.out).at("k") == 4);
  const auto dir = scratch() / "export";
  REQUIRE(run("catalog codim5 --out " + dir.string()).code == 0);
  CHECK(std::filesystem::exists(dir / "codim5.json"));
  CHECK(std::filesystem::exists(dir / "codim5.T.field.json"));
  CHECK(run("verify " + (dir / "codim5.json").string() + " --field " + (dir / "codim5.T.field.json").string()).code ==
        0);
  CHECK(run("catalog nope").code == 1);
  CHECK(run("catalog so_family --n 2").code == 1);
}
