#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(THETACAT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t level_count(const nlohmann::json& d, const std::vector<int>& object) {
  for (const auto& lv : d["levels"]) {
    if (lv["object"] == nlohmann::json(object)) return lv["cells"].size();
  }
  return 0;
}

}  // namespace

TEST_CASE("build writes canonical dumps") {
  auto u = run("build upsilon --inputs point point --window 3");
  REQUIRE(u.code == 0);
  CHECK(level_count(nlohmann::json::parse(u.out), {1}) == 6);
  CHECK(run("build upsilon --inputs point point --window 3").out == u.out);

  auto s = run("build sigma --k 1 --n 2");
  REQUIRE(s.code == 0);
  CHECK(level_count(nlohmann::json::parse(s.out), {1}) == 2);

  auto n = run("build nerve --category I");
  REQUIRE(n.code == 0);
  CHECK(level_count(nlohmann::json::parse(n.out), {1}) == 3);

  auto p = run("build nerve --params '{\"category\": \"Ibar\", \"n\": 2}' --window 2");
  REQUIRE(p.code == 0);
  auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["n"] == 2);
  CHECK(level_count(pj, {1}) == 4);
}

TEST_CASE("build usage errors") {
  CHECK(run("build nosuch").code == 2);
  CHECK(run("build upsilon").code == 2);
  CHECK(run("build nerve --category Q").code == 2);
  CHECK(run("build nerve --params '{not json'").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("checks") {
  CHECK(run("check segal nerve --category Ibar").code == 0);
  auto x = run("check segal delooping --inputs '2*'");
  CHECK(x.code == 1);
  CHECK(x.out.find("p=2") != std::string::npos);
  CHECK(x.out.find("source 3") != std::string::npos);
  CHECK(x.out.find("target 4") != std::string::npos);
  CHECK(x.out.find("B=3") != std::string::npos);
  CHECK(run("check connected nerve --category I --k 0").code == 1);
  CHECK(run("check connected nerve --category Ibar --k 0").code == 0);
  CHECK(run("check connected ck --params '{\"k\": 2, \"n\": 2}' --k 1 --window 2").code == 0);
  CHECK(run("check connected ck --params '{\"k\": 2, \"n\": 2}' --k 2 --window 2").code == 1);
  CHECK(run("check functorial sigma --k 1 --n 1").code == 0);
  CHECK(run("check cofibration boundary --i 1 --n 1").code == 0);
  CHECK(run("check cofibration nerve").code == 2);
  CHECK(run("check nosuch nerve").code == 2);

  auto j = run("check segal delooping --inputs '2*' --json");
  REQUIRE(j.code == 1);
  auto rep = nlohmann::json::parse(j.out);
  CHECK(rep["strict"] == false);
}

TEST_CASE("checks read dumps") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "thetacat_cli_test_dump.json").string();
  REQUIRE(run("build delooping --inputs '2*' --window 2 --out " + path).code == 0);
  CHECK(run("check segal --in " + path).code == 1);
  CHECK(run("check functorial --in " + path).code == 0);
  {
    std::ofstream f(path);
    f << "{\"n\": 1, \"levels\": ";
  }
  CHECK(run("check segal --in " + path).code == 2);
  CHECK(run("check segal --in /nonexistent/dump.json").code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  auto c = run("verify --window 2 --only casezero");
  CHECK(c.code == 0);
  CHECK(c.out.find("a^a=0 a^b=1 b^a=1 b^b=inf") != std::string::npos);
  CHECK(c.out.find("B=2") != std::string::npos);
  auto j = run("verify --window 2 --only square --only rem1 --json");
  CHECK(j.code == 0);
  auto arr = nlohmann::json::parse(j.out);
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["name"] == "rem1");
  CHECK(arr[1]["verdict"] == "pass");
  CHECK(run("verify --window 2 --only square --pre-erratum").code == 1);
  CHECK(run("verify --window 1").code == 2);
  CHECK(run("verify --only nosuch").code == 2);
}
