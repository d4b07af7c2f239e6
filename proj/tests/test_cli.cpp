#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" COXPRES_CLI_PATH "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

using nlohmann::json;

}  // namespace

TEST_CASE("present json") {
  auto r = run("present --c 3 --d 3 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["variables"].size() == 16);
  CHECK(j["relations"].size() == 15);
  REQUIRE(j["degrees"].size() == 16);
  for (const auto& [name, deg] : j["degrees"].items()) CHECK(deg.size() == 3);
}

TEST_CASE("present degenerate") {
  auto r = run("present --c 2 --d 2 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["variables"].size() == 4);
  CHECK(j["relations"].empty());
  for (const auto& [name, deg] : j["degrees"].items()) CHECK(deg == json::array({1}));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("present --c 1 --d 3").exit_code == 2);
  CHECK(run("present --c 3").exit_code == 2);
  CHECK(run("present --c 3 --d 3 --format yaml").exit_code == 2);
  CHECK(run("verify --c 3 --d 3 --checks nonsense").exit_code == 2);
  CHECK(run("verify --c 3 --d 3 --format cas-export").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("cones --c 2 --d 3").exit_code == 2);
}

TEST_CASE("verify") {
  auto r = run("verify --c 3 --d 3 --format json");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  for (const auto& rec : j["checks"]) CHECK(rec["status"] != "fail");

  auto light = run("verify --c 4 --d 5 --checks grading,gale,pullback,segre,mori,gitfan --format json");
  CHECK(light.exit_code == 0);
  auto lj = json::parse(light.out);
  CHECK(lj["checks"].size() == 6);
  for (const auto& rec : lj["checks"]) CHECK(rec["status"] == "pass");
}

TEST_CASE("budget guard") {
  auto r = run("verify --c 3 --d 3 --checks dimension --budget 1 --format json");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["status"] == "skipped");
  CHECK(j["checks"][0]["budget_exceeded"] == true);

  CHECK(run("verify --c 3 --d 3 --checks dimension --budget 1 --strict").exit_code == 1);
  auto env = run("verify --c 3 --d 3 --checks dimension --format json", "COXPRES_BUDGET=1");
  CHECK(json::parse(env.out)["checks"][0]["status"] == "skipped");
}

TEST_CASE("cones") {
  for (const char* args : {"cones --c 3 --d 4 --format json", "cones --c 3 --d 3 --format json"}) {
    auto r = run(args);
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["effective"]["rays"].size() == 3);
    CHECK(j["movable"]["rays"].size() == 3);
  }
  auto text = run("cones --c 3 --d 3");
  CHECK(text.out.find("semiample") != std::string::npos);
}

TEST_CASE("gitfan") {
  for (const char* args : {"gitfan --c 3 --d 3 --format json", "gitfan --c 3 --d 4 --format json",
                           "gitfan --c 2 --d 2 --format json"}) {
    auto r = run(args);
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["chambers"].size() == 2);
  }
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "coxpres_cli_test.sing";
  auto r = run("present --c 3 --d 3 --format cas-export --out " + path.string());
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path);
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body.find("ideal I") != std::string::npos);
  std::filesystem::remove(path);
}
