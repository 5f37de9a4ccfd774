#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "dworkcong/json_io.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(DWORKCONG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("hw prints the quoted matrices") {
  auto r = run_cli("hw --builtin example-1d --m 3 --mu interior");
  CHECK(r.code == 0);
  CHECK(r.out.find("1 + 2*t^2") != std::string::npos);

  auto leg = run_cli("hw --builtin legendre --m 3 --mu interior");
  CHECK(leg.code == 0);
  CHECK(leg.out.find("2 + 2*z") != std::string::npos);

  // missing --m is a usage error
  auto bad = run_cli("hw --builtin example-1d");
  CHECK(bad.code != 0);
}

TEST_CASE("ct-seq") {
  auto r = run_cli("ct-seq --builtin example-1d --K 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("1 0 2 0 6") != std::string::npos);
}

TEST_CASE("verify subcommands and exit codes") {
  CHECK(run_cli("verify mev --builtin example-1d --p 3 --s 1 --T 18").code ==
        0);
  CHECK(run_cli("verify mev --builtin dwork-quartic --p 5 --s 2 --T 60").code ==
        0);
  // perturbed input: exit 1 and a located coefficient
  auto bad =
      run_cli("verify mev --builtin example-1d --p 3 --s 1 --T 18 --perturb 2");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAILS") != std::string::npos);
  // invalid input: exit 2
  auto inv = run_cli("verify any-m --builtin example-1d --p 3 --m 4 --T 12");
  CHECK(inv.code == 2);

  CHECK(
      run_cli("verify main5 --builtin section6 --p 3 --smax 1 --M 9 --mu "
              "interior")
          .code == 0);
}

TEST_CASE("unit-root") {
  auto r = run_cli("unit-root --p 5 --s 2 --z0 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda_trunc=13") != std::string::npos);
  CHECK(r.out.find("agreement: yes") != std::string::npos);

  auto r1 = run_cli("unit-root --p 5 --s 1 --z0 2 --format json");
  CHECK(r1.code == 0);
  auto j = nlohmann::json::parse(r1.out);
  CHECK(j.at("lambda_trunc").get<std::string>() == "3");

  CHECK(run_cli("unit-root --p 5 --s 1 --z0 1").code == 2);
}

TEST_CASE("ahyp subcommands") {
  auto k = run_cli("ahyp kernel --builtin section6 --format json");
  CHECK(k.code == 0);
  auto j = nlohmann::json::parse(k.out);
  CHECK(j.at("rank").get<int>() == 2);
  CHECK(j.at("pointed").get<bool>());

  auto psi = run_cli("ahyp psi --builtin section6 --m 3 --mu interior");
  CHECK(psi.code == 0);

  auto per =
      run_cli("ahyp period --builtin section6 --u 1,1 --k 1 --i 5 --M 4");
  CHECK(per.code == 0);
}

TEST_CASE("json report round-trips") {
  auto r = run_cli(
      "verify mev --builtin example-1d --p 3 --s 1 --T 18 --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("holds").get<bool>());
  // parse -> emit -> parse is a fixed point
  CHECK(nlohmann::json::parse(j.dump(2)) == j);
}

TEST_CASE("polynomial JSON input") {
  // g = x + 1/x in the documented format
  const char* path = "cli_test_poly.json";
  {
    std::ofstream os(path);
    os << R"({"core_vars":["x"],"param_vars":[],
              "terms":[{"exps":[1],"coeff":"1"},{"exps":[-1],"coeff":"1"}]})";
  }
  auto r = run_cli(std::string("ct-seq --input ") + path + " --K 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("1 0 2 0 6") != std::string::npos);
  std::remove(path);
}
