#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(FIBINT_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(p);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

long count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("verify one case as json") {
  const Outcome o = run_cli("verify --filter S5.FOURG --format json");
  CHECK(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["id"] == "S5.FOURG");
  CHECK(j["results"][0]["passed"] == true);
  CHECK(j["meta"]["filter"] == "S5.FOURG");
}

TEST_CASE("usage and configuration errors exit with 2") {
  CHECK(run_cli("verify --filter NOSUCH").code == 2);
  CHECK(run_cli("verify --filter S5.FOURG --tol 1").code == 2);
  CHECK(run_cli("verify --filter S5.FOURG --format xml").code == 2);
  CHECK(run_cli("verify --filter S6.CPWMQ60 --grid r=x").code == 2);
  CHECK(run_cli("verify --filter S6.CPWMQ60 --grid r=40..50").code == 2);
  CHECK(run_cli("show NOSUCH").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);
}

TEST_CASE("list") {
  const Outcome o = run_cli("list --format csv");
  CHECK(o.code == 0);
  CHECK(count_lines(o.out) - 1 >= 60);
  const Outcome f = run_cli("list --filter 'LEWIN.*' --format json");
  CHECK(f.code == 0);
  CHECK(nlohmann::json::parse(f.out).size() == 8);
}

TEST_CASE("show") {
  const Outcome o = run_cli("show S3.K2XKUE3");
  CHECK(o.code == 0);
  CHECK(o.out.find("TAN_HALFPI") != std::string::npos);
  CHECK(o.out.find("note:") != std::string::npos);
}

TEST_CASE("verify with overrides writes a csv file") {
  const std::string path = "cli_test_report.csv";
  const Outcome o = run_cli("verify --filter 'S6.CPWMQ60' --grid r=1..5 --tol 1e-9 --format csv --out " + path);
  CHECK(o.code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(count_lines(ss.str()) == 4);
  CHECK(ss.str().find("S6.CPWMQ60,r=5,") != std::string::npos);
  std::remove(path.c_str());
}
