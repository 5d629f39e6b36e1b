#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

#ifndef CASC_CLI_PATH
#error "CASC_CLI_PATH must point at the built CLI"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_raw(const std::string& cmd_in) {
  std::string cmd = cmd_in + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

RunResult run(const std::string& args) {
  return run_raw(std::string(CASC_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("cascade command") {
  RunResult r = run("cascade --type A --rank 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("m=2") != std::string::npos);
  CHECK(r.out.find("open-orbit: no") != std::string::npos);

  RunResult r1 = run("cascade --type A --rank 1");
  CHECK(r1.out.find("(1)") != std::string::npos);

  RunResult g2 = run("cascade --type G --rank 2 --format json");
  CHECK(g2.exit_code == 0);
  json j = json::parse(g2.out);
  CHECK(j["m"] == 2);
  CHECK(j["ell"] == 2);
  CHECK(j["open_coadjoint_orbit"] == true);
  CHECK(j["cascade"].size() == 2);
  CHECK(j["cascade"][0]["parent"].is_null());
}

TEST_CASE("verify command runs all nine suites and exits 0") {
  RunResult r = run("verify --type B --rank 2 --suite all --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["suites"].size() == 9);
  for (const auto& s : j["suites"]) CHECK(s["pass"] == true);
  CHECK(j["all_pass"] == true);
}

TEST_CASE("verify subsets and sampling flags") {
  RunResult r = run("verify --type A --rank 2 --suite codim --samples 100 --seed 3");
  CHECK(r.exit_code == 0);
  // oracle skipped above the rank budget, reported as skipped not failed
  RunResult r2 = run("verify --type D --rank 5 --suite cascade --format json");
  CHECK(r2.exit_code == 0);
  json j = json::parse(r2.out);
  CHECK(j["suites"][0]["skipped"] == true);
}

TEST_CASE("output is byte-identical across reruns with the same config") {
  std::string args = "verify --type B --rank 3 --suite isotropy --seed 11 --format json";
  CHECK(run(args).out == run(args).out);
  CHECK(run("classify --max-rank 6 --format json").out ==
        run("classify --max-rank 6 --format json").out);
}

TEST_CASE("classify command") {
  RunResult r = run("classify --max-rank 4 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["rows"].size() == 12);  // A1-A4, B2-B4, C3-C4, D4, F4, G2
  int open = 0;
  for (const auto& row : j["rows"]) {
    CHECK(row["minus_one_in_weyl"] == row["open_coadjoint_orbit"]);
    if (row["open_coadjoint_orbit"] == true) ++open;
    CHECK(!(row["family"] == "C" && row["rank"] == 2));
  }
  CHECK(open == 9);  // A1, B2..B4, C3..C4, D4, F4, G2
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("verify --type Z --rank 2").exit_code == 2);
  CHECK(run("cascade --type D --rank 3").exit_code == 2);
  CHECK(run("classify --max-rank 1").exit_code == 2);
  CHECK(run("verify --type A --rank 2 --suite bogus").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("seed precedence: flag over environment over default") {
  RunResult def = run("verify --type A --rank 2 --suite w0 --format json");
  CHECK(json::parse(def.out)["input"]["seed"] == 42);
  RunResult env = run_raw(std::string("env CASC_SEED=9 ") + CASC_CLI_PATH +
                          " verify --type A --rank 2 --suite w0 --format json");
  CHECK(json::parse(env.out)["input"]["seed"] == 9);
  RunResult flag = run_raw(std::string("env CASC_SEED=9 ") + CASC_CLI_PATH +
                           " verify --type A --rank 2 --suite w0 --seed 5 --format json");
  CHECK(json::parse(flag.out)["input"]["seed"] == 5);
}
