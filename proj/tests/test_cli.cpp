#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "vzhu/cli.hpp"
#include "vzhu/report.hpp"

using namespace vzhu;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("va mode") {
  Run r = run({"va", "mode", "--algebra", "heisenberg", "--u", "a(-1)|0>", "--m", "1", "--v", "a(-1)|0>"});
  CHECK(r.code == 0);
  CHECK(r.out == "\"|0>\"\n");
  r = run({"va", "mode", "--algebra", "virasoro", "--c", "1/2", "--u", "L(-2)|0>", "--m", "3", "--v", "L(-2)|0>"});
  CHECK(r.out == "\"1/4*|0>\"\n");
  r = run({"va", "mode", "--algebra", "free_fermion", "--u", "psi(-1)|0>", "--m", "0", "--v", "psi(-1)|0>"});
  CHECK(r.out == "\"|0>\"\n");
}

TEST_CASE("series expand matches the Bernoulli oracle") {
  Run r = run({"series", "expand", "--kernel", "f0", "--order", "6"});
  REQUIRE(r.code == 0);
  Json j = json_of(r);
  CHECK(j["valuation"] == -1);
  CHECK(j["order"] == 6);
  auto b = oracle::bernoulli(8);
  b[1] = -b[1];
  REQUIRE(j["coeffs"].size() == 8);
  for (int k = 0; k < 8; ++k) CHECK(j["coeffs"][k] == to_string(b[k] / factorial(k)));

  r = run({"series", "compose", "--kernel", "f0", "--inner", "log1p", "--order", "4"});
  j = json_of(r);
  CHECK(j["valuation"] == -1);
  CHECK(j["coeffs"][0] == "1");
  CHECK(j["coeffs"][1] == "1");
  CHECK(j["coeffs"][2] == "0");

  r = run({"series", "derive", "--kernel", "{\"valuation\": -1, \"coeffs\": [\"1\", \"0\", \"3/2\"]}", "--euler"});
  j = json_of(r);
  CHECK(j["order"] == "exact");
  CHECK(j["coeffs"] == Json::parse(R"(["-1", "0", "3/2"])"));
}

TEST_CASE("reports and exit codes") {
  Run r = run({"zhu", "compare", "--algebra", "heisenberg", "--n", "1", "--dmax", "6"});
  CHECK(r.code == 0);
  Json j = json_of(r);
  CHECK(j["command"] == "zhu compare --algebra heisenberg --n 1 --dmax 6");
  CHECK(j["status"] == "pass");
  CHECK_FALSE(j.contains("timing_ms"));

  r = run({"conformal", "audit", "--omega", "a(-1)^2|0>", "--max-weight", "3"});
  CHECK(r.code == 1);
  j = json_of(r);
  CHECK(j["status"] == "fail");
  bool witnessed = false;
  for (auto& c : j["checks"])
    if (c["failures"] != 0) witnessed = witnessed || c.contains("first_failure");
  CHECK(witnessed);

  r = run({"conformal", "alpha", "--a", "a(-1)^2|0>"});
  CHECK(r.code == 1);
  CHECK(r.err.find("a_0 does not vanish") != std::string::npos);

  r = run({"conformal", "shift", "--lambda", "1/3", "--timing"});
  CHECK(r.code == 0);
  CHECK(json_of(r).contains("timing_ms"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"va"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"va", "mode", "--u", "a(-1)|0>", "--m", "1", "--v", "|0>", "--bogus", "1"}).code == 2);
  CHECK(run({"va", "mode", "--u", "a(-1)|0>", "--m", "1", "--v", "|0>", "--kernel", "f0"}).code == 2);
  Run r = run({"va", "mode", "--u", "b(-1)|0>", "--m", "1", "--v", "|0>"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--u") != std::string::npos);
  CHECK(run({"va", "mode", "--u", "a(-1)|0>", "--v", "|0>"}).code == 2);
  CHECK(run({"conformal", "shift", "--lambda", "0.5"}).code == 2);
  CHECK(run({"va", "parse", "--algebra", "lattice", "--v", "|0>"}).code == 2);
  CHECK(run({"series", "expand", "--kernel", "h3"}).code == 2);
  CHECK(run({"suite", "run", "--level", "medium"}).code == 2);
  CHECK(run({"conformal", "shift", "--algebra", "virasoro"}).code == 2);
}

TEST_CASE("payload commands") {
  Run r = run({"lie", "bracket", "--u", "a(-1)|0>", "--m", "2", "--v", "a(-1)|0>", "--t", "-2"});
  CHECK(r.out == "\"2*|0> t^0\"\n");
  r = run({"lie", "reduce", "--u", "|0>", "--t", "3"});
  CHECK(r.out == "\"0\"\n");
  r = run({"phimod", "omega", "--lambda", "-1/2", "--n", "1"});
  Json j = json_of(r);
  CHECK(j["dimension"] == 2);
  CHECK(j["basis"][0] == "|-1/2>");
  r = run({"zhu", "build", "--algebra", "virasoro", "--n", "0", "--dmax", "4"});
  j = json_of(r);
  CHECK(j["classes"].size() == 3);
  r = run({"conformal", "alpha", "--lambda", "3/4", "--a", "a(-1)|0>"});
  CHECK(json_of(r)["scalar"] == "3/4");
  r = run({"va", "parse", "--algebra", "free_fermion", "--v", "psi(-1)psi(-2)|0>"});
  CHECK(r.out == "\"-psi(-2)psi(-1)|0>\"\n");
}

TEST_CASE("determinism and --out") {
  std::vector<std::string> cmd = {"va", "audit", "--algebra", "free_fermion", "--max-weight", "5/2",
                                  "--samples", "80", "--seed", "11"};
  Run a = run(cmd);
  Run b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  cmd[cmd.size() - 1] = "12";
  CHECK(run(cmd).out != a.out);

  std::string path = "vzhu_cli_out.json";
  cmd[cmd.size() - 1] = "11";
  cmd.push_back("--out");
  cmd.push_back(path);
  Run c = run(cmd);
  CHECK(c.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == a.out);
  std::remove(path.c_str());
}

TEST_CASE("quick suite") {
  Run r = run({"suite", "run", "--level", "quick"});
  CHECK(r.code == 0);
  Json j = json_of(r);
  CHECK(j["status"] == "pass");
  for (int id = 1; id <= 13; ++id) {
    char key[8];
    std::snprintf(key, sizeof key, "c%02d", id);
    CHECK_MESSAGE(j["data"][key]["status"] == "pass", key);
  }
}
