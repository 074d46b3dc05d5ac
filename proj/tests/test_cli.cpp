#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end checks of the command line surface: exit codes and output
// shapes. The binary location comes from the LINKFORGE_CLI environment
// variable, set by the test harness.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

std::string cli_path() {
  const char* p = std::getenv("LINKFORGE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "LINKFORGE_CLI must point at the linkforge binary");
  return p;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& seed_env = "") {
  std::string cmd;
  if (!seed_env.empty()) cmd += "LINKFORGE_SEED=" + seed_env + " ";
  cmd += cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_") + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("examples lists the gallery") {
  RunResult r = run("examples");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["gallery"].size() >= 10);
}

TEST_CASE("analyze: parallel 4C has mobility 4") {
  std::string doc = write_temp("4c.json", R"({"name":"planar_nC","params":{"n":4}})");
  RunResult r = run("analyze " + doc + " --seed 7");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mobility"]["mobility"] == 4);
  CHECK(j["mobility"]["rank_stable"] == true);
}

TEST_CASE("analyze: malformed input exits 2") {
  std::string doc = write_temp("bad.json", "{nope");
  RunResult r = run("analyze " + doc);
  CHECK(r.exit_code == 2);
  CHECK(nlohmann::json::parse(r.out)["error"] == "schema");
}

TEST_CASE("classify goldberg and hhrrr") {
  std::string doc = write_temp("goldberg.json", R"({"name":"goldberg"})");
  RunResult r = run("classify " + doc);
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["label"] == "GOLDBERG");

  std::string doc2 = write_temp("hhrrr.json", R"({"name":"hhrrr"})");
  RunResult r2 = run("classify " + doc2);
  CHECK(r2.exit_code == 0);
  CHECK(nlohmann::json::parse(r2.out)["label"] == "H5_ALL_PARALLEL");
}

TEST_CASE("classify: a 6R loop is an unsupported census") {
  RunResult emit = run("examples --emit line_symmetric_6C --out cli_6c.json");
  CHECK(emit.exit_code == 0);
  RunResult r = run("classify cli_6c.json");
  CHECK(r.exit_code == 4);
  CHECK(nlohmann::json::parse(r.out)["error"] == "census");
}

TEST_CASE("bonds: bennett connections, missing curve, bad curve") {
  std::string doc = write_temp("bennett.json", R"({"name":"bennett","params":{"a":2,"b":1}})");
  RunResult r = run("bonds " + doc);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["connections"].size() == 2);
  CHECK(j["connections"][0][0] == 0);
  CHECK(j["connections"][0][1] == 2);
  CHECK(j["bonds"].size() == 4);

  // no curve block: exit 6
  std::string nocurve = write_temp("nocurve.json", R"({"name":"planar_5R"})");
  RunResult r6 = run("bonds " + nocurve);
  CHECK(r6.exit_code == 6);

  // curve violating closure: exit 3 with residual evidence
  RunResult emitted = run("examples --emit bennett");
  CHECK(emitted.exit_code == 0);
  auto full = nlohmann::json::parse(emitted.out);
  full["curve"]["joints"][1]["t0"][0] = 1.3;
  std::string bad = write_temp("badcurve.json", full.dump());
  RunResult r3 = run("bonds " + bad);
  CHECK(r3.exit_code == 3);
  auto e3 = nlohmann::json::parse(r3.out);
  CHECK(e3["error"] == "numeric");
  CHECK(e3["worst_residual"].get<double>() > 1e-3);
}

TEST_CASE("trace: hhrrr joint-4 projection and immobile rejection") {
  std::string doc = write_temp("hhrrr2.json", R"({"name":"hhrrr"})");
  RunResult r = run("trace " + doc + " --link 4 --point -2 0 0 --steps 40 --format svg --out cli_hhrrr.svg --seed 3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["residual_max"].get<double>() <= 1e-9);
  std::ifstream svg("cli_hhrrr.svg");
  std::stringstream ss;
  ss << svg.rdbuf();
  CHECK(ss.str().find("<polyline") != std::string::npos);

  // a rigid loop cannot be traced
  auto rigid = nlohmann::json::parse(R"({"joints":[
    {"kind":"R","axis":{"p":[0,0,1],"q":[0,0,0]}},
    {"kind":"R","axis":{"p":[1,0,0],"q":[0,1.2,0.5]}},
    {"kind":"R","axis":{"p":[0,1,0],"q":[0.3,0,-0.4]}},
    {"kind":"R","axis":{"p":[0.707106781186547524,0.707106781186547524,0],"q":[0.2,-0.2,0.9]}},
    {"kind":"R","axis":{"p":[0.267261241912424397,0.534522483824848795,0.801783725737273191],"q":[1.1,0.2,-0.5]}}
  ]})");
  std::string rigid_doc = write_temp("rigid.json", rigid.dump());
  RunResult r5 = run("trace " + rigid_doc + " --steps 5");
  CHECK(r5.exit_code == 5);
}

TEST_CASE("carve: parallel 4C document, zero pitch, failing annihilation") {
  RunResult emit = run("examples --emit planar_nH --param n=4 --param g=0.3 --carve-doc --out cli_carve4c.json");
  CHECK(emit.exit_code == 0);
  RunResult r = run("carve cli_carve4c.json --seed 11 --out cli_carved.json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound"] == 1);
  CHECK(j["a_rank"] == 1);
  CHECK(j["k0_dim"] == 4);
  auto carved = nlohmann::json::parse(std::ifstream("cli_carved.json"));
  CHECK(carved["joints"].size() == 4);
  CHECK(carved["joints"][0]["kind"] == "H");

  auto doc = nlohmann::json::parse(std::ifstream("cli_carve4c.json"));
  doc["carve"]["g"][2] = 0.0;
  RunResult r2 = run("carve " + write_temp("zeropitch.json", doc.dump()));
  CHECK(r2.exit_code == 2);

  doc["carve"]["g"][2] = 0.3;
  doc["carve"]["A"] = {{1, 2, 1, 1}};
  RunResult r7 = run("carve " + write_temp("badrow.json", doc.dump()));
  CHECK(r7.exit_code == 7);
  auto e7 = nlohmann::json::parse(r7.out);
  CHECK(e7["error"] == "annihilation");
  CHECK(e7.contains("row"));
}

TEST_CASE("analyze: a borderline singular value populates the warning field") {
  // perturb one bennett axis so the smallest singular value falls inside
  // the tolerance decade [1e-8, 1e-7] relative to sigma_max
  RunResult emitted = run("examples --emit bennett");
  auto doc = nlohmann::json::parse(emitted.out);
  double q0 = doc["joints"][3]["axis"]["q"][0].get<double>();
  doc["joints"][3]["axis"]["q"][0] = q0 + 4e-7;
  std::string path = write_temp("wobble.json", doc.dump());
  RunResult r = run("analyze " + path + " --seed 5");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mobility"]["rank_stable"] == false);
  CHECK(j["mobility"]["warnings"].size() >= 1);
}

TEST_CASE("trace: planar four-bar coupler CSV has a constant z column") {
  std::string doc = write_temp("par4r.json", R"({"name":"planar_4R"})");
  RunResult r = run("trace " + doc +
                    " --link 2 --point 1 0.5 0.25 --steps 50 --format csv --out cli_par4r.csv --seed 2");
  CHECK(r.exit_code == 0);
  std::ifstream csv("cli_par4r.csv");
  std::string line;
  std::getline(csv, line);  // header
  CHECK(line.find(",x,y,z") != std::string::npos);
  int rows = 0;
  while (std::getline(csv, line)) {
    double z = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(std::abs(z - 0.25) < 1e-9);
    ++rows;
  }
  CHECK(rows == 51);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  std::string doc = write_temp("det.json", R"({"name":"goldberg"})");
  RunResult a = run("analyze " + doc, "42");
  RunResult b = run("analyze " + doc, "42");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // the env var wins over the flag
  RunResult c = run("analyze " + doc + " --seed 7", "42");
  CHECK(c.out == a.out);
}
