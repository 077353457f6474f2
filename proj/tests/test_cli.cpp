#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end checks of the coalition-lab binary. The harness passes the
// binary's location through COALITION_LAB_BIN.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  json payload;
  std::string raw;
};

const std::string& binary() {
  static const std::string path = [] {
    const char* env = std::getenv("COALITION_LAB_BIN");
    return std::string(env ? env : "");
  }();
  return path;
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "coalition_lab_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const json& doc) {
  fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << doc.dump(2);
  return path;
}

RunResult run(const std::string& args, bool parse = true) {
  RunResult result;
  fs::path out_path = scratch_dir() / "stdout.json";
  std::string cmd = binary() + " " + args + " > " + out_path.string() + " 2> " +
                    (scratch_dir() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  result.exit_code = status == -1 ? -1 : WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.raw = buffer.str();
  if (parse && result.exit_code == 0 && !result.raw.empty()) {
    result.payload = json::parse(result.raw, nullptr, false);
  }
  return result;
}

json swap_instance_9() {
  return {{"values", {"1", "1", "2", "2", "2", "2", "2", "3", "3"}},
          {"k", 2},
          {"sizes", {4, 5}},
          {"cost", "avg"},
          {"isolation", "his"}};
}

}  // namespace

TEST_CASE("cli: binary location is provided") { REQUIRE_FALSE(binary().empty()); }

TEST_CASE("cli: check reports stability and exact costs") {
  fs::path instance = write_file("swap9.json", swap_instance_9());
  fs::path structure = write_file("opt9.json", {{"assignment", {1, 1, 2, 2, 2, 2, 2, 1, 1}}});
  RunResult r = run("check " + instance.string() + " " + structure.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["stable"] == true);
  CHECK(r.payload["sorted"] == false);
  CHECK(r.payload["social_cost"] == "16/3");
  CHECK(r.payload["coalitions"] == "{{1,1,3,3},{2,2,2,2,2}}");

  fs::path sorted = write_file("sorted9.json", {{"assignment", {1, 1, 1, 1, 2, 2, 2, 2, 2}}});
  RunResult r2 = run("check " + instance.string() + " " + sorted.string());
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.payload["stable"] == true);
  CHECK(r2.payload["sorted"] == true);
  CHECK(r2.payload["social_cost"] == "17/3");
}

TEST_CASE("cli: an unstable structure is a verdict, not an error") {
  json doc = {{"values", {"1", "1", "1", "4", "6", "8", "8"}}, {"k", 2}, {"cost", "max"},
              {"initial", {1, 1, 1, 2, 2, 2, 2}}};
  fs::path instance = write_file("seven.json", doc);
  RunResult r = run("check " + instance.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["stable"] == false);
  CHECK(r.payload["verdict"] == "unstable");
  CHECK(r.payload["social_cost"] == "14");
}

TEST_CASE("cli: malformed rationals exit nonzero") {
  fs::path instance = write_file("bad.json", {{"values", {"1/0"}}, {"k", 1}, {"cost", "avg"}});
  RunResult r = run("check " + instance.string(), false);
  CHECK(r.exit_code != 0);
}

TEST_CASE("cli: optimum finds the published value") {
  json doc = {{"values", {"1", "1", "2", "2", "2", "3", "3"}}, {"k", 2}, {"cost", "cutoff"},
              {"lambda", "1/2"}, {"isolation", "his"}};
  fs::path instance = write_file("cutoff7.json", doc);
  RunResult r = run("optimum " + instance.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["opt_cost"] == "8/3");
  CHECK(r.payload["any_sorted"] == false);
  CHECK(r.payload["optima"][0]["coalitions"] == "{{1,1,3,3},{2,2,2}}");
}

TEST_CASE("cli: analyze reports an unbounded anarchy ratio") {
  json doc = {{"values", {"0", "3/4", "1", "5/4", "2"}}, {"k", 2}, {"cost", "cutoff"},
              {"lambda", "1"}, {"isolation", "his"}};
  fs::path instance = write_file("poa.json", doc);
  RunResult r = run("analyze " + instance.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["poa"] == "unbounded");
  CHECK(r.payload["opt_cost"] == "0");
}

TEST_CASE("cli: dynamics replays the 8-move cycle") {
  json doc = {{"values", {"1", "5", "5", "5", "6", "7", "8", "9", "10", "11", "14", "14"}},
              {"k", 2},
              {"cost", "cutoff"},
              {"lambda", "4"},
              {"isolation", "his"},
              {"initial", {2, 1, 2, 2, 1, 1, 2, 1, 2, 1, 1, 2}}};
  fs::path instance = write_file("irc.json", doc);
  json script = {{"moves",
                  {{{"agent", 3}, {"to", 1}},
                   {{"agent", 1}, {"to", 1}},
                   {{"agent", 8}, {"to", 2}},
                   {{"agent", 6}, {"to", 2}},
                   {{"agent", 3}, {"to", 2}},
                   {{"agent", 1}, {"to", 2}},
                   {{"agent", 8}, {"to", 1}},
                   {{"agent", 6}, {"to", 1}}}}};
  fs::path script_path = write_file("irc_script.json", script);
  RunResult r = run("dynamics " + instance.string() + " --script " + script_path.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["verdict"] == "CYCLE_DETECTED");
  CHECK(r.payload["cycle_start"] == 0);
  CHECK(r.payload["trace"].size() == 8);
}

TEST_CASE("cli: dynamics converges under first-improving on a maximum game") {
  json doc = {{"values", {"0", "0", "10", "10", "10"}}, {"k", 2}, {"cost", "max"},
              {"isolation", "his"}};
  fs::path instance = write_file("maxdyn.json", doc);
  RunResult r = run("dynamics " + instance.string() + " --policy first");
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["verdict"] == "CONVERGED");

  RunResult limited = run("dynamics " + instance.string() + " --max-steps 0");
  REQUIRE(limited.exit_code == 0);
  CHECK(limited.payload["verdict"] == "STEP_LIMIT");

  RunResult csv = run("dynamics " + instance.string() + " --format csv", false);
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.raw.find("step,mover,partner,source_slot,target_slot") == 0);
}

TEST_CASE("cli: construct builds a sorted stable structure and rejects UIS") {
  json doc = {{"values", {"4", "4", "5", "5", "7", "7", "7", "8", "9", "11"}}, {"k", 3},
              {"cost", "avg"}, {"isolation", "his"}};
  fs::path instance = write_file("construct.json", doc);
  RunResult r = run("construct " + instance.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["sorted"] == true);
  CHECK(r.payload["stable"] == true);
  CHECK(r.payload["moves"].get<long>() <= 30);

  json uis = doc;
  uis["isolation"] = "uis";
  fs::path uis_path = write_file("construct_uis.json", uis);
  RunResult rejected = run("construct " + uis_path.string(), false);
  CHECK(rejected.exit_code != 0);
}

TEST_CASE("cli: --out writes the payload to a file") {
  fs::path instance = write_file("swap9_out.json", swap_instance_9());
  fs::path structure = write_file("opt9_out.json", {{"assignment", {1, 1, 2, 2, 2, 2, 2, 1, 1}}});
  fs::path target = scratch_dir() / "payload.json";
  RunResult r = run("check " + instance.string() + " " + structure.string() + " --out " +
                        target.string(),
                    false);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(target);
  json payload = json::parse(in);
  CHECK(payload["social_cost"] == "16/3");
}

TEST_CASE("cli: verify-monotone declares the three models monotone") {
  RunResult r = run("verify-monotone --ground 0,1,2,3,4,5 --max-size 3 --lambda 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["avg"]["monotone"] == true);
  CHECK(r.payload["max"]["monotone"] == true);
  CHECK(r.payload["cutoff"]["monotone"] == true);
}

TEST_CASE("cli: the reference suite comes back clean") {
  RunResult r = run("paper-suite");
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["failures"] == 0);
  CHECK(r.payload["total"].get<long>() > 200);
}

TEST_CASE("cli: check accepts structures emitted by other commands") {
  json doc = {{"values", {"4", "4", "5", "5", "7", "7", "7", "8", "9", "11"}}, {"k", 3},
              {"cost", "avg"}, {"isolation", "his"}};
  fs::path instance = write_file("roundtrip.json", doc);
  RunResult constructed = run("construct " + instance.string());
  REQUIRE(constructed.exit_code == 0);
  fs::path structure = write_file("roundtrip_structure.json", constructed.payload["structure"]);
  RunResult checked = run("check " + instance.string() + " " + structure.string());
  REQUIRE(checked.exit_code == 0);
  CHECK(checked.payload["stable"] == true);
  CHECK(checked.payload["sorted"] == true);
}
