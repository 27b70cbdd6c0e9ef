#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bandsweep/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = bandsweep::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("convert expands to Artin letters and canonical band form") {
  const auto artin = run_cli({"convert", "--n", "3", "a(3,1)"});
  CHECK(artin.exit == 0);
  CHECK(artin.out == "2 1 -2\n");

  const auto band = run_cli({"convert", "--n", "3", "--to", "band", "s1 s2"});
  CHECK(band.exit == 0);
  CHECK(band.out == "a(2,1) a(3,2)\n");

  const auto as_json = run_cli({"convert", "--n", "3", "--json", "a(3,1)"});
  CHECK(as_json.exit == 0);
  CHECK(json::parse(as_json.out) == json({{"n", 3}, {"artin", {2, 1, -2}}}));
}

TEST_CASE("perm and invariants print scriptable lines") {
  const auto perm = run_cli({"perm", "--n", "3", "a(2,1) a(3,1)"});
  CHECK(perm.exit == 0);
  CHECK(perm.out == "2 3 1\n");

  const auto inv = run_cli({"invariants", "--n", "3", "a(2,1) a(3,1)"});
  CHECK(inv.exit == 0);
  CHECK(inv.out == "components=1 euler=1 e=2 unknot=true\n");

  const auto inv_json = run_cli({"invariants", "--n", "3", "--json", "a(2,1) a(2,1)"});
  const json j = json::parse(inv_json.out);
  CHECK(j["components"] == 3);
  CHECK(j["euler"] == 1);
  CHECK(j["exponent_sum"] == 2);
  CHECK(j["unknot"] == false);
}

TEST_CASE("neighbors lists moves with rewritten words") {
  const auto result = run_cli({"neighbors", "--n", "3", "a(3,2) a(2,1)"});
  CHECK(result.exit == 0);
  CHECK(result.out == "T@0>0\ta(2,1) a(3,1)\nT@0>1\ta(3,1) a(3,2)\n");
}

TEST_CASE("equal maps answers onto exit codes") {
  const auto yes = run_cli({"equal", "--n", "3", "a(3,2) a(2,1)", "a(2,1) a(3,1)"});
  CHECK(yes.exit == 0);
  CHECK(yes.out == "true\n");

  const auto no = run_cli({"equal", "--n", "3", "a(3,2) a(2,1)", "a(2,1) a(3,2)"});
  CHECK(no.exit == 1);
  CHECK(no.out == "false\n");

  const auto maybe = run_cli({"equal", "--n", "3", "--budget", "1", "a(3,2) a(2,1)", "a(2,1) a(3,1)"});
  CHECK(maybe.exit == 2);
  CHECK(maybe.out == "indeterminate\n");

  const auto batch = run_cli({"equal", "--n", "3", "a(3,2) a(2,1)"},
                             "a(2,1) a(3,1)\na(2,1) a(3,2)\n");
  CHECK(batch.exit == 1);
  CHECK(batch.out == "true\nfalse\n");

  const auto batch_json = run_cli({"equal", "--n", "3", "--json", "a(3,2) a(2,1)"}, "a(2,1) a(3,1)\n");
  json expected;
  expected["results"] = json::array({json{{"equal", true}}});
  CHECK(json::parse(batch_json.out) == expected);
}

TEST_CASE("conjugate prints the orbit dump") {
  const auto result = run_cli({"conjugate", "--n", "3", "a(3,2) a(2,1)"});
  CHECK(result.exit == 0);
  CHECK(result.out.starts_with("n=3 k=2 size=6 exact=true\n"));

  const auto truncated = run_cli({"conjugate", "--n", "3", "--budget", "2", "a(3,2) a(2,1)"});
  CHECK(truncated.exit == 2);
  CHECK(truncated.out.starts_with("n=3 k=2 size=2 exact=false\n"));
}

TEST_CASE("decide prints a replayable certificate and maps verdicts to exits") {
  const auto accepted = run_cli({"decide", "--n", "3", "--predicate", "any", "a(2,1) a(3,1)"});
  CHECK(accepted.exit == 0);
  CHECK(accepted.out == "n=3\na(2,1) a(3,1)\nany\nR\nR\n");

  const auto rejected = run_cli({"decide", "--n", "3", "--predicate", "never", "a(2,1) a(3,1)"});
  CHECK(rejected.exit == 1);
  CHECK(rejected.out == "NotMutuallyBraided\tstates=3\n");

  const auto maybe = run_cli({"decide", "--n", "3", "--predicate", "never", "--budget", "1", "a(2,1) a(3,1)"});
  CHECK(maybe.exit == 2);
  CHECK(maybe.out == "Indeterminate\tbudget=1\n");

  const auto as_json = run_cli({"decide", "--n", "3", "--json", "a(2,1) a(3,1)"});
  const json j = json::parse(as_json.out);
  CHECK(j["verdict"] == "MutuallyBraided");
  CHECK(j["certificate"] == json::array({"R", "R"}));
  CHECK(j["initial"] == "a(2,1) a(3,1)");

  const auto batch = run_cli({"decide", "--n", "3", "--predicate", "adjacent-first"},
                             "a(2,1) a(3,1)\na(3,1) a(2,1)\n");
  CHECK(batch.exit == 1);
  CHECK(batch.out == "MutuallyBraided\tT@0>1 R R T@0>0\nNotMutuallyBraided\tstates=1\n");
}

TEST_CASE("replay validates certificates from stdin and files") {
  const auto produced = run_cli({"decide", "--n", "3", "--predicate", "adjacent-first", "a(2,1) a(3,1)"});
  REQUIRE(produced.exit == 0);

  const auto replayed = run_cli({"replay"}, produced.out);
  CHECK(replayed.exit == 0);
  CHECK(replayed.out == produced.out + "VALID\n");

  // a certificate whose moves do not apply is invalid, exit 1
  const auto broken = run_cli({"replay"}, "n=3\na(2,1) a(3,1)\nany\nC@0\nR\nR\n");
  CHECK(broken.exit == 1);
  CHECK(broken.err.find("INVALID") != std::string::npos);

  // cycle-count mismatch is invalid, exit 1
  const auto short_cert = run_cli({"replay"}, "n=3\na(2,1) a(3,1)\nany\nR\n");
  CHECK(short_cert.exit == 1);

  // inadmissible cycling under the named predicate is invalid
  const auto inadmissible = run_cli({"replay"}, "n=3\na(3,1) a(3,1)\nadjacent-first\nR\nR\n");
  CHECK(inadmissible.exit == 1);

  // same moves pass under --predicate any override
  const auto overridden = run_cli({"replay", "--predicate", "any"}, "n=3\na(3,1) a(3,1)\nadjacent-first\nR\nR\n");
  CHECK(overridden.exit == 0);

  // malformed text is a data error
  const auto malformed = run_cli({"replay"}, "not a certificate\n");
  CHECK(malformed.exit == 65);

  const auto json_mode = run_cli({"replay", "--json"}, produced.out);
  CHECK(json_mode.exit == 0);
  const json j = json::parse(json_mode.out);
  CHECK(j["valid"] == true);
  CHECK(j["cycles"] == 2);
  CHECK(j["final"] == "a(2,1) a(3,1)");
}

TEST_CASE("census reports the enumeration header and per-orbit records") {
  const auto result = run_cli({"census", "--n", "3", "--predicate", "any"});
  CHECK(result.exit == 0);
  CHECK(result.out == "n=3 words=6 orbits=1\na(2,1) a(3,1)\t6\tMutuallyBraided\t1\t1\n");

  const auto as_json = run_cli({"census", "--n", "3", "--json"});
  const json j = json::parse(as_json.out);
  CHECK(j["words"] == 6);
  CHECK(j["orbits"] == 1);
  CHECK(j["records"][0]["representative"] == "a(2,1) a(3,1)");
  CHECK(j["records"][0]["orbit_size"] == 6);
  CHECK(j["records"][0]["verdict"] == "MutuallyBraided");
}

TEST_CASE("census text and json encode identical information") {
  const auto text = run_cli({"census", "--n", "4", "--predicate", "adjacent-first"});
  const auto as_json = run_cli({"census", "--n", "4", "--predicate", "adjacent-first", "--json"});
  REQUIRE(text.exit == 0);
  REQUIRE(as_json.exit == 0);
  const json j = json::parse(as_json.out);

  std::istringstream lines(text.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n=4 words=" + std::to_string(j["words"].get<std::size_t>()) +
                      " orbits=" + std::to_string(j["orbits"].get<std::size_t>()));
  std::size_t index = 0;
  std::string line;
  while (std::getline(lines, line)) {
    const json& record = j["records"].at(index++);
    std::istringstream fields(line);
    std::string representative, orbit_size, verdict, components, euler;
    std::getline(fields, representative, '\t');
    std::getline(fields, orbit_size, '\t');
    std::getline(fields, verdict, '\t');
    std::getline(fields, components, '\t');
    std::getline(fields, euler, '\t');
    CHECK(representative == record["representative"]);
    CHECK(orbit_size == std::to_string(record["orbit_size"].get<std::size_t>()));
    CHECK(verdict == record["verdict"]);
    CHECK(components == std::to_string(record["components"].get<int>()));
    CHECK(euler == std::to_string(record["euler"].get<int>()));
  }
  CHECK(index == j["records"].size());
}

TEST_CASE("census runs are deterministic, sequential or parallel") {
  const auto first = run_cli({"census", "--n", "4"});
  const auto second = run_cli({"census", "--n", "4"});
  const auto threaded = run_cli({"census", "--n", "4", "--threads", "4"});
  CHECK(first.out.starts_with("n=4 words=96 orbits="));
  CHECK(first.out == second.out);
  CHECK(first.out == threaded.out);
}

TEST_CASE("batch decide emits a single json object") {
  const auto result = run_cli({"decide", "--n", "3", "--json", "--predicate", "adjacent-first"},
                              "a(2,1) a(3,1)\na(3,1) a(2,1)\n");
  CHECK(result.exit == 1);
  const json j = json::parse(result.out);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["verdict"] == "MutuallyBraided");
  CHECK(j["results"][1]["verdict"] == "NotMutuallyBraided");
  CHECK(j["results"][1]["states_explored"] == 1);
}

TEST_CASE("usage and data errors use the reserved exit codes") {
  CHECK(run_cli({"bogus-subcommand"}).exit == 64);
  CHECK(run_cli({"perm", "a(2,1)"}).exit == 64);                      // missing --n
  CHECK(run_cli({"decide", "--n", "3", "--predicate", "bogus", "a(2,1)"}).exit == 64);
  CHECK(run_cli({"perm", "--n", "0", "a(2,1)"}).exit == 64);          // rejected by flag check
  CHECK(run_cli({"perm", "--n", "3", "a(1,2)"}).exit == 65);          // IndexOrder
  CHECK(run_cli({"perm", "--n", "3", "nonsense"}).exit == 65);        // SyntaxError
  CHECK(run_cli({"decide", "--n", "3", ""}).exit == 65);              // EmptyWord
  CHECK(run_cli({"equal", "--n", "3", "a(2,1)", "a(2,1) a(3,1)"}).exit == 1);  // length differs: definite no
  CHECK(run_cli({"replay", "missing-file.cert"}).exit == 65);
  CHECK(run_cli({"--help"}).exit == 0);
  CHECK(run_cli({"decide", "--help"}).exit == 0);
}
