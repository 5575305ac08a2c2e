#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <string>

#include "support.hpp"

using json = nlohmann::json;
using testsupport::run_command;

namespace {

std::string cli() { return testsupport::cli_path_from_env(); }

json parse_record(const std::string& output) {
  const auto start = output.find('{');
  REQUIRE(start != std::string::npos);
  const auto end = output.find('\n', start);
  return json::parse(output.substr(start, end - start));
}

void check_schema(const json& record) {
  for (const char* key : {"command", "inputs", "status", "result", "timings", "resource"})
    REQUIRE(record.contains(key));
}

}  // namespace

TEST_CASE("classify output and exit codes") {
  auto r1 = run_command(cli() + " classify -a 0 -b 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output.find("R1") != std::string::npos);
  CHECK(r1.output.find("condition: 1") != std::string::npos);

  auto touch = run_command(cli() + " classify -a -3 -b -2 --json");
  CHECK(touch.exit_code == 0);
  json record = parse_record(touch.output);
  check_schema(record);
  CHECK(record["result"]["region"] == "R2_touch_below");
  CHECK(record["result"]["condition"] == "2/3");
  CHECK(record["result"]["sign_4a3_plus_27b2"] == 0);
  CHECK(record["result"]["sign_b"] == -1);

  auto degenerate = run_command(cli() + " classify -a 0 -b 0");
  CHECK(degenerate.exit_code == 0);
  CHECK(degenerate.output.find("R0_degenerate") != std::string::npos);
  CHECK(degenerate.output.find("(r^2, r^3)") != std::string::npos);

  CHECK(run_command(cli() + " classify -a 12x -b 0").exit_code == 2);
  CHECK(run_command(cli() + " classify -a 1").exit_code == 2);
}

TEST_CASE("certify round trips the worked examples") {
  auto hit = run_command(cli() + " certify --A 1,4 --B 0,1,2,9 --json");
  CHECK(hit.exit_code == 0);
  json record = parse_record(hit.output);
  check_schema(record);
  CHECK(record["status"] == "true");
  CHECK(record["result"]["chi"] == "1");
  CHECK(record["result"]["nonempty"] == true);

  auto miss = run_command(cli() + " certify --A 3 --B 5");
  CHECK(miss.exit_code == 1);
  CHECK(miss.output.find("chi = 0") != std::string::npos);

  CHECK(run_command(cli() + " certify --A 1 --B 1 --M 1 --N 0").exit_code == 2);
  CHECK(run_command(cli() + " certify --A 1 --B not-a-number").exit_code == 2);
  CHECK(run_command(cli() + " certify --A 0 --B 600").exit_code == 3);
}

TEST_CASE("guard precedence: flag over environment over default") {
  const std::string wide = " certify --A 0 --B 0,520 --json";
  CHECK(run_command(cli() + wide).exit_code == 3);
  CHECK(run_command("OMEGA_POINT_MAX_WIDTH=768 " + cli() + wide).exit_code == 0);
  CHECK(run_command("OMEGA_POINT_MAX_WIDTH=768 " + cli() + wide + " --max-width 100").exit_code ==
        3);
  CHECK(run_command(cli() + wide + " --max-width 1024").exit_code == 0);
}

TEST_CASE("eval reports conditions, windows and guards") {
  auto satisfied = run_command(cli() + " eval -a 0 -b 1 -n 1 --I 2 --J 3 --json");
  CHECK(satisfied.exit_code == 0);
  json record = parse_record(satisfied.output);
  check_schema(record);
  CHECK(record["result"]["condition"] == 1);
  CHECK(record["result"]["satisfied"] == true);
  REQUIRE(record["result"]["branches"].size() == 1);
  CHECK(record["result"]["branches"][0]["branch"] == 0);

  auto lattice = run_command(cli() + " eval -a -3 -b -2 -n 1 --I 1 --J 1 --json");
  CHECK(lattice.exit_code == 0);
  json lattice_record = parse_record(lattice.output);
  CHECK(lattice_record["result"]["condition"] == 2);
  CHECK(lattice_record["result"]["lattice_solution"]["x"] == "-1");

  auto unsatisfied = run_command(cli() + " eval -a 0 -b 3 -n 1 --I 2 --J 2");
  CHECK(unsatisfied.exit_code == 1);
  CHECK(unsatisfied.output.find("satisfied: false") != std::string::npos);

  // every branch window beyond the guard: resource exit
  CHECK(run_command(cli() + " eval -a 1 -b 1 -n 1 --I 30 --J 1").exit_code == 3);
  CHECK(run_command(cli() + " eval -a 0 -b 0 -n 1 --I 1 --J 1").exit_code == 2);
}

TEST_CASE("search finds, reports supplements, and stays honest") {
  auto found = run_command(cli() + " search -a 0 -b -2 --json");
  CHECK(found.exit_code == 0);
  json record = parse_record(found.output);
  check_schema(record);
  CHECK(record["status"] == "found");
  CHECK(record["result"]["point"]["x"] == "3");
  CHECK(record["result"]["point"]["y"] == "5");
  CHECK(record["result"]["point"]["witness"]["n"] == "1");
  REQUIRE(record["result"].contains("supplement"));

  auto axis = run_command(cli() + " search -a -3 -b -2 --json");
  CHECK(axis.exit_code == 0);
  json axis_record = parse_record(axis.output);
  CHECK(axis_record["result"]["point"]["x"] == "-1");
  CHECK(axis_record["result"]["point"]["y"] == "0");
  // the x-axis supplement lists both rational roots
  CHECK(axis_record["result"]["supplement"]["x_axis_points"].size() == 2);

  auto inconclusive = run_command(cli() + " search -a 0 -b 6 --max-n 3");
  CHECK(inconclusive.exit_code == 1);
  CHECK(inconclusive.output.find("inconclusive") != std::string::npos);

  auto degenerate = run_command(cli() + " search -a 0 -b 0 --json");
  CHECK(degenerate.exit_code == 0);
  json degenerate_record = parse_record(degenerate.output);
  CHECK(degenerate_record["status"] == "found");
  REQUIRE(degenerate_record["result"].contains("degenerate_family"));

  auto threaded = run_command(cli() + " search -a 1 -b 1 --threads 4 --json");
  CHECK(threaded.exit_code == 0);
  CHECK(parse_record(threaded.output)["result"]["point"]["x"] == "0");

  auto timed_out = run_command(cli() + " search -a 0 -b 6 --timeout-secs 0 --json");
  CHECK(timed_out.exit_code == 1);
  json timed_record = parse_record(timed_out.output);
  CHECK(timed_record["status"] == "inconclusive");
  CHECK(timed_record["result"]["trace"]["deadline_hit"] == true);
}

TEST_CASE("verify parses fractions and checks exactly") {
  CHECK(run_command(cli() + " verify -a 0 -b 1 --x 2 --y 3").exit_code == 0);
  CHECK(run_command(cli() + " verify -a 0 -b 1 --x 1/2 --y 3/2").exit_code == 1);
  CHECK(run_command(cli() + " verify -a 0 -b -2 --x 3 --y -5").exit_code == 0);
  CHECK(run_command(cli() + " verify -a 0 -b 1 --x 1/0 --y 1").exit_code == 2);
  CHECK(run_command(cli() + " verify -a 0 -b 1 --x 1//2 --y 1").exit_code == 2);
  CHECK(run_command(cli() + " verify -a 0 -b 1 --x abc --y 1").exit_code == 2);
}

TEST_CASE("bench sweeps widths and honors the guard") {
  auto ok = run_command(cli() + " bench --max-width 64 --json");
  CHECK(ok.exit_code == 0);
  json record = parse_record(ok.output);
  check_schema(record);
  const auto& rows = record["result"]["rows"];
  REQUIRE(rows.size() >= 4);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i]["peak_bits"].get<std::uint64_t>() >
          rows[i - 1]["peak_bits"].get<std::uint64_t>());

  CHECK(run_command(cli() + " bench --max-width 100000").exit_code == 3);
}

TEST_CASE("json records are stable single lines") {
  for (const std::string args :
       {std::string("classify -a 2 -b 9"), std::string("certify --A 1 --B 2"),
        std::string("eval -a 0 -b 1 -n 1 --I 1 --J 1"), std::string("search -a -1 -b 0"),
        std::string("verify -a 0 -b 1 --x 0 --y 1"), std::string("bench --max-width 8")}) {
    auto res = run_command(cli() + " " + args + " --json");
    const auto newline = res.output.find('\n');
    REQUIRE(newline != std::string::npos);
    CHECK(newline == res.output.size() - 1);  // exactly one line
    check_schema(json::parse(res.output));
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_command(cli()).exit_code == 2);
  CHECK(run_command(cli() + " frobnicate").exit_code == 2);
  CHECK(run_command(cli() + " search -a 1").exit_code == 2);
  CHECK(run_command(cli() + " certify --A 1 --B 1 --bogus").exit_code == 2);
}
