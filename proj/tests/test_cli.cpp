#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "stlmon/cli.hpp"
#include "support.hpp"

using namespace stlmon;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("stlmon_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli_main(args, out, err);
  return {status, out.str(), err.str()};
}

const char* kListing1 =
    "G[0, 5] (temp < $MAX_TEMP) && (pressure > 10.0 -> F[0, 2] valve_open == 1.0)";

}  // namespace

TEST_CASE("run: listing scenario as CSV") {
  auto input = write_temp("listing.csv",
                          "time,signal,value\n0,temp,125.5\n0,pressure,15.0\n0,valve_open,1.0\n");
  auto r = run_cli({"run", "--formula", kListing1, "--input", input, "--semantics", "rosi",
                    "--var", "MAX_TEMP=120"});
  CHECK(r.status == 0);
  CHECK(r.out == "time,kind,lo_or_value,hi,final\n0,rosi,-inf,-5.5,false\n");
}

TEST_CASE("run: empty input gives only the header") {
  auto input = write_temp("empty.csv", "time,signal,value\n");
  auto r = run_cli({"run", "--formula", "x > 0", "--input", input});
  CHECK(r.status == 0);
  CHECK(r.out == "time,kind,lo_or_value,hi,final\n");
  auto blank = write_temp("blank.csv", "");
  CHECK(run_cli({"run", "--formula", "x > 0", "--input", blank}).status == 0);
}

TEST_CASE("run: decreasing timestamps for one signal") {
  auto input = write_temp("decreasing.csv", "time,signal,value\n0,x,1\n2,x,1\n2,y,1\n1,x,1\n");
  auto r = run_cli({"run", "--formula", "x > 0 && y > 0", "--input", input});
  CHECK(r.status == 2);
  CHECK(r.err.find("row 4") != std::string::npos);
}

TEST_CASE("run: repeated timestamp for one signal names the row") {
  auto input = write_temp("repeat.csv", "time,signal,value\n0,x,1\n1,x,1\n1,x,2\n");
  auto r = run_cli({"run", "--formula", "x > 0", "--input", input});
  CHECK(r.status == 2);
  CHECK(r.err.find("row 3") != std::string::npos);
}

TEST_CASE("run: schema and formula errors") {
  auto bad_header = write_temp("header.csv", "t,s,v\n0,x,1\n");
  CHECK(run_cli({"run", "--formula", "x > 0", "--input", bad_header}).status == 2);
  auto bad_value = write_temp("value.csv", "time,signal,value\n0,x,abc\n");
  auto r = run_cli({"run", "--formula", "x > 0", "--input", bad_value});
  CHECK(r.status == 2);
  CHECK(r.err.find("row 1") != std::string::npos);
  auto ok = write_temp("ok.csv", "time,signal,value\n0,x,1\n");
  CHECK(run_cli({"run", "--formula", "x > ", "--input", ok}).status == 2);
  CHECK(run_cli({"run", "--formula", "x > $T", "--input", ok}).status == 2);
  CHECK(run_cli({"run", "--formula", "x > 0", "--input", ok, "--semantics", "fuzzy"}).status == 2);
  CHECK(run_cli({"run", "--formula", "w > 0", "--input", ok}).status == 2);
  CHECK(run_cli({"frobnicate"}).status == 2);
}

TEST_CASE("run: verdict kinds") {
  auto input = write_temp("kinds.csv", "time,signal,value\n0,x,1\n1,x,-1\n");
  auto q = run_cli({"run", "--formula", "x > 0", "--input", input, "--semantics",
                    "delayed-qualitative"});
  CHECK(q.out == "time,kind,lo_or_value,hi,final\n0,boolean,true,,true\n1,boolean,false,,true\n");
  auto e = run_cli({"run", "--formula", "x > 0", "--input", input, "--semantics",
                    "eager-qualitative"});
  CHECK(e.out ==
        "time,kind,lo_or_value,hi,final\n0,three-valued,True,,true\n1,three-valued,False,,true\n");
  auto d = run_cli({"run", "--formula", "x > 0", "--input", input});
  CHECK(d.out == "time,kind,lo_or_value,hi,final\n0,robustness,1,,true\n1,robustness,-1,,true\n");
}

TEST_CASE("run: formula file, definitions and output file") {
  auto formula = write_temp("formula.stl", "phi && x < 5\n");
  auto input = write_temp("def.csv", "time,signal,value\n0,x,1\n");
  auto output = std::filesystem::temp_directory_path() / "stlmon_test_out.csv";
  auto r = run_cli({"run", "--formula-file", formula, "--define", "phi=x > 0", "--input", input,
                    "--output", output.string()});
  CHECK(r.status == 0);
  std::ifstream in(output);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "time,kind,lo_or_value,hi,final\n0,robustness,1,,true\n");
}

TEST_CASE("run: naive and incremental outputs agree") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    auto c = testing::random_case(rng);
    std::string csv = "time,signal,value\n";
    for (const auto& s : c.steps) {
      csv += format_number(s.timestamp) + "," + s.signal + "," + format_number(s.value) + "\n";
    }
    auto input = write_temp("random.csv", csv);
    for (auto sem : {"delayed-quantitative", "delayed-qualitative", "eager-qualitative", "rosi"}) {
      std::vector<std::string> base = {"run", "--formula", format_formula(c.formula),
                                       "--input", input, "--semantics", sem,
                                       "--var", "V=" + format_number(c.variables.at("V"))};
      auto inc = base, nai = base;
      nai.insert(nai.end(), {"--algorithm", "naive"});
      auto a = run_cli(inc);
      auto b = run_cli(nai);
      CAPTURE(format_formula(c.formula));
      CHECK(a.status == 0);
      CHECK(a.out == b.out);
    }
  }
}

TEST_CASE("check prints the canonical formula") {
  auto r = run_cli({"check", "--formula", "globally[0,5] temp < $MAX_TEMP"});
  CHECK(r.status == 0);
  CHECK(r.out.find("formula: G[0, 5] (temp < $MAX_TEMP)") != std::string::npos);
  CHECK(r.out.find("temporal depth: 5") != std::string::npos);
  auto bad = run_cli({"check", "--formula", "G[3,1] x > 0"});
  CHECK(bad.status == 2);
}

TEST_CASE("chirp subcommand writes a trace") {
  auto r = run_cli({"chirp", "--duration", "3"});
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  auto steps = read_steps_csv(in);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].value == 0.0);
}
