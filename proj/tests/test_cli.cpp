#include "abc/cli/app.hpp"
#include "abc/cli/config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = abc::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) rows.push_back(split(line));
  return rows;
}

}  // namespace

TEST_CASE("moments golden rows") {
  const auto r = run({"moments", "--state", "0,0,0", "--mu0", "0", "--Z", "1", "--lambda", "-2..2"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == split("state_n,state_q,state_k,mu0,Z,lambda,engine_value,oracle_value,rel_err,status"));
  const double expected[] = {2.0, 1.0, 1.0, 1.5, 3.0};
  for (int i = 0; i < 5; ++i) {
    CHECK(std::stoi(rows[i + 1][5]) == i - 2);
    CHECK(std::stod(rows[i + 1][6]) == doctest::Approx(expected[i]).epsilon(1e-14));
    CHECK(rows[i + 1][9] == "ok");
  }
}

TEST_CASE("rational moment carries its unit tag") {
  const auto r = run({"moments", "--state", "0,0,0", "--mu0", "1/2", "--mode", "rational",
                      "--lambda", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["engine_value"] == "3");
  CHECK(doc["rows"][0]["unit"] == "(a0/Z)^1");
  CHECK(doc["summary"]["pass"] == true);
  CHECK(doc.contains("config"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"moments", "--mode", "rational", "--mu0", "0.1"}).code == 2);
  CHECK(run({"moments", "--mode", "exactish"}).code == 2);
  CHECK(run({"moments", "--Z", "0"}).code == 2);
  CHECK(run({"moments", "--lambda", "3..1"}).code == 2);
  CHECK(run({"moments", "--state", "0,0"}).code == 2);
  CHECK(run({"moments", "--dim", "2d", "--q", "1"}).code == 2);
  CHECK(run({"moments", "--n", "-1"}).code == 2);
  CHECK(run({"moments", "--mu0", "1/2", "--flux", "0.5"}).code == 2);
  CHECK(run({"verify", "--grid", "huge"}).code == 2);
  CHECK(run({"verify", "--tol", "-1"}).code == 2);
  CHECK(run({"moments", "--format", "xml"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("exact binary decimals are accepted in rational mode") {
  const auto r = run({"moments", "--mu0", "0.5", "--mode", "rational", "--lambda", "1"});
  CHECK(r.code == 0);
  CHECK(csv_rows(r.out)[1][6] == "3");
}

TEST_CASE("CSV and JSON encode the same values") {
  const std::vector<std::string> base{"moments", "--n", "0..2", "--q", "0..1", "--k", "-1..1",
                                      "--mu0-grid", "0,1/10,1/3", "--Z", "2", "--lambda", "-4..4"};
  auto csv_args = base, json_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto c = run(csv_args);
  const auto j = run(json_args);
  REQUIRE(c.code == 0);
  REQUIRE(j.code == 0);
  const auto rows = csv_rows(c.out);
  const auto doc = json::parse(j.out);
  REQUIRE(rows.size() == doc["rows"].size() + 1);
  const auto& header = rows[0];
  bool saw_divergent = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& jr = doc["rows"][i - 1];
    REQUIRE(rows[i].size() == header.size());
    for (std::size_t col = 0; col < header.size(); ++col) {
      const auto& cell = rows[i][col];
      const auto& value = jr[header[col]];
      if (value.is_null()) {
        CHECK(cell.empty());
      } else if (value.is_string()) {
        CHECK(cell == value.get<std::string>());
      } else {
        REQUIRE_FALSE(cell.empty());
        CHECK(std::strtod(cell.c_str(), nullptr) == value.get<double>());
      }
    }
    saw_divergent |= jr["status"] == "DivergentMoment";
  }
  CHECK(saw_divergent);
}

TEST_CASE("rational CSV and JSON agree too") {
  const std::vector<std::string> base{"moments", "--state", "1,1,-1", "--mu0", "1/4", "--mode",
                                      "rational", "--lambda", "-4..3", "--no-oracle"};
  auto a = base, b = base;
  a.insert(a.end(), {"--format", "csv"});
  b.insert(b.end(), {"--format", "json"});
  const auto rows = csv_rows(run(a).out);
  const auto doc = json::parse(run(b).out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][6] == doc["rows"][i - 1]["engine_value"].get<std::string>());
    CHECK(rows[i][7].empty());
  }
}

TEST_CASE("verify output is deterministic") {
  const auto a = run({"verify", "--grid", "small"});
  const auto b = run({"verify", "--grid", "small"});
  const auto s = run({"verify", "--grid", "small", "--serial"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == s.out);
  const auto doc = json::parse(a.out);
  CHECK(doc["summary"]["pass"] == true);
  CHECK(doc["summary"]["n_checks"].get<std::size_t>() == doc["rows"].size());
  for (const auto& row : doc["rows"]) CHECK(row["pass"] == true);
}

TEST_CASE("failures-only keeps the summary") {
  const auto r = run({"verify", "--grid", "small", "--failures-only"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["rows"].empty());
  CHECK(doc["summary"]["n_checks"].get<std::size_t>() > 1000);
  const auto csv = run({"verify", "--grid", "small", "--format", "csv", "--failures-only"});
  CHECK(csv_rows(csv.out).size() == 1);
}

TEST_CASE("environment variables supply defaults") {
  ::setenv("ABC_MU0", "1/2", 1);
  ::setenv("ABC_MODE", "rational", 1);
  const auto r = run({"moments", "--lambda", "1"});
  ::unsetenv("ABC_MU0");
  ::unsetenv("ABC_MODE");
  REQUIRE(r.code == 0);
  CHECK(csv_rows(r.out)[1][6] == "3");
  // command line wins over the environment
  ::setenv("ABC_MU0", "1/2", 1);
  const auto s = run({"moments", "--mu0", "0", "--lambda", "1"});
  ::unsetenv("ABC_MU0");
  CHECK(std::stod(csv_rows(s.out)[1][6]) == 1.5);
}

TEST_CASE("spectrum") {
  const auto r = run({"spectrum", "--state", "0,0,0", "--mu0", "1/2", "--mode", "rational"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  CHECK(rows[0] == split("state_n,state_q,state_k,mu0,Z,n_eff,alpha,energy"));
  CHECK(rows[1][5] == "3/2");
  CHECK(rows[1][6] == "1/2");
  CHECK(rows[1][7] == "-2/9");
  const auto j = json::parse(run({"spectrum", "--dim", "2d", "--n", "0..1", "--k", "0",
                                  "--format", "json"}).out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["energy"].get<double>() == -2.0);
  CHECK(j["rows"][0]["state_q"].is_null());
}

TEST_CASE("flux via --flux is minus mu0") {
  const auto r = run({"moments", "--flux", "-1/2", "--mode", "rational", "--lambda", "1"});
  REQUIRE(r.code == 0);
  CHECK(csv_rows(r.out)[1][6] == "3");
}

TEST_CASE("sweep reports trends") {
  const auto r = run({"sweep", "--state", "0,0,0", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  REQUIRE(doc["trends"].size() == 4);  // lambda -1..2
  CHECK(doc["trends"][0]["expected"] == "decreasing");
  CHECK(doc["trends"][1]["expected"] == "constant");
  CHECK(doc["trends"][3]["expected"] == "increasing");
  for (const auto& t : doc["trends"]) CHECK(t["postcondition"] == true);
  CHECK(doc["rows"].size() == 4 * 20);
}

TEST_CASE("2D moments and physical units") {
  const auto r = run({"moments", "--dim", "2d", "--state", "0,0", "--lambda", "-1",
                      "--a0", "0.529", "--Z", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  const auto& row = doc["rows"][0];
  CHECK(row["engine_value"].get<double>() == doctest::Approx(4.0));
  CHECK(row["physical_value"].get<double>() == doctest::Approx(4.0 * 2.0 / 0.529));
  const auto d = run({"moments", "--dim", "2d", "--state", "0,0", "--mu0", "1/2", "--lambda", "-3"});
  CHECK(d.code == 0);
  CHECK(csv_rows(d.out)[1][9] == "DivergentMoment");
  CHECK(csv_rows(d.out)[1][1].empty());
}

TEST_CASE("output file") {
  const std::string path = "test_cli_output.csv";
  const auto r = run({"moments", "--lambda", "1", "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("state_n,", 0) == 0);
  CHECK(run({"moments", "-o", "/nonexistent/dir/x.csv"}).code == 2);
}

TEST_CASE("mu0 grid parsing") {
  const auto g = abc::cli::parse_mu0_grid("0:1/2:1/8", true);
  REQUIRE(g.size() == 5);
  CHECK(*g[4].exact_mu0() == abc::Rational(1, 2));
  CHECK(abc::cli::parse_mu0_grid("0:0.95:0.05", false).size() == 20);
  CHECK_THROWS_AS(abc::cli::parse_mu0_grid("0:1:0", false), abc::cli::UsageError);
  CHECK_THROWS_AS(abc::cli::parse_mu0_grid("0,0.1", true), abc::cli::UsageError);
  CHECK(abc::cli::parse_range("-4..6").lo == -4);
  CHECK(abc::cli::parse_range("3").hi == 3);
}
