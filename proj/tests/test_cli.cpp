#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "landau/cli/commands.hpp"
#include "landau/cli/run_record.hpp"

using namespace landau::cli;
using nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "landau");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ordered_json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Result r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  return ordered_json::parse(r.out);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cell += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

std::string temp_path(const std::string& name) { return "landau_test_" + name; }

}  // namespace

TEST_CASE("run record round trip") {
  RunRecord r;
  r.command = "groundstate";
  r.version = version();
  r.inputs.set("nu", 0.1).set("B", 1e-300).set("ell", 3).set("label", "a,\"b\"");
  r.outputs.set("lambda", 0.7063625618365809).set("degenerate", false).set("tiny", 5e-324).set("big", 1.7e308);
  r.config.set("residual_tol", 1e-10).set("seed", std::int64_t{1} << 60);
  const RunRecord back = RunRecord::from_json(ordered_json::parse(r.to_json().dump()));
  CHECK(back == r);

  r.outputs.set("nan", NAN);
  CHECK_THROWS(r.to_json());
  CHECK_THROWS(RunRecord::from_json(ordered_json::parse(R"({"command":"x"})")));
}

TEST_CASE("number and CSV formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(0.7063625618365809)) == 0.7063625618365809);
  CHECK(csv_cell("plain") == "plain");
  CHECK(csv_cell("a,b") == "\"a,b\"");
  CHECK(csv_cell("say \"x\"") == "\"say \"\"x\"\"\"");
}

TEST_CASE("groundstate command") {
  const ordered_json j = invoke_json({"groundstate", "--nu", "0.5", "--B", "1"});
  CHECK(j["command"] == "groundstate");
  const double lambda = j["outputs"]["lambda"];
  CHECK(lambda > -1);
  CHECK(lambda < 1);
  CHECK(j["outputs"].contains("residual"));
  CHECK(j["outputs"].contains("L"));
  CHECK(j["outputs"].contains("n"));

  const ordered_json d = invoke_json({"groundstate", "--nu", "0.5", "--B", "1e9"});
  CHECK(d["outputs"]["degenerate"] == true);
  CHECK(d["outputs"]["lambda"] == -1.0);

  CHECK(invoke({"groundstate", "--nu", "1.2", "--B", "1"}).code == kInvalidInput);
  CHECK(invoke({"groundstate", "--nu", "0.5"}).code == kInvalidInput);
  CHECK(invoke({"nonsense"}).code == kInvalidInput);

  const ordered_json g = invoke_json({"groundstate", "--nu", "0.5", "--B", "1", "--grid-n", "801", "--tol", "1e-11"});
  CHECK(g["config"]["min_coarse_n"] == 801);
  CHECK(g["outputs"]["lambda"].get<double>() == doctest::Approx(lambda).epsilon(1e-8));
}

TEST_CASE("critfield command") {
  const ordered_json z92 = invoke_json({"critfield", "--Z", "92", "--tesla"});
  const double log10T = z92["outputs"]["B_L_log10_tesla"];
  CHECK(std::isfinite(log10T));
  MESSAGE("Z = 92: log10 B_L [T] = " << log10T << " (quoted 11.7)");

  const ordered_json both = invoke_json({"critfield", "--nu", "0.5", "--method", "both"});
  CHECK(both["outputs"]["rel_discrepancy"].get<double>() < 1e-3);

  const ordered_json asym = invoke_json({"critfield", "--nu", "0.05", "--method", "asymptotic"});
  CHECK(asym["outputs"]["log_B_L"].get<double>() == doctest::Approx(std::log(0.01) + std::acos(-1.0) / 0.05));

  CHECK(invoke({"critfield", "--nu", "0.005"}).code == kInvalidInput);
  const Result direct = invoke({"critfield", "--nu", "0.1", "--method", "direct"});
  CHECK(direct.code == kInvalidInput);
  CHECK(direct.err.find("schrodinger") != std::string::npos);
  CHECK(invoke({"critfield", "--nu", "0.5", "--Z", "40"}).code == kInvalidInput);
  CHECK(invoke({"critfield"}).code == kInvalidInput);
}

TEST_CASE("bounds and sandwich commands") {
  const ordered_json z40 = invoke_json({"bounds", "--Z", "40", "--tesla"});
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", z40["outputs"]["lower_tesla"].get<double>());
  CHECK(std::string(buf) == "4.1e+10");

  const ordered_json b = invoke_json({"bounds", "--nu", "0.9"});
  CHECK(b["outputs"]["upper"].get<double>() == doctest::Approx(247.7).epsilon(1e-3));

  const ordered_json s = invoke_json({"sandwich", "--nu", "0.04", "--tesla"});
  CHECK(s["outputs"]["lower_logB"].get<double>() <= s["outputs"]["upper_logB"].get<double>());
  CHECK(s["outputs"].contains("lower_source"));
  CHECK(invoke({"sandwich", "--nu", "0.1"}).code == kInvalidInput);
}

TEST_CASE("sweeps") {
  const Result delta = invoke({"sweep", "--param", "delta", "--values", "0.1,0.05,0.02"});
  REQUIRE(delta.code == 0);
  const auto rows = parse_csv(delta.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"index", "delta", "method", "log_BL", "delta_logBL", "iterations", "L",
                                            "n", "status"});
  const std::size_t c = column(rows[0], "delta_logBL");
  double previous = INFINITY;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double gap = std::fabs(std::stod(rows[i][c]) - std::acos(-1.0));
    CHECK(gap < previous);
    previous = gap;
  }

  const Result B = invoke({"sweep", "--param", "B", "--nu", "0.5", "--from", "0.5", "--to", "20", "--points", "4",
                           "--log", "--threads", "2"});
  REQUIRE(B.code == 0);
  const auto brows = parse_csv(B.out);
  const std::size_t lc = column(brows[0], "lambda");
  for (std::size_t i = 2; i < brows.size(); ++i) CHECK(std::stod(brows[i][lc]) <= std::stod(brows[i - 1][lc]));

  const Result serial = invoke({"sweep", "--param", "B", "--nu", "0.5", "--from", "0.5", "--to", "20", "--points",
                                "4", "--log", "--threads", "1"});
  CHECK(serial.out == B.out);
}

TEST_CASE("sweep files: CSV and JSON carry the same values") {
  const std::string csv_path = temp_path("sweep.csv"), json_path = temp_path("sweep.json");
  const std::vector<std::string> base{"sweep", "--param", "nu", "--B", "1", "--from", "0.2", "--to", "0.4",
                                      "--points", "2"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  };
  REQUIRE(with({"--out", csv_path}).code == 0);
  REQUIRE(with({"--out", json_path, "--format", "json"}).code == 0);

  std::ifstream csv_in(csv_path), json_in(json_path);
  std::stringstream csv_text;
  csv_text << csv_in.rdbuf();
  const auto rows = parse_csv(csv_text.str());
  const ordered_json j = ordered_json::parse(json_in);
  REQUIRE(rows.size() == 3);
  REQUIRE(j["rows"].size() == 2);
  for (std::size_t r = 0; r < 2; ++r) {
    const auto& rec = j["rows"][r];
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
      const std::string& name = rows[0][c];
      const ordered_json& v = rec["inputs"].contains(name) ? rec["inputs"][name] : rec["outputs"][name];
      if (v.is_number_float()) {
        CHECK(std::stod(rows[r + 1][c]) == v.get<double>());
      } else if (v.is_string()) {
        CHECK(rows[r + 1][c] == v.get<std::string>());
      } else {
        CHECK(rows[r + 1][c] == v.dump());
      }
    }
  }
  std::remove(csv_path.c_str());
  std::remove(json_path.c_str());

  CHECK(with({"--out", "/nonexistent-dir/x.csv"}).code == kIoError);
  CHECK(invoke({"sweep", "--param", "nu", "--from", "0.2", "--to", "0.4", "--points", "1"}).code == kInvalidInput);
}

TEST_CASE("sweep failures are recorded per row") {
  const Result mixed = invoke({"sweep", "--param", "nu", "--values", "0.5,1.4"});
  CHECK(mixed.code == 0);
  const auto rows = parse_csv(mixed.out);
  const std::size_t s = column(rows[0], "status");
  CHECK(rows[1][s] == "ok");
  CHECK(rows[2][s].rfind("error:", 0) == 0);

  CHECK(invoke({"sweep", "--param", "nu", "--values", "1.2,1.4"}).code == kNonConvergence);
}

TEST_CASE("config precedence: defaults < file < flags") {
  const std::string path = temp_path("config.json");
  {
    std::ofstream f(path);
    f << R"({"alpha": 0.0072973525693, "tesla_unit": 4.414e9, "groundstate": {"residual_tol": 1e-11}})";
  }
  const ordered_json a = invoke_json({"bounds", "--Z", "40", "--config", path});
  CHECK(a["config"]["alpha"] == 0.0072973525693);
  CHECK(a["config"]["tesla_unit"] == 4.414e9);
  const ordered_json b = invoke_json({"bounds", "--Z", "40", "--config", path, "--tesla-unit", "4.4e9"});
  CHECK(b["config"]["tesla_unit"] == 4.4e9);
  CHECK(b["config"]["alpha"] == 0.0072973525693);
  const ordered_json g = invoke_json({"groundstate", "--nu", "0.5", "--B", "1", "--config", path});
  CHECK(g["config"]["residual_tol"] == 1e-11);

  {
    std::ofstream f(path);
    f << R"({"alpah": 0.007})";
  }
  CHECK(invoke({"bounds", "--nu", "0.5", "--config", path}).code == kInvalidInput);
  std::remove(path.c_str());
  CHECK(invoke({"bounds", "--nu", "0.5", "--config", path}).code == kInvalidInput);
  CHECK(invoke({"bounds", "--nu", "0.5", "--alpha", "-1"}).code == kInvalidInput);
}

TEST_CASE("identical inputs give identical bytes") {
  const auto a = invoke({"critfield", "--nu", "0.3", "--json"});
  const auto b = invoke({"critfield", "--nu", "0.3", "--json"});
  CHECK(a.out == b.out);
}

TEST_CASE("verify quick: all hard criteria, deterministic report") {
  const Result a = invoke({"verify", "--level", "quick", "--seed", "7"});
  CHECK(a.code == 0);
  for (int id = 1; id <= 15; ++id) {
    char tag[8];
    std::snprintf(tag, sizeof tag, "[%2d]", id);
    CHECK(a.out.find(tag) != std::string::npos);
  }
  const Result b = invoke({"verify", "--level", "quick", "--seed", "7"});
  CHECK(a.out == b.out);
}

TEST_CASE("installed binary exit codes") {
  const std::string exe = LANDAU_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("groundstate --nu 0.5 --B 1") == 0);
  CHECK(status("groundstate --nu 1.2 --B 1") == 2);
  CHECK(status("--version") == 0);
}
