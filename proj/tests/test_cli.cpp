#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nsq/cli.hpp"

using namespace nsq;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_config(const RunConfig& config) {
  std::ostringstream out, err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig state_config(int n, double eta) {
  RunConfig c;
  c.command = Command::kState;
  c.n_total = n;
  c.eta = eta;
  return c;
}

}  // namespace

TEST_CASE("state command emits csv by default") {
  const RunResult r = run_config(state_config(8, 0.85));
  CHECK(r.code == kExitOk);
  CHECK(r.out.substr(0, 14) == "k,n_a,n_b,re,i");
  CHECK(r.out.find("\neta,") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("state command json carries meta and report") {
  RunConfig c = state_config(8, 0.85);
  c.format = OutputFormat::kJson;
  const RunResult r = run_config(c);
  REQUIRE(r.code == kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["tool"] == "nsqueeze");
  CHECK(j["meta"]["version"] == "0.1.0");
  CHECK(j["meta"]["command"] == "state");
  CHECK(j["meta"]["inputs"]["n_total"] == 8);
  CHECK(j["meta"]["eta_above_one"] == false);
  CHECK(j["amplitudes"].size() == 9);
  CHECK(j["report"]["delta_phi_sq"].get<double>() ==
        doctest::Approx(0.0432938880093799).epsilon(1e-10));
  // five even components are populated
  int nonzero = 0;
  for (const auto& a : j["amplitudes"])
    if (std::abs(a["re"].get<double>()) > 1e-12) ++nonzero;
  CHECK(nonzero == 5);
  CHECK(j["report"]["q"].get<double>() == doctest::Approx(0.51).epsilon(0.02));
}

TEST_CASE("source-parameter entry matches the eta entry") {
  RunConfig via_eta = state_config(4, 0.0);
  RunConfig via_source;
  via_source.command = Command::kState;
  via_source.n_total = 4;
  via_source.alpha = 0.2;
  via_source.gamma = 0.0;
  const RunResult a = run_config(via_eta);
  const RunResult b = run_config(via_source);
  CHECK(a.code == kExitOk);
  CHECK(b.code == kExitOk);
  CHECK(a.out == b.out);  // same state, same report
}

TEST_CASE("eta above one is accepted and flagged") {
  RunConfig c = state_config(8, 1.3);
  c.format = OutputFormat::kJson;
  const RunResult r = run_config(c);
  REQUIRE(r.code == kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["eta_above_one"] == true);
  CHECK(j["meta"].contains("warning"));
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("config validation rejects contradictory selections") {
  RunConfig both = state_config(8, 0.5);
  both.alpha = 0.3;
  both.gamma = 0.01;
  CHECK(run_config(both).code == kExitConfig);

  RunConfig neither;
  neither.command = Command::kReport;
  CHECK(run_config(neither).code == kExitConfig);

  RunConfig bad_n = state_config(0, 0.5);
  CHECK(run_config(bad_n).code == kExitConfig);
  bad_n = state_config(201, 0.5);
  CHECK(run_config(bad_n).code == kExitConfig);

  RunConfig bad_eta = state_config(4, 8.0);
  CHECK(run_config(bad_eta).code == kExitConfig);
  bad_eta = state_config(4, -0.5);
  CHECK(run_config(bad_eta).code == kExitConfig);

  RunConfig bad_gamma;
  bad_gamma.command = Command::kState;
  bad_gamma.alpha = 0.4;
  bad_gamma.gamma = 1.0;
  CHECK(run_config(bad_gamma).code == kExitConfig);
  bad_gamma.gamma = 0.01;
  bad_gamma.alpha = 0.0;
  CHECK(run_config(bad_gamma).code == kExitConfig);

  RunConfig bad_step;
  bad_step.command = Command::kEtaScan;
  bad_step.eta_step = 0.0;
  CHECK(run_config(bad_step).code == kExitConfig);

  RunConfig text_only = state_config(4, 0.2);
  text_only.command = Command::kReport;
  text_only.format = OutputFormat::kJson;
  CHECK(run_config(text_only).code == kExitConfig);

  const RunResult r = run_config(state_config(0, 0.5));
  CHECK(r.err.find("config error") != std::string::npos);
}

TEST_CASE("numerical domain failures exit with 1") {
  // N=2 at eta=2: the estimator slope <j1> vanishes identically
  const RunResult r = run_config(state_config(2, 2.0));
  CHECK(r.code == kExitNumeric);
  CHECK(r.err.find("numerical domain error") != std::string::npos);
}

TEST_CASE("eta scan payload has one row per grid point") {
  RunConfig c;
  c.command = Command::kEtaScan;
  c.n_total = 4;
  c.eta_min = 0.0;
  c.eta_max = 0.1;
  c.eta_step = 0.05;
  const RunResult r = run_config(c);
  REQUIRE(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);  // header + 3

  c.format = OutputFormat::kJson;
  const RunResult j = run_config(c);
  const nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["rows"].size() == 3);
  CHECK(parsed["meta"]["inputs"]["grid"]["eta_step"] == 0.05);
}

TEST_CASE("phase scan and table payloads") {
  RunConfig c;
  c.command = Command::kPhaseScan;
  c.n_total = 3;
  c.eta = 0.4;
  c.phi_bins = 8;
  c.format = OutputFormat::kJson;
  const RunResult r = run_config(c);
  REQUIRE(r.code == kExitOk);
  const nlohmann::json parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed["rows"].size() == 8);
  CHECK(parsed["rows"][0]["probabilities"].size() == 4);

  RunConfig t;
  t.command = Command::kTable1;
  const RunResult tr = run_config(t);
  REQUIRE(tr.code == kExitOk);
  CHECK(std::count(tr.out.begin(), tr.out.end(), '\n') == 19);
}

TEST_CASE("report is plain text with bounds and validity") {
  RunConfig c = state_config(8, 0.85);
  c.command = Command::kReport;
  const RunResult r = run_config(c);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("delta_phi_sq") != std::string::npos);
  CHECK(r.out.find("phase_error_floor") != std::string::npos);
  CHECK(r.out.find("approximation_valid") != std::string::npos);
  CHECK(r.out.find("no") != std::string::npos);  // 0.85 > 0.75 threshold
}

TEST_CASE("payload generation is deterministic") {
  RunConfig c;
  c.command = Command::kEtaScan;
  c.n_total = 8;
  c.eta_max = 0.5;
  c.eta_step = 0.01;
  CHECK(run_config(c).out == run_config(c).out);
  c.format = OutputFormat::kJson;
  CHECK(run_config(c).out == run_config(c).out);
}

TEST_CASE("output lands in files, honoring the directory variable") {
  const fs::path dir = fs::temp_directory_path() / "nsq_cli_test";
  fs::create_directories(dir);

  RunConfig c = state_config(4, 0.3);
  c.output_path = (dir / "direct.csv").string();
  CHECK(run_config(c).code == kExitOk);
  CHECK(fs::exists(dir / "direct.csv"));

  setenv("NSQUEEZE_OUTPUT_DIR", dir.c_str(), 1);
  RunConfig rel = state_config(4, 0.3);
  rel.output_path = "relative.csv";
  CHECK(run_config(rel).code == kExitOk);
  unsetenv("NSQUEEZE_OUTPUT_DIR");
  REQUIRE(fs::exists(dir / "relative.csv"));

  std::ifstream direct(dir / "direct.csv"), relative(dir / "relative.csv");
  std::stringstream da, ra;
  da << direct.rdbuf();
  ra << relative.rdbuf();
  CHECK(da.str() == ra.str());

  CHECK(resolve_output_path("") == "");
  CHECK(resolve_output_path("/abs/p.csv") == "/abs/p.csv");
  fs::remove_all(dir);
}

TEST_CASE("unwritable output paths are config errors") {
  RunConfig c = state_config(4, 0.3);
  c.output_path = "/nonexistent_dir_zz/x.csv";
  const RunResult r = run_config(c);
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("argv front end parses subcommands and flags") {
  const fs::path dir = fs::temp_directory_path() / "nsq_cli_argv";
  fs::create_directories(dir);
  const std::string out_file = (dir / "state.csv").string();

  const char* ok[] = {"nsqueeze", "state",       "--n", "4",
                      "--eta",    "0.5",         "-o",  out_file.c_str()};
  CHECK(main_cli(8, ok) == kExitOk);
  REQUIRE(fs::exists(out_file));
  std::ifstream in(out_file);
  std::string first_line;
  std::getline(in, first_line);
  CHECK(first_line == "k,n_a,n_b,re,im");

  const char* bad_flag[] = {"nsqueeze", "state", "--frequency", "3"};
  CHECK(main_cli(4, bad_flag) == kExitConfig);

  const char* no_sub[] = {"nsqueeze"};
  CHECK(main_cli(1, no_sub) == kExitConfig);

  const char* bad_value[] = {"nsqueeze", "state", "--n", "four"};
  CHECK(main_cli(4, bad_value) == kExitConfig);

  const char* bad_format[] = {"nsqueeze", "state", "--eta", "0.2",
                              "--format", "xml"};
  CHECK(main_cli(6, bad_format) == kExitConfig);
  fs::remove_all(dir);
}
