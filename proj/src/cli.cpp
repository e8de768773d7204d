#include "nsq/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsq/errors.hpp"
#include "nsq/output.hpp"
#include "nsq/version.hpp"

namespace nsq {

namespace {

using nlohmann::ordered_json;

const char* command_name(Command c) {
  switch (c) {
    case Command::kState: return "state";
    case Command::kEtaScan: return "eta-scan";
    case Command::kPhaseScan: return "phase-scan";
    case Command::kTable1: return "table1";
    case Command::kReport: return "report";
  }
  return "?";
}

bool needs_eta(Command c) {
  return c == Command::kState || c == Command::kPhaseScan ||
         c == Command::kReport;
}

// Effective eta for the commands that take one; assumes validate_config
// has already accepted the combination.
double effective_eta(const RunConfig& c) {
  if (c.eta) return *c.eta;
  return eta_from_inputs(*c.alpha, *c.gamma, c.n_total);
}

std::vector<double> table_etas_or_default(const RunConfig& c) {
  if (!c.table_etas.empty()) return c.table_etas;
  return {1.0 / 3.0, 0.5, 1.0};
}

ordered_json meta_json(const RunConfig& c,
                       const std::optional<double>& eta_eff) {
  ordered_json meta;
  meta["tool"] = kToolName;
  meta["version"] = kVersion;
  meta["command"] = command_name(c.command);
  ordered_json inputs;
  if (c.command != Command::kTable1) inputs["n_total"] = c.n_total;
  if (c.eta) inputs["eta"] = *c.eta;
  if (c.alpha) inputs["alpha"] = *c.alpha;
  if (c.gamma) inputs["gamma"] = *c.gamma;
  if (eta_eff) inputs["eta_effective"] = *eta_eff;
  switch (c.command) {
    case Command::kEtaScan: {
      ordered_json grid;
      grid["eta_min"] = c.eta_min;
      grid["eta_max"] = c.eta_max;
      grid["eta_step"] = c.eta_step;
      inputs["grid"] = grid;
      break;
    }
    case Command::kPhaseScan:
      inputs["phi_bins"] = c.phi_bins;
      break;
    case Command::kTable1: {
      inputs["etas"] = table_etas_or_default(c);
      inputs["n_min"] = c.table_n_min;
      inputs["n_max"] = c.table_n_max;
      break;
    }
    default:
      break;
  }
  meta["inputs"] = inputs;
  if (eta_eff) {
    const bool above_one = *eta_eff > 1.0;
    meta["eta_above_one"] = above_one;
    if (above_one)
      meta["warning"] =
          "eta > 1: the quadrature estimator is no longer near-optimal "
          "and the small-admixture predictions do not apply";
  }
  return meta;
}

void warn_eta(std::ostream& err, double eta) {
  if (eta > 1.0)
    err << "warning: eta = " << format_number(eta)
        << " exceeds 1; squeezing approximations are out of range\n";
}

void print_kv(std::ostream& out, const char* key, const std::string& value) {
  out << std::left << std::setw(26) << key << value << '\n';
}

void render_report(std::ostream& out, const RunConfig& c, double eta) {
  const JOperatorSet ops = build_operators(c.n_total);
  const EtaScanRow row = eta_row(c.n_total, eta, ops);
  const SqueezingPredictions pred = squeezing_predictions(c.n_total, eta);

  out << "phase sensitivity of the " << c.n_total
      << "-photon interferometric state\n\n";
  print_kv(out, "n_total", std::to_string(c.n_total));
  print_kv(out, "eta", format_number(eta));
  if (c.alpha) print_kv(out, "alpha", format_number(*c.alpha));
  if (c.gamma) print_kv(out, "gamma", format_number(*c.gamma));
  out << '\n';
  print_kv(out, "j1_mean", format_number(row.j1_mean));
  print_kv(out, "dj2_sq", format_number(row.dj2_sq));
  print_kv(out, "dj3_sq", format_number(row.dj3_sq));
  print_kv(out, "delta_phi_sq", format_number(row.delta_phi_sq));
  print_kv(out, "n_delta_phi_sq", format_number(c.n_total * row.delta_phi_sq));
  print_kv(out, "sql (1/N)", format_number(1.0 / c.n_total));
  print_kv(out, "heisenberg (1/N^2)",
           format_number(1.0 / (static_cast<double>(c.n_total) * c.n_total)));
  print_kv(out, "q", format_number(row.q));
  print_kv(out, "crb", format_number(row.crb));
  print_kv(out, "squeeze_ratio", format_number(row.squeeze_ratio));
  print_kv(out, "mean_pair_photons", format_number(row.mean_pair_photons));
  print_kv(out, "c_n_sq", format_number(row.c_n_sq));
  print_kv(out, "ratio_sq_pair", format_number(row.ratio_sq_pair));
  out << '\n';
  print_kv(out, "predicted_squeeze_ratio",
           format_number(pred.predicted_squeeze_ratio));
  print_kv(out, "predicted_pair_photons",
           format_number(pred.predicted_pair_photons));
  print_kv(out, "approximation_valid", pred.approximation_valid ? "yes" : "no");
  print_kv(out, "pair_photon_bound", format_number(pred.pair_photon_bound));
  print_kv(out, "phase_error_floor", format_number(pred.phase_error_floor));
  if (c.alpha && c.gamma) {
    const GenerationStats stats =
        generation_stats(*c.alpha, *c.gamma, c.n_total);
    out << '\n';
    print_kv(out, "p_sq", format_number(stats.p_sq));
    print_kv(out, "p_pair", format_number(stats.p_pair));
  }
  if (eta > 1.0)
    out << "\nnote: eta > 1, the quadrature estimator is no longer "
           "near-optimal here\n";
}

std::string render_payload(const RunConfig& c, std::ostream& err) {
  std::ostringstream out;
  switch (c.command) {
    case Command::kState: {
      const double eta = effective_eta(c);
      warn_eta(err, eta);
      const JOperatorSet ops = build_operators(c.n_total);
      const NPhotonState state = eta_state(c.n_total, eta);
      const EtaScanRow row = eta_row(c.n_total, eta, ops);
      if (c.format == OutputFormat::kCsv) {
        write_state_csv(out, state, row);
      } else {
        ordered_json j;
        j["meta"] = meta_json(c, eta);
        const ordered_json body = state_json(state, row);
        j["amplitudes"] = body["amplitudes"];
        j["report"] = body["report"];
        out << j.dump(2) << '\n';
      }
      break;
    }
    case Command::kEtaScan: {
      const std::vector<double> grid =
          linear_grid(c.eta_min, c.eta_max, c.eta_step);
      const std::vector<EtaScanRow> rows = eta_scan(c.n_total, grid);
      if (c.format == OutputFormat::kCsv) {
        write_eta_scan_csv(out, rows);
      } else {
        ordered_json j;
        j["meta"] = meta_json(c, std::nullopt);
        j["rows"] = eta_scan_rows_json(rows);
        out << j.dump(2) << '\n';
      }
      break;
    }
    case Command::kPhaseScan: {
      const double eta = effective_eta(c);
      warn_eta(err, eta);
      const std::vector<PhaseScanRow> rows =
          phase_scan(c.n_total, eta, default_phase_grid(c.phi_bins));
      Eigen::VectorXd m_values(c.n_total + 1);
      for (int i = 0; i <= c.n_total; ++i)
        m_values[i] = -0.5 * c.n_total + i;
      if (c.format == OutputFormat::kCsv) {
        write_phase_scan_csv(out, rows, m_values);
      } else {
        ordered_json j;
        j["meta"] = meta_json(c, eta);
        j["rows"] = phase_scan_rows_json(rows, m_values);
        out << j.dump(2) << '\n';
      }
      break;
    }
    case Command::kTable1: {
      std::vector<int> n_values;
      for (int n = c.table_n_min; n <= c.table_n_max; ++n)
        n_values.push_back(n);
      const std::vector<Table1Entry> rows =
          table1(table_etas_or_default(c), n_values);
      if (c.format == OutputFormat::kCsv) {
        write_table1_csv(out, rows);
      } else {
        ordered_json j;
        j["meta"] = meta_json(c, std::nullopt);
        j["rows"] = table1_rows_json(rows);
        out << j.dump(2) << '\n';
      }
      break;
    }
    case Command::kReport: {
      const double eta = effective_eta(c);
      warn_eta(err, eta);
      render_report(out, c, eta);
      break;
    }
  }
  return out.str();
}

}  // namespace

std::optional<std::string> validate_config(const RunConfig& c) {
  if (c.command != Command::kTable1) {
    if (c.n_total < 1 || c.n_total > kSectorCeiling)
      return "n_total must lie in [1, 200]";
  }
  if (needs_eta(c.command)) {
    const bool has_source = c.alpha.has_value() || c.gamma.has_value();
    if (c.eta && has_source)
      return "give either eta or the (alpha, gamma) pair, not both";
    if (!c.eta) {
      if (!(c.alpha && c.gamma))
        return "state selection needs eta or both alpha and gamma";
      if (!(*c.alpha > 0.0)) return "alpha must be > 0";
      if (!(*c.gamma >= 0.0 && *c.gamma < 1.0))
        return "gamma must lie in [0, 1)";
      const double eta = c.n_total * *c.gamma / (*c.alpha * *c.alpha);
      if (eta >= 2.0 * c.n_total)
        return "implied eta reaches 2 n_total; expansion undefined";
    } else {
      if (!std::isfinite(*c.eta) || *c.eta < 0.0)
        return "eta must be finite and >= 0";
      if (*c.eta >= 2.0 * c.n_total)
        return "eta must stay below 2 n_total";
    }
  }
  if (c.command == Command::kEtaScan) {
    if (c.eta || c.alpha || c.gamma)
      return "eta-scan takes a grid, not a single eta or source pair";
    if (c.eta_min < 0.0) return "eta-min must be >= 0";
    if (!(c.eta_step > 0.0)) return "eta-step must be > 0";
    if (c.eta_max < c.eta_min) return "eta-max must be >= eta-min";
    if (c.eta_max >= 2.0 * c.n_total)
      return "eta-max must stay below 2 n_total";
  }
  if (c.command == Command::kPhaseScan && c.phi_bins < 1)
    return "phi-bins must be >= 1";
  if (c.command == Command::kTable1) {
    if (c.table_n_min < 2) return "table n range starts at 2";
    if (c.table_n_max > kSectorCeiling) return "table n range tops out at 200";
    if (c.table_n_min > c.table_n_max) return "table n range is empty";
    for (double eta : c.table_etas) {
      if (!(eta > 0.0) || !std::isfinite(eta))
        return "table etas must be finite and > 0";
      if (eta >= 2.0 * c.table_n_min)
        return "table etas must stay below 2 n for every row";
    }
  }
  if (c.command == Command::kReport && c.format == OutputFormat::kJson)
    return "report is plain text; it has no json form";
  return std::nullopt;
}

std::string resolve_output_path(const std::string& path) {
  if (path.empty()) return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  const char* dir = std::getenv("NSQUEEZE_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  return (std::filesystem::path(dir) / p).string();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (const auto problem = validate_config(config)) {
    err << "config error: " << *problem << '\n';
    return kExitConfig;
  }
  std::string payload;
  try {
    payload = render_payload(config, err);
  } catch (const numeric_error& e) {
    err << "numerical domain error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::domain_error& e) {
    err << "numerical domain error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    // Anything the validator missed still counts as a configuration
    // problem, not a numerical one.
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  const std::string path = resolve_output_path(config.output_path);
  if (path.empty()) {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "config error: cannot open output file: " << path << '\n';
    return kExitConfig;
  }
  file << payload;
  file.close();
  if (!file) {
    err << "config error: failed writing output file: " << path << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

int main_cli(int argc, const char* const* argv) {
  CLI::App app{"N-photon interferometric squeezing calculator"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";

  const auto add_common = [&](CLI::App* sub, bool with_n, bool with_format) {
    if (with_n)
      sub->add_option("-n,--n", config.n_total, "photon sector size")
          ->capture_default_str();
    sub->add_option("-o,--output", config.output_path,
                    "output file (stdout when omitted; relative paths land "
                    "in $NSQUEEZE_OUTPUT_DIR when set)");
    if (with_format)
      sub->add_option("--format", format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}))
          ->capture_default_str();
  };
  const auto add_state_selection = [&](CLI::App* sub) {
    sub->add_option("--eta", config.eta, "pair admixture eta = N gamma / alpha^2");
    sub->add_option("--alpha", config.alpha, "coherent amplitude (with --gamma)");
    sub->add_option("--gamma", config.gamma, "squeezing parameter (with --alpha)");
  };

  CLI::App* state = app.add_subcommand(
      "state", "amplitudes and sensitivity of one sector state");
  add_common(state, true, true);
  add_state_selection(state);

  CLI::App* escan = app.add_subcommand(
      "eta-scan", "sensitivity metrics over an eta grid");
  add_common(escan, true, true);
  escan->add_option("--eta-min", config.eta_min, "grid start")
      ->capture_default_str();
  escan->add_option("--eta-max", config.eta_max, "grid end (inclusive)")
      ->capture_default_str();
  escan->add_option("--eta-step", config.eta_step, "grid step")
      ->capture_default_str();

  CLI::App* pscan = app.add_subcommand(
      "phase-scan", "output photon-difference distribution vs phase");
  add_common(pscan, true, true);
  add_state_selection(pscan);
  pscan->add_option("--phi-bins", config.phi_bins,
                    "equally spaced phases covering [0, 2pi)")
      ->capture_default_str();

  CLI::App* tbl = app.add_subcommand(
      "table1", "generation-odds table over (n, eta)");
  add_common(tbl, false, true);
  tbl->add_option("--table-eta", config.table_etas,
                  "eta column values (repeatable; default 1/3 1/2 1)");
  tbl->add_option("--n-min", config.table_n_min, "first sector size")
      ->capture_default_str();
  tbl->add_option("--n-max", config.table_n_max, "last sector size")
      ->capture_default_str();

  CLI::App* rep = app.add_subcommand(
      "report", "plain-text summary for one state");
  add_common(rep, true, false);
  add_state_selection(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (app.got_subcommand(state)) config.command = Command::kState;
  else if (app.got_subcommand(escan)) config.command = Command::kEtaScan;
  else if (app.got_subcommand(pscan)) config.command = Command::kPhaseScan;
  else if (app.got_subcommand(tbl)) config.command = Command::kTable1;
  else config.command = Command::kReport;
  config.format = (format == "json") ? OutputFormat::kJson : OutputFormat::kCsv;

  return run(config, std::cout, std::cerr);
}

}  // namespace nsq
