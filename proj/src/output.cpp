#include "nsq/output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace nsq {

namespace {

// Column set shared by the eta scan, the state dump and the report.
constexpr const char* kEtaScanHeader =
    "eta,j1_mean,dj2_sq,dj3_sq,delta_phi_sq,q,crb,squeeze_ratio,"
    "mean_pair_photons,c_n_sq,ratio_sq_pair";

void append_row(std::ostream& out, const EtaScanRow& r) {
  out << format_number(r.eta) << ',' << format_number(r.j1_mean) << ','
      << format_number(r.dj2_sq) << ',' << format_number(r.dj3_sq) << ','
      << format_number(r.delta_phi_sq) << ',' << format_number(r.q) << ','
      << format_number(r.crb) << ',' << format_number(r.squeeze_ratio) << ','
      << format_number(r.mean_pair_photons) << ','
      << format_number(r.c_n_sq) << ','
      << format_number(r.ratio_sq_pair) << '\n';
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  // to_chars is locale-independent; 12 significant digits round-trips
  // every quantity at well beyond its physical tolerance.
  auto res = std::to_chars(buf, buf + sizeof buf, v,
                           std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_eta_scan_csv(std::ostream& out,
                        const std::vector<EtaScanRow>& rows) {
  out << kEtaScanHeader << '\n';
  for (const EtaScanRow& r : rows) append_row(out, r);
}

void write_phase_scan_csv(std::ostream& out,
                          const std::vector<PhaseScanRow>& rows,
                          const Eigen::VectorXd& m_values) {
  out << "phi,mean_j2";
  for (int i = 0; i < m_values.size(); ++i)
    out << ",p_" << format_number(m_values[i]);
  out << '\n';
  for (const PhaseScanRow& r : rows) {
    out << format_number(r.phi) << ',' << format_number(r.mean_j2);
    for (int i = 0; i < r.probabilities.size(); ++i)
      out << ',' << format_number(r.probabilities[i]);
    out << '\n';
  }
}

void write_table1_csv(std::ostream& out,
                      const std::vector<Table1Entry>& rows) {
  out << "n,eta,ratio_sq_pair,n_delta_phi_sq\n";
  for (const Table1Entry& r : rows) {
    out << r.n_total << ',' << format_number(r.eta) << ','
        << format_number(r.ratio_sq_pair) << ','
        << format_number(r.n_delta_phi_sq) << '\n';
  }
}

void write_state_csv(std::ostream& out, const NPhotonState& state,
                     const EtaScanRow& row) {
  out << "k,n_a,n_b,re,im\n";
  const int n = state.n_total;
  for (int k = 0; k <= n; ++k) {
    out << k << ',' << (n - k) << ',' << k << ','
        << format_number(state.amps[k].real()) << ','
        << format_number(state.amps[k].imag()) << '\n';
  }
  out << '\n' << kEtaScanHeader << '\n';
  append_row(out, row);
}

nlohmann::ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::ordered_json row_json(const EtaScanRow& r) {
  nlohmann::ordered_json j;
  j["eta"] = json_number(r.eta);
  j["j1_mean"] = json_number(r.j1_mean);
  j["dj2_sq"] = json_number(r.dj2_sq);
  j["dj3_sq"] = json_number(r.dj3_sq);
  j["delta_phi_sq"] = json_number(r.delta_phi_sq);
  j["q"] = json_number(r.q);
  j["crb"] = json_number(r.crb);
  j["squeeze_ratio"] = json_number(r.squeeze_ratio);
  j["mean_pair_photons"] = json_number(r.mean_pair_photons);
  j["c_n_sq"] = json_number(r.c_n_sq);
  j["ratio_sq_pair"] = json_number(r.ratio_sq_pair);
  return j;
}

nlohmann::ordered_json eta_scan_rows_json(
    const std::vector<EtaScanRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const EtaScanRow& r : rows) arr.push_back(row_json(r));
  return arr;
}

nlohmann::ordered_json phase_scan_rows_json(
    const std::vector<PhaseScanRow>& rows, const Eigen::VectorXd& m_values) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const PhaseScanRow& r : rows) {
    nlohmann::ordered_json j;
    j["phi"] = json_number(r.phi);
    j["mean_j2"] = json_number(r.mean_j2);
    nlohmann::ordered_json probs = nlohmann::ordered_json::array();
    for (int i = 0; i < r.probabilities.size(); ++i) {
      nlohmann::ordered_json p;
      p["m"] = json_number(m_values[i]);
      p["p"] = json_number(r.probabilities[i]);
      probs.push_back(p);
    }
    j["probabilities"] = probs;
    arr.push_back(j);
  }
  return arr;
}

nlohmann::ordered_json table1_rows_json(const std::vector<Table1Entry>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Table1Entry& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n_total;
    j["eta"] = json_number(r.eta);
    j["ratio_sq_pair"] = json_number(r.ratio_sq_pair);
    j["n_delta_phi_sq"] = json_number(r.n_delta_phi_sq);
    arr.push_back(j);
  }
  return arr;
}

nlohmann::ordered_json state_json(const NPhotonState& state,
                                  const EtaScanRow& row) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json amps = nlohmann::ordered_json::array();
  const int n = state.n_total;
  for (int k = 0; k <= n; ++k) {
    nlohmann::ordered_json a;
    a["k"] = k;
    a["n_a"] = n - k;
    a["n_b"] = k;
    a["re"] = json_number(state.amps[k].real());
    a["im"] = json_number(state.amps[k].imag());
    amps.push_back(a);
  }
  j["amplitudes"] = amps;
  j["report"] = row_json(row);
  return j;
}

}  // namespace nsq
