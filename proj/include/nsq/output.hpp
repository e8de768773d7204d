#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsq/scan.hpp"

namespace nsq {

// Locale-free shortest-faithful text for a double at 12 significant
// digits. Infinities come out as "inf" / "-inf", NaN as "nan".
std::string format_number(double v);

// CSV writers. Headers are fixed, rows are one line each, the final line
// is newline-terminated. All numbers go through format_number so output
// is byte-stable across runs and locales.
void write_eta_scan_csv(std::ostream& out, const std::vector<EtaScanRow>& rows);
void write_phase_scan_csv(std::ostream& out,
                          const std::vector<PhaseScanRow>& rows,
                          const Eigen::VectorXd& m_values);
void write_table1_csv(std::ostream& out, const std::vector<Table1Entry>& rows);

// Single-state dump: amplitude block (k, n_a, n_b, re, im), blank line,
// then the sensitivity row in eta-scan column order.
void write_state_csv(std::ostream& out, const NPhotonState& state,
                     const EtaScanRow& row);

// JSON row arrays; the CLI wraps them with a meta object. Numbers are
// emitted as JSON doubles at full round-trip precision; infinities, which
// JSON cannot carry, become null.
nlohmann::ordered_json eta_scan_rows_json(const std::vector<EtaScanRow>& rows);
nlohmann::ordered_json phase_scan_rows_json(const std::vector<PhaseScanRow>& rows,
                                            const Eigen::VectorXd& m_values);
nlohmann::ordered_json table1_rows_json(const std::vector<Table1Entry>& rows);
nlohmann::ordered_json state_json(const NPhotonState& state,
                                  const EtaScanRow& row);
nlohmann::ordered_json row_json(const EtaScanRow& row);

// null for non-finite values, the plain double otherwise.
nlohmann::ordered_json json_number(double v);

}  // namespace nsq
