// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dotsim/entanglement.hpp"
#include "dotsim/hubbard.hpp"
#include "dotsim/teleport.hpp"

namespace dotsim {

using Json = nlohmann::ordered_json;

/// 12 significant digits, locale-independent.
inline std::string format_significant(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Every emitted artifact starts with (CSV) or embeds (JSON) the run
/// configuration that produced it, so results stay reproducible from the
/// file alone.
inline void write_csv_config_line(std::ostream& os, const Json& config) {
  os << "# config: " << config.dump() << "\n";
}

inline void write_sweep_csv(std::ostream& os, const Json& config,
                            const std::vector<SweepPoint>& rows) {
  write_csv_config_line(os, config);
  os << "u_over_t,w,z,u_plus,u_minus,entropy_bits\n";
  for (const SweepPoint& r : rows)
    os << format_significant(r.u_over_t) << ',' << format_significant(r.coefficients.w)
       << ',' << format_significant(r.coefficients.z) << ','
       << format_significant(r.coefficients.u_plus) << ','
       << format_significant(r.coefficients.u_minus) << ','
       << format_significant(r.entropy_bits) << '\n';
}

inline Json sweep_to_json(const Json& config, const std::vector<SweepPoint>& rows) {
  Json out;
  out["config"] = config;
  out["rows"] = Json::array();
  for (const SweepPoint& r : rows)
    out["rows"].push_back({{"u_over_t", r.u_over_t},
                           {"w", r.coefficients.w},
                           {"z", r.coefficients.z},
                           {"u_plus", r.coefficients.u_plus},
                           {"u_minus", r.coefficients.u_minus},
                           {"entropy_bits", r.entropy_bits}});
  return out;
}

inline void write_weights_csv(std::ostream& os, const Json& config,
                              const std::vector<WeightsPoint>& rows) {
  write_csv_config_line(os, config);
  os << "u_over_t,a_mag,b_mag\n";
  for (const WeightsPoint& r : rows)
    os << format_significant(r.u_over_t) << ',' << format_significant(r.weights.a_mag)
       << ',' << format_significant(r.weights.b_mag) << '\n';
}

inline Json weights_to_json(const Json& config, const std::vector<WeightsPoint>& rows) {
  Json out;
  out["config"] = config;
  out["rows"] = Json::array();
  for (const WeightsPoint& r : rows)
    out["rows"].push_back({{"u_over_t", r.u_over_t},
                           {"a_mag", r.weights.a_mag},
                           {"b_mag", r.weights.b_mag}});
  return out;
}

inline Json teleport_report_to_json(const Json& config,
                                    const TeleportationReport& report) {
  Json out;
  out["config"] = config;
  out["channel"] = to_string(report.channel);
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["gate_form"] = to_string(report.gate_form);
  out["ebit"] = report.ebit.str();
  out["outcomes"] = Json::array();
  for (const OutcomeStats& o : report.outcomes)
    out["outcomes"].push_back({{"label", o.label},
                               {"heralded", o.heralded},
                               {"count", o.count},
                               {"frequency", o.frequency},
                               {"fidelity", o.fidelity}});
  out["heralded_success_rate"] = report.heralded_success_rate;
  if (report.ebit_weights)
    out["ebit_weights"] = {{"a_mag", report.ebit_weights->a_mag},
                           {"b_mag", report.ebit_weights->b_mag}};
  return out;
}

inline Json correlation_report_to_json(const Json& config,
                                       const CorrelationReport& report) {
  Json out;
  out["config"] = config;
  out["site"] = report.site;
  out["branches"] = Json::array();
  for (const CorrelationBranch& b : report.branches)
    out["branches"].push_back({{"local_state", to_string(b.local_state)},
                               {"probability", b.probability},
                               {"complement_electrons", b.complement_electrons},
                               {"complement_two_sz", b.complement_two_sz}});
  return out;
}

}  // namespace dotsim
