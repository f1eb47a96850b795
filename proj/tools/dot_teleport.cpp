// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// dot-teleport: command-line front end.
//
//   sweep      local-entanglement sweep of the 2-site half-filled chain (CSV/JSON)
//   weights    charge/spin ebit weights of the 2-site ground state vs u/t (CSV/JSON)
//   teleport   run the three-dot teleportation protocol (JSON report)
//   correlate  complement-sector correlations of an N-site half-filled chain (JSON)
//
// Exit codes: 0 success, 1 validation error, 2 numerical error (degenerate
// ground state). Every output artifact embeds its configuration.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dotsim/dotsim.hpp"

namespace {

using dotsim::Json;

/// "0.6", "-1.25e-3", "0.6+0.8j", "0.8j", "1-2i" -> complex. A trailing
/// i or j marks the imaginary part.
std::complex<double> parse_complex(const std::string& text) {
  const std::string err = "cannot parse complex amplitude '" + text + "'";
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw CLI::ValidationError(err);

  const auto read = [&](const std::string& token) {
    if (token.empty() || token == "+") return 1.0;
    if (token == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw CLI::ValidationError(err);
    return v;
  };

  try {
    if (s.back() == 'j' || s.back() == 'i') {
      s.pop_back();
      // split at the sign that separates real and imaginary parts, if any
      for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
          return {read(s.substr(0, k)), read(s.substr(k))};
      }
      return {0.0, read(s)};
    }
    std::size_t used = 0;
    const double re = std::stod(s, &used);
    if (used != s.size()) throw CLI::ValidationError(err);
    return {re, 0.0};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(err);
  } catch (const std::out_of_range&) {
    throw CLI::ValidationError(err);
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw CLI::ValidationError("cannot open output file '" + out_path + "'");
  file << content;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

struct SweepArgs {
  double u_min = -20.0, u_max = 20.0;
  int points = 401;
  std::uint64_t seed = 0;
  std::string out, format = "csv";
};

int cmd_sweep(const SweepArgs& args) {
  Json config{{"command", "sweep"},     {"u_min", args.u_min},
              {"u_max", args.u_max},    {"points", args.points},
              {"seed", args.seed},      {"out", args.out},
              {"format", args.format}};
  const auto rows =
      dotsim::entanglement_sweep(dotsim::linear_grid(args.u_min, args.u_max, args.points));
  if (args.format == "csv") {
    std::ostringstream os;
    dotsim::write_sweep_csv(os, config, rows);
    emit(args.out, os.str());
  } else {
    emit(args.out, render_json(dotsim::sweep_to_json(config, rows)));
  }
  return 0;
}

int cmd_weights(const SweepArgs& args) {
  Json config{{"command", "weights"},   {"u_min", args.u_min},
              {"u_max", args.u_max},    {"points", args.points},
              {"seed", args.seed},      {"out", args.out},
              {"format", args.format}};
  const auto rows =
      dotsim::ebit_weight_sweep(dotsim::linear_grid(args.u_min, args.u_max, args.points));
  if (args.format == "csv") {
    std::ostringstream os;
    dotsim::write_weights_csv(os, config, rows);
    emit(args.out, os.str());
  } else {
    emit(args.out, render_json(dotsim::weights_to_json(config, rows)));
  }
  return 0;
}

struct TeleportArgs {
  std::string channel;
  std::string alpha, beta;
  std::string ebit;
  long long trials = 4096;
  std::uint64_t seed = 0;
  std::string gate_form = "perm";
  std::string out, format = "json";
};

int cmd_teleport(const TeleportArgs& args) {
  Json config{{"command", "teleport"}, {"channel", args.channel},
              {"alpha", args.alpha},   {"beta", args.beta},
              {"ebit", args.ebit},     {"trials", args.trials},
              {"seed", args.seed},     {"gate_form", args.gate_form},
              {"out", args.out},       {"format", args.format}};
  if (args.format != "json")
    throw CLI::ValidationError("teleport reports are JSON only; use --format json");
  if (args.trials < 1) throw CLI::ValidationError("--trials must be >= 1");

  dotsim::QubitState qubit{parse_complex(args.alpha), parse_complex(args.beta)};
  const double n = qubit.norm_sq();
  if (std::abs(n - 1.0) >= 1e-6)
    throw CLI::ValidationError("qubit norm^2 = " + std::to_string(n) +
                               " is not within 1e-6 of 1");
  if (std::abs(n - 1.0) > 1e-12) {
    std::cerr << "warning: renormalizing qubit (norm^2 off by "
              << dotsim::format_significant(n - 1.0) << ")\n";
  }
  qubit = qubit.normalized();

  const auto report = dotsim::run_protocol(
      qubit, dotsim::parse_channel(args.channel), dotsim::EbitSpec::parse(args.ebit),
      args.trials, args.seed, dotsim::parse_gate_form(args.gate_form));
  emit(args.out, render_json(dotsim::teleport_report_to_json(config, report)));
  return 0;
}

struct CorrelateArgs {
  int sites = 4;
  double u = 0.0;
  int site = -1;  // default: last site
  std::uint64_t seed = 0;
  std::string out, format = "json";
};

int cmd_correlate(const CorrelateArgs& args) {
  const int site = args.site >= 0 ? args.site : args.sites - 1;
  Json config{{"command", "correlate"}, {"sites", args.sites}, {"u", args.u},
              {"site", site},           {"seed", args.seed},   {"out", args.out},
              {"format", args.format}};
  if (args.format != "json")
    throw CLI::ValidationError("correlation reports are JSON only; use --format json");
  if (args.sites < 2 || args.sites % 2 != 0)
    throw CLI::ValidationError("--sites must be even and >= 2 for half filling at Sz=0");
  if (site >= args.sites) throw CLI::ValidationError("--site must be below --sites");

  const auto basis = dotsim::SectorBasis::build(args.sites, args.sites, 0);
  const dotsim::HubbardParams params{args.sites, 1.0, args.u, dotsim::Boundary::open};
  const auto gs = dotsim::ground_state(dotsim::build_hamiltonian(params, basis));
  const auto report = dotsim::complement_correlation(gs.wf, site);
  emit(args.out, render_json(dotsim::correlation_report_to_json(config, report)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-diagonalization toolkit for 1D quantum-dot chains:\n"
               "local entanglement, ebit weights, and three-dot teleportation"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "local entanglement vs u/t (2 sites, half filled)");
  sweep->add_option("--u-min", sweep_args.u_min, "lower end of the u/t grid");
  sweep->add_option("--u-max", sweep_args.u_max, "upper end of the u/t grid");
  sweep->add_option("--points", sweep_args.points, "grid size (>= 2)");
  sweep->add_option("--seed", sweep_args.seed, "echoed into the config");
  sweep->add_option("--out", sweep_args.out, "output path (default stdout)");
  sweep->add_option("--format", sweep_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  SweepArgs weights_args;
  auto* weights = app.add_subcommand("weights", "charge/spin ebit weights vs u/t");
  weights->add_option("--u-min", weights_args.u_min, "lower end of the u/t grid");
  weights->add_option("--u-max", weights_args.u_max, "upper end of the u/t grid");
  weights->add_option("--points", weights_args.points, "grid size (>= 2)");
  weights->add_option("--seed", weights_args.seed, "echoed into the config");
  weights->add_option("--out", weights_args.out, "output path (default stdout)");
  weights->add_option("--format", weights_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  TeleportArgs tp_args;
  auto* teleport = app.add_subcommand("teleport", "run the three-dot protocol");
  teleport->add_option("--channel", tp_args.channel, "charge|spin")->required();
  teleport->add_option("--alpha", tp_args.alpha, "source amplitude of |up>, e.g. 0.6 or 0.6+0.8j")
      ->required();
  teleport->add_option("--beta", tp_args.beta, "source amplitude of |down>")->required();
  teleport->add_option("--ebit", tp_args.ebit, "beta0|beta1|ground:U")->required();
  teleport->add_option("--trials", tp_args.trials, "number of measurement shots");
  teleport->add_option("--seed", tp_args.seed, "random stream seed");
  teleport->add_option("--gate-form", tp_args.gate_form, "perm|exp")
      ->check(CLI::IsMember({"perm", "exp"}));
  teleport->add_option("--out", tp_args.out, "output path (default stdout)");
  teleport->add_option("--format", tp_args.format, "json");

  CorrelateArgs corr_args;
  auto* correlate =
      app.add_subcommand("correlate", "complement-sector correlation of one site");
  correlate->add_option("--sites", corr_args.sites, "chain length (even)")->required();
  correlate->add_option("--u", corr_args.u, "interaction u/t");
  correlate->add_option("--site", corr_args.site, "conditioning site (default: last)");
  correlate->add_option("--seed", corr_args.seed, "echoed into the config");
  correlate->add_option("--out", corr_args.out, "output path (default stdout)");
  correlate->add_option("--format", corr_args.format, "json");

  try {
    app.parse(argc, argv);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
    if (weights->parsed()) return cmd_weights(weights_args);
    if (teleport->parsed()) return cmd_teleport(tp_args);
    if (correlate->parsed()) return cmd_correlate(corr_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const dotsim::DegeneracyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dotsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
