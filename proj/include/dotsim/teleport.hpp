// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dotsim/errors.hpp"
#include "dotsim/fock.hpp"
#include "dotsim/hubbard.hpp"

// Three-dot teleportation over the charge or spin entanglement channel.
//
// Protocol states live in the occupation-label space of the dots A, C, B:
// a dot's 2-bit value is (n_up << 1) | n_down, a full label packs them as
// index = (a << 4) | (c << 2) | b, and labels are written n_up-first, so
// e.g. "1011" is A=|10⟩, C=|11⟩. Labels are hard-core product states:
// gates and measurements act dot-locally without fermionic exchange
// signs. label_sign() converts amplitudes between this convention and the
// strictly ordered fermionic basis of fock.hpp; observables agree either
// way, which the tests check.

namespace dotsim {

enum class Channel { charge, spin };
enum class GateForm { permutation, exponential };

inline const char* to_string(Channel c) {
  return c == Channel::charge ? "charge" : "spin";
}
inline const char* to_string(GateForm f) {
  return f == GateForm::permutation ? "perm" : "exp";
}

inline Channel parse_channel(const std::string& s) {
  if (s == "charge") return Channel::charge;
  if (s == "spin") return Channel::spin;
  throw std::invalid_argument("unknown channel '" + s + "' (want charge|spin)");
}
inline GateForm parse_gate_form(const std::string& s) {
  if (s == "perm") return GateForm::permutation;
  if (s == "exp") return GateForm::exponential;
  throw std::invalid_argument("unknown gate form '" + s + "' (want perm|exp)");
}

/// alpha|↑⟩ + beta|↓⟩ on the source dot.
struct QubitState {
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};

  double norm_sq() const { return std::norm(alpha) + std::norm(beta); }
  bool is_normalized(double tol = kNormTolerance) const {
    return std::abs(norm_sq() - 1.0) <= tol;
  }
  QubitState normalized() const {
    const double n = std::sqrt(norm_sq());
    if (n <= 0.0) throw std::invalid_argument("QubitState: zero amplitudes");
    return QubitState{alpha / n, beta / n};
  }
};

/// |<q1|q2>|^2.
inline double fidelity(const QubitState& q1, const QubitState& q2) {
  return std::norm(std::conj(q1.alpha) * q2.alpha + std::conj(q1.beta) * q2.beta);
}

/// Which pair of dot-B labels carries the decoded qubit. The charge
/// channel writes the qubit onto double/zero occupation, the spin channel
/// onto single-electron spin up/down.
struct LogicalEncoding {
  Channel channel = Channel::charge;
  int up_ket = 0b11;    ///< image of |↑⟩ as a 2-bit dot label
  int down_ket = 0b00;  ///< image of |↓⟩
};

inline LogicalEncoding logical_encoding(Channel channel) {
  if (channel == Channel::charge) return {Channel::charge, 0b11, 0b00};
  return {Channel::spin, 0b10, 0b01};
}

/// The dot-C label pair flipped by the channel's C-NOT.
inline std::pair<int, int> channel_pair(Channel channel) {
  return channel == Channel::charge ? std::pair{0b00, 0b11} : std::pair{0b10, 0b01};
}

/// Measurement outcomes (n_A↑ n_A↓ n_C↑ n_C↓) that herald a successful
/// use of the channel's ebit, in ascending label order.
inline const std::array<int, 4>& herald_outcomes(Channel channel) {
  static const std::array<int, 4> charge{0b0100, 0b0111, 0b1000, 0b1011};
  static const std::array<int, 4> spin{0b0101, 0b0110, 0b1001, 0b1010};
  return channel == Channel::charge ? charge : spin;
}

inline bool is_heralded(int outcome_bits, Channel channel) {
  for (int h : herald_outcomes(channel))
    if (h == outcome_bits) return true;
  return false;
}

/// Sign relating a strictly ordered fermionic basis state to the same
/// occupation label read as a product of per-dot factors (equivalently:
/// to the creation-operator string with all up operators in front). One
/// factor of -1 per (down electron, up electron on a later site) pair.
inline int label_sign(const FockState& s) {
  int inversions = 0;
  for (int i = 0; i < s.num_sites(); ++i) {
    if (!s.occupied(Orbital{i, Spin::down})) continue;
    for (int j = i + 1; j < s.num_sites(); ++j)
      if (s.occupied(Orbital{j, Spin::up})) ++inversions;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// Entangled-pair preparation: one of the two pure ebits, or the 2-site
/// half-filled ground state at a given u/t.
struct EbitSpec {
  enum class Kind { beta0, beta1, ground };

  Kind kind = Kind::beta0;
  double u_over_t = 0.0;

  static EbitSpec parse(const std::string& s) {
    if (s == "beta0") return {Kind::beta0, 0.0};
    if (s == "beta1") return {Kind::beta1, 0.0};
    if (s.rfind("ground:", 0) == 0) {
      std::size_t used = 0;
      double u = 0.0;
      const std::string num = s.substr(7);
      try {
        u = std::stod(num, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad ebit '" + s + "' (want beta0|beta1|ground:U)");
      }
      if (used != num.size() || !std::isfinite(u))
        throw std::invalid_argument("bad ebit '" + s + "' (want beta0|beta1|ground:U)");
      return {Kind::ground, u};
    }
    throw std::invalid_argument("bad ebit '" + s + "' (want beta0|beta1|ground:U)");
  }

  std::string str() const {
    switch (kind) {
      case Kind::beta0: return "beta0";
      case Kind::beta1: return "beta1";
      case Kind::ground: {
        char buf[48];
        std::snprintf(buf, sizeof buf, "ground:%g", u_over_t);
        return buf;
      }
    }
    return "?";
  }
};

/// 16-component label state of the dots C, B (index = C↑C↓B↑B↓ bits).
/// beta0 = (|1100⟩+|0011⟩)/√2, beta1 = (|1001⟩+|0110⟩)/√2; the ground
/// variant diagonalizes the 2-site chain and converts the eigenvector to
/// label amplitudes (all non-negative, a*beta0 + b*beta1).
inline Eigen::VectorXcd prepare_ebit(const EbitSpec& spec) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  const double rt = 1.0 / std::sqrt(2.0);
  switch (spec.kind) {
    case EbitSpec::Kind::beta0:
      v(0b1100) = rt;
      v(0b0011) = rt;
      return v;
    case EbitSpec::Kind::beta1:
      v(0b1001) = rt;
      v(0b0110) = rt;
      return v;
    case EbitSpec::Kind::ground:
      break;
  }
  const SectorBasis basis = SectorBasis::build(2, 2, 0);
  const HubbardParams params{2, 1.0, spec.u_over_t, Boundary::open};
  const GroundState gs = ground_state(build_hamiltonian(params, basis));
  for (Eigen::Index i = 0; i < basis.size(); ++i) {
    const FockState& s = basis.state(i);
    v(static_cast<Eigen::Index>(s.pattern())) =
        double(label_sign(s)) * gs.wf.amplitude(i);
  }
  detail::fix_phase(v);
  return v;
}

/// (alpha|10⟩ + beta|01⟩)_A ⊗ ebit_CB as a 64-component label state.
inline Eigen::VectorXcd prepare_initial_state(const QubitState& qubit,
                                              const Eigen::VectorXcd& ebit) {
  if (!qubit.is_normalized())
    throw std::invalid_argument("prepare_initial_state: qubit is not normalized");
  if (ebit.size() != 16)
    throw std::invalid_argument("prepare_initial_state: ebit must have 16 components");
  if (std::abs(ebit.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("prepare_initial_state: ebit is not normalized");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(64);
  for (Eigen::Index k = 0; k < 16; ++k) {
    psi((0b10 << 4) | k) = qubit.alpha * ebit(k);
    psi((0b01 << 4) | k) = qubit.beta * ebit(k);
  }
  return psi;
}

namespace detail {

/// sigma_Z on dot A's single-electron span, as a 4x4 dot operator:
/// |10⟩⟨10| - |01⟩⟨01|, zero on |00⟩ and |11⟩.
inline Eigen::Matrix4cd sigma_z_A() {
  Eigen::Matrix4cd z = Eigen::Matrix4cd::Zero();
  z(0b10, 0b10) = 1.0;
  z(0b01, 0b01) = -1.0;
  return z;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace detail

/// Controlled flip of dot C's channel pair, conditioned on dot A holding
/// a spin-up electron, as a 16x16 operator on the A⊗C label space.
///
/// The permutation form swaps the pair outright. The exponential form is
/// exp(-i (π/2) H) with H = P↑_A ⊗ (pair swap) + P↓_A ⊗ (pair projector),
/// P± = (1 ± sigma_Z,A)/2 on the single-electron span; it equals -i times
/// the permutation on the span where A carries one electron and C is in
/// the channel pair, and the identity elsewhere.
inline Eigen::MatrixXcd cnot_unitary(Channel channel,
                                     GateForm form = GateForm::permutation) {
  const auto [c0, c1] = channel_pair(channel);
  if (form == GateForm::permutation) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(16, 16);
    for (int a = 0; a < 4; ++a) {
      for (int c = 0; c < 4; ++c) {
        int c_out = c;
        if (a == 0b10) c_out = (c == c0) ? c1 : (c == c1 ? c0 : c);
        g((a << 2) | c_out, (a << 2) | c) = 1.0;
      }
    }
    return g;
  }

  const Eigen::Matrix4cd sz = detail::sigma_z_A();
  Eigen::Matrix4cd span_id = Eigen::Matrix4cd::Zero();
  span_id(0b10, 0b10) = span_id(0b01, 0b01) = 1.0;
  const Eigen::Matrix4cd p_up = 0.5 * (span_id + sz);
  const Eigen::Matrix4cd p_down = 0.5 * (span_id - sz);

  Eigen::Matrix4cd pair_swap = Eigen::Matrix4cd::Zero();
  pair_swap(c0, c1) = pair_swap(c1, c0) = 1.0;
  Eigen::Matrix4cd pair_proj = Eigen::Matrix4cd::Zero();
  pair_proj(c0, c0) = pair_proj(c1, c1) = 1.0;

  const Eigen::MatrixXcd h =
      detail::kron(p_up, pair_swap) + detail::kron(p_down, pair_proj);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const std::complex<double> minus_i(0.0, -1.0);
  Eigen::VectorXcd phases(16);
  for (Eigen::Index i = 0; i < 16; ++i)
    phases(i) = std::exp(minus_i * (std::numbers::pi / 2.0) * solver.eigenvalues()(i));
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

/// |10⟩ → (|10⟩+|01⟩)/√2, |01⟩ → (|10⟩-|01⟩)/√2 on dot A, identity on
/// the |00⟩ and |11⟩ labels.
inline Eigen::Matrix4cd hadamard_on_A() {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Identity();
  const double rt = 1.0 / std::sqrt(2.0);
  h(0b10, 0b10) = rt;
  h(0b01, 0b10) = rt;
  h(0b10, 0b01) = rt;
  h(0b01, 0b01) = -rt;
  return h;
}

/// Applies a 16x16 A⊗C operator to a 64-component protocol state.
inline Eigen::VectorXcd apply_on_AC(const Eigen::MatrixXcd& gate,
                                    const Eigen::VectorXcd& psi) {
  if (gate.rows() != 16 || gate.cols() != 16 || psi.size() != 64)
    throw std::invalid_argument("apply_on_AC: dimension mismatch");
  Eigen::Map<const Eigen::Matrix<std::complex<double>, 16, 4, Eigen::RowMajor>>
      in(psi.data());
  Eigen::VectorXcd out(64);
  Eigen::Map<Eigen::Matrix<std::complex<double>, 16, 4, Eigen::RowMajor>>
      result(out.data());
  result = gate * in;
  return out;
}

/// Applies a 4x4 dot-A operator to a 64-component protocol state.
inline Eigen::VectorXcd apply_on_A(const Eigen::Matrix4cd& gate,
                                   const Eigen::VectorXcd& psi) {
  if (psi.size() != 64) throw std::invalid_argument("apply_on_A: dimension mismatch");
  Eigen::Map<const Eigen::Matrix<std::complex<double>, 4, 16, Eigen::RowMajor>>
      in(psi.data());
  Eigen::VectorXcd out(64);
  Eigen::Map<Eigen::Matrix<std::complex<double>, 4, 16, Eigen::RowMajor>>
      result(out.data());
  result = gate * in;
  return out;
}

/// 4-character outcome string n_A↑ n_A↓ n_C↑ n_C↓, e.g. "1011".
inline std::string outcome_label(int outcome_bits) {
  std::string s(4, '0');
  for (int k = 0; k < 4; ++k)
    if (outcome_bits & (1 << (3 - k))) s[k] = '1';
  return s;
}

/// One projective measurement branch of the dots A and C: the 4-bit
/// outcome, its exact Born probability, and the collapsed, renormalized
/// dot-B state.
struct MeasurementRecord {
  int outcome_bits = 0;
  double probability = 0.0;
  Eigen::Vector4cd post_state = Eigen::Vector4cd::Zero();

  std::string label() const { return outcome_label(outcome_bits); }
};

/// All outcomes with nonzero probability, in ascending label order.
/// Probabilities are exact branch norms and sum to 1.
inline std::vector<MeasurementRecord> measurement_branches(const Eigen::VectorXcd& psi) {
  if (psi.size() != 64)
    throw std::invalid_argument("measurement_branches: protocol state must have 64 components");
  std::vector<MeasurementRecord> out;
  for (int ac = 0; ac < 16; ++ac) {
    const Eigen::Vector4cd b = psi.segment<4>(4 * ac);
    const double p = b.squaredNorm();
    if (p <= 1e-14) continue;
    out.push_back({ac, p, b / std::sqrt(p)});
  }
  return out;
}

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits of the stream; avoids
/// std::uniform_real_distribution, whose output is not pinned by the
/// standard.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Samples one outcome with Born probabilities and returns the collapsed
/// record. Deterministic given the stream; zero-probability outcomes are
/// never produced.
inline MeasurementRecord measure_AC(const Eigen::VectorXcd& psi, std::mt19937_64& rng) {
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("measure_AC: state is not normalized");
  const std::vector<MeasurementRecord> branches = measurement_branches(psi);
  double total = 0.0;
  for (const auto& b : branches) total += b.probability;
  double u = detail::uniform_unit(rng) * total;
  for (const auto& b : branches) {
    u -= b.probability;
    if (u < 0.0) return b;
  }
  return branches.back();
}

namespace detail {

/// I, X, Z, ZX on the logical span of the dot-B local space, identity on
/// the two labels outside the span.
inline std::array<Eigen::Matrix4cd, 4> pauli_candidates(const LogicalEncoding& enc) {
  const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  Eigen::Matrix4cd x = id;
  x(enc.up_ket, enc.up_ket) = x(enc.down_ket, enc.down_ket) = 0.0;
  x(enc.up_ket, enc.down_ket) = x(enc.down_ket, enc.up_ket) = 1.0;
  Eigen::Matrix4cd z = id;
  z(enc.down_ket, enc.down_ket) = -1.0;
  return {id, x, z, Eigen::Matrix4cd(z * x)};
}

struct CorrectionTable {
  std::array<int, 4> outcome = {};
  std::array<Eigen::Matrix4cd, 4> unitary = {};
};

/// Derives the outcome → correction map by running the exact pipeline on
/// probe qubits and searching {I, X, Z, ZX} for the unique element that
/// restores every probe; nothing is hand-entered.
inline CorrectionTable build_correction_table(Channel channel) {
  const LogicalEncoding enc = logical_encoding(channel);
  const auto paulis = pauli_candidates(enc);
  const EbitSpec spec{channel == Channel::charge ? EbitSpec::Kind::beta0
                                                 : EbitSpec::Kind::beta1,
                      0.0};
  const Eigen::VectorXcd ebit = prepare_ebit(spec);
  const std::array<QubitState, 3> probes{
      QubitState{0.6, 0.8}, QubitState{0.8, -0.6},
      QubitState{{1.0 / std::sqrt(2.0), 0.0}, {0.0, 1.0 / std::sqrt(2.0)}}};

  CorrectionTable table;
  table.outcome = herald_outcomes(channel);
  for (std::size_t slot = 0; slot < table.outcome.size(); ++slot) {
    int found = -1;
    for (int candidate = 0; candidate < 4; ++candidate) {
      bool all_match = true;
      for (const QubitState& q : probes) {
        Eigen::VectorXcd psi = prepare_initial_state(q, ebit);
        psi = apply_on_AC(cnot_unitary(channel, GateForm::permutation), psi);
        psi = apply_on_A(hadamard_on_A(), psi);
        Eigen::Vector4cd target = Eigen::Vector4cd::Zero();
        target(enc.up_ket) = q.alpha;
        target(enc.down_ket) = q.beta;
        bool branch_found = false;
        for (const MeasurementRecord& b : measurement_branches(psi)) {
          if (b.outcome_bits != table.outcome[slot]) continue;
          branch_found = true;
          const Eigen::Vector4cd corrected = paulis[candidate] * b.post_state;
          if (std::abs(std::norm(target.dot(corrected)) - 1.0) > 1e-10)
            all_match = false;
        }
        if (!branch_found) all_match = false;
      }
      if (all_match) {
        if (found >= 0)
          throw Error("correction table: ambiguous Pauli for outcome");
        found = candidate;
      }
    }
    if (found < 0)
      throw Error("correction table: no Pauli restores outcome " +
                  std::to_string(table.outcome[slot]));
    table.unitary[slot] = paulis[found];
  }
  return table;
}

inline const CorrectionTable& correction_table(Channel channel) {
  static const CorrectionTable charge = build_correction_table(Channel::charge);
  static const CorrectionTable spin = build_correction_table(Channel::spin);
  return channel == Channel::charge ? charge : spin;
}

}  // namespace detail

/// Conditional correction for a heralded outcome, as a unitary on dot B's
/// local space (a Pauli on the logical span, identity outside it).
inline Eigen::Matrix4cd correction_unitary(int outcome_bits, Channel channel) {
  const detail::CorrectionTable& table = detail::correction_table(channel);
  for (std::size_t i = 0; i < table.outcome.size(); ++i)
    if (table.outcome[i] == outcome_bits) return table.unitary[i];
  throw FilteredOutcomeError("correction_unitary: outcome " +
                             outcome_label(outcome_bits) + " is outside the " +
                             to_string(channel) + " herald set");
}

/// Reads alpha and beta off the channel's logical pair. Weight outside
/// the pair beyond 1e-10 raises DecodingError carrying the leaked weight.
/// Global phase is fixed so alpha (or beta when alpha vanishes) is real
/// non-negative.
inline QubitState decode_qubit(const Eigen::Vector4cd& b_state, Channel channel) {
  const LogicalEncoding enc = logical_encoding(channel);
  double leakage = 0.0;
  for (int k = 0; k < 4; ++k)
    if (k != enc.up_ket && k != enc.down_ket) leakage += std::norm(b_state(k));
  if (leakage > 1e-10)
    throw DecodingError("decode_qubit: " + std::to_string(leakage) +
                            " of the weight lies outside the " +
                            std::string(to_string(channel)) + " logical span",
                        leakage);
  QubitState q{b_state(enc.up_ket), b_state(enc.down_ket)};
  q = q.normalized();
  const std::complex<double> ref = std::abs(q.alpha) > 1e-9 ? q.alpha : q.beta;
  const std::complex<double> phase = std::conj(ref) / std::abs(ref);
  return QubitState{q.alpha * phase, q.beta * phase};
}

/// Statistics of one measurement outcome across a run. Fidelity is the
/// post-correction fidelity for heralded outcomes and 0 for filtered ones.
struct OutcomeStats {
  std::string label;
  bool heralded = false;
  long long count = 0;
  double frequency = 0.0;
  double fidelity = 0.0;
};

struct TeleportationReport {
  Channel channel = Channel::charge;
  long long trials = 0;
  std::uint64_t seed = 0;
  GateForm gate_form = GateForm::permutation;
  EbitSpec ebit;
  std::vector<OutcomeStats> outcomes;
  double heralded_success_rate = 0.0;
  std::optional<EbitWeights> ebit_weights;
};

/// Full pipeline: prepare → C-NOT → Hadamard → measure A,C per trial →
/// correct and decode heralded branches. Filtered branches count as
/// failures; their collapsed states are discarded. One seeded stream
/// drives all trials.
inline TeleportationReport run_protocol(const QubitState& qubit, Channel channel,
                                        const EbitSpec& ebit_spec, long long trials,
                                        std::uint64_t seed,
                                        GateForm form = GateForm::permutation) {
  if (trials < 1) throw std::invalid_argument("run_protocol: need trials >= 1");
  if (!qubit.is_normalized())
    throw std::invalid_argument("run_protocol: qubit is not normalized");

  const Eigen::VectorXcd ebit = prepare_ebit(ebit_spec);
  Eigen::VectorXcd psi = prepare_initial_state(qubit, ebit);
  psi = apply_on_AC(cnot_unitary(channel, form), psi);
  psi = apply_on_A(hadamard_on_A(), psi);

  const std::vector<MeasurementRecord> branches = measurement_branches(psi);

  // per-branch exact post-correction fidelity; identical for every trial
  // that lands on the branch
  std::vector<double> branch_fidelity(branches.size(), 0.0);
  std::vector<bool> branch_heralded(branches.size(), false);
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (!is_heralded(branches[i].outcome_bits, channel)) continue;
    branch_heralded[i] = true;
    const Eigen::Vector4cd corrected =
        correction_unitary(branches[i].outcome_bits, channel) *
        branches[i].post_state;
    branch_fidelity[i] = fidelity(qubit, decode_qubit(corrected, channel));
  }

  std::vector<long long> counts(branches.size(), 0);
  std::mt19937_64 rng(seed);
  double total = 0.0;
  for (const auto& b : branches) total += b.probability;
  for (long long t = 0; t < trials; ++t) {
    double u = detail::uniform_unit(rng) * total;
    std::size_t pick = branches.size() - 1;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      u -= branches[i].probability;
      if (u < 0.0) {
        pick = i;
        break;
      }
    }
    ++counts[pick];
  }

  TeleportationReport report;
  report.channel = channel;
  report.trials = trials;
  report.seed = seed;
  report.gate_form = form;
  report.ebit = ebit_spec;
  long long heralded_count = 0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    OutcomeStats row;
    row.label = branches[i].label();
    row.heralded = branch_heralded[i];
    row.count = counts[i];
    row.frequency = static_cast<double>(counts[i]) / static_cast<double>(trials);
    row.fidelity = branch_fidelity[i];
    if (branch_heralded[i]) heralded_count += counts[i];
    report.outcomes.push_back(std::move(row));
  }
  report.heralded_success_rate =
      static_cast<double>(heralded_count) / static_cast<double>(trials);
  if (ebit_spec.kind == EbitSpec::Kind::ground) {
    const auto weight = [&](int p0, int p1) {
      return std::sqrt(std::norm(ebit(p0)) + std::norm(ebit(p1)));
    };
    report.ebit_weights = EbitWeights{weight(0b1100, 0b0011), weight(0b1001, 0b0110)};
  }
  return report;
}

}  // namespace dotsim
