// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dotsim/errors.hpp"
#include "dotsim/fock.hpp"
#include "dotsim/operators.hpp"

namespace dotsim {

enum class Boundary { open, periodic };

/// 1D chain parameters: nearest-neighbour hopping t and on-site
/// repulsion u. A 2-site chain has a single bond under either boundary
/// condition (a periodic 2-site ring would count the same bond twice).
struct HubbardParams {
  int num_sites = 2;
  double t = 1.0;
  double u = 0.0;
  Boundary boundary = Boundary::open;

  std::vector<std::pair<int, int>> bonds() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i + 1 < num_sites; ++i) out.emplace_back(i, i + 1);
    if (boundary == Boundary::periodic && num_sites > 2)
      out.emplace_back(num_sites - 1, 0);
    return out;
  }
};

/// -t * sum_{<ij>,sigma} (c^dag_{i sigma} c_{j sigma} + h.c.)
/// + u * sum_i n_{i up} n_{i down}, over the given sector.
inline OperatorMatrix build_hamiltonian(const HubbardParams& params,
                                        const SectorBasis& basis) {
  if (params.num_sites < 1)
    throw std::invalid_argument("build_hamiltonian: need at least one site");
  if (!std::isfinite(params.t) || !std::isfinite(params.u))
    throw std::invalid_argument("build_hamiltonian: non-finite t or u");
  if (basis.num_sites() != params.num_sites)
    throw std::invalid_argument("build_hamiltonian: basis built for " +
                                std::to_string(basis.num_sites()) +
                                " sites, parameters say " +
                                std::to_string(params.num_sites));

  const Eigen::Index dim = basis.size();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const auto bonds = params.bonds();

  for (Eigen::Index col = 0; col < dim; ++col) {
    const FockState& s = basis.state(col);
    h(col, col) += params.u * s.double_occupancy();
    for (const auto& [i, j] : bonds) {
      for (Spin spin : {Spin::up, Spin::down}) {
        // both directions of c^dag_{a sigma} c_{b sigma}
        for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          const LadderAction ann = apply_ladder(s, Orbital{b, spin}, LadderKind::annihilate);
          if (ann.sign == 0) continue;
          const LadderAction cre = apply_ladder(ann.state, Orbital{a, spin}, LadderKind::create);
          if (cre.sign == 0) continue;
          const Eigen::Index row = basis.index_of(cre.state);
          h(row, col) += -params.t * ann.sign * cre.sign;
        }
      }
    }
  }
  return OperatorMatrix{basis, std::move(h)};
}

namespace detail {

/// Multiplies by the global phase that makes the largest-magnitude entry
/// real positive; ties resolve to the lowest index.
inline void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index at = 0;
  v.cwiseAbs().maxCoeff(&at);
  const std::complex<double> pivot = v(at);
  if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);
}

}  // namespace detail

struct GroundState {
  double energy = 0.0;
  WaveFunction wf;
};

/// Lowest eigenpair of a Hermitian operator, with the eigenvector phase
/// fixed deterministically. A gap below 1e-10 * max(1, |E0|) to the next
/// level raises DegeneracyError since no unique state exists then.
inline GroundState ground_state(const OperatorMatrix& h) {
  const double scale = h.entries.size() > 0 ? h.entries.cwiseAbs().maxCoeff() : 0.0;
  if (!h.is_hermitian(1e-12 * std::max(1.0, scale)))
    throw std::invalid_argument("ground_state: operator is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries);
  if (solver.info() != Eigen::Success)
    throw Error("ground_state: eigensolver failed to converge");

  const Eigen::VectorXd& evals = solver.eigenvalues();
  const double e0 = evals(0);
  if (evals.size() > 1) {
    const double gap = evals(1) - e0;
    if (gap < 1e-10 * std::max(1.0, std::abs(e0)))
      throw DegeneracyError("ground_state: degenerate lowest level (gap " +
                            std::to_string(gap) + ")");
  }

  Eigen::VectorXcd vec = solver.eigenvectors().col(0);
  detail::fix_phase(vec);
  return GroundState{e0, WaveFunction(h.basis, std::move(vec))};
}

/// Magnitudes of the two-site singlet's projections onto the
/// doubly-occupied/empty pair span and the singly-occupied pair span.
struct EbitWeights {
  double a_mag = 0.0;  ///< charge-pair weight, span {|1100⟩, |0011⟩}
  double b_mag = 0.0;  ///< spin-pair weight,   span {|1001⟩, |0110⟩}
};

/// Splits a normalized 2-site (2 electrons, Sz=0) state into charge and
/// spin ebit weights. The state must carry equal magnitudes on the two
/// members of each span; anything else cannot be written as a weighted
/// pair of ebits and raises AsymmetricStateError.
inline EbitWeights ebit_weights(const WaveFunction& wf) {
  const SectorBasis& basis = wf.basis();
  if (basis.num_sites() != 2 || basis.num_electrons() != 2 || basis.two_sz() != 0)
    throw std::invalid_argument("ebit_weights: state is not in the 2-site (2e, Sz=0) sector");
  if (!wf.is_normalized())
    throw std::invalid_argument("ebit_weights: state is not normalized");

  const auto amp = [&](std::uint64_t pattern) {
    return wf.amplitude(basis.index_of_pattern(pattern));
  };
  const std::complex<double> a1 = amp(0b1100), a2 = amp(0b0011);
  const std::complex<double> b1 = amp(0b1001), b2 = amp(0b0110);

  constexpr double tol = 1e-9;
  if (std::abs(std::abs(a1) - std::abs(a2)) > tol ||
      std::abs(std::abs(b1) - std::abs(b2)) > tol)
    throw AsymmetricStateError("ebit_weights: unequal pair magnitudes (|" +
                               std::to_string(std::abs(a1)) + "| vs |" +
                               std::to_string(std::abs(a2)) + "|, |" +
                               std::to_string(std::abs(b1)) + "| vs |" +
                               std::to_string(std::abs(b2)) + "|)");

  return EbitWeights{std::sqrt(std::norm(a1) + std::norm(a2)),
                     std::sqrt(std::norm(b1) + std::norm(b2))};
}

struct WeightsPoint {
  double u_over_t = 0.0;
  EbitWeights weights;
};

/// Ebit weights of the 2-site half-filled ground state across a u/t grid
/// (t fixed to 1).
inline std::vector<WeightsPoint> ebit_weight_sweep(const std::vector<double>& u_grid) {
  const SectorBasis basis = SectorBasis::build(2, 2, 0);
  std::vector<WeightsPoint> out;
  out.reserve(u_grid.size());
  for (double u : u_grid) {
    HubbardParams params{2, 1.0, u, Boundary::open};
    GroundState gs = [&] {
      try {
        return ground_state(build_hamiltonian(params, basis));
      } catch (const DegeneracyError& err) {
        throw DegeneracyError(std::string(err.what()) + " at u_over_t=" +
                              std::to_string(u));
      }
    }();
    out.push_back({u, ebit_weights(gs.wf)});
  }
  return out;
}

}  // namespace dotsim
