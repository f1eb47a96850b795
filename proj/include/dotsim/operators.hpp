// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "dotsim/fock.hpp"

namespace dotsim {

/// Dense complex operator over a SectorBasis.
struct OperatorMatrix {
  SectorBasis basis;
  Eigen::MatrixXcd entries;

  Eigen::Index dim() const noexcept { return entries.rows(); }

  double hermiticity_defect() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  }
  bool is_hermitian(double tol = 1e-12) const {
    return hermiticity_defect() <= tol;
  }
};

/// Matrix of a single ladder operator over the full (unrestricted) Fock
/// space of `num_sites` sites. Row/column index equals FockState::pattern(),
/// so the full space is ordered exactly like sector bases are.
inline Eigen::MatrixXd full_space_ladder_matrix(int num_sites, Orbital orb,
                                                LadderKind kind) {
  const int width = 2 * num_sites;
  const Eigen::Index dim = Eigen::Index{1} << width;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint64_t p = 0; p < static_cast<std::uint64_t>(dim); ++p) {
    const LadderAction act = apply_ladder(FockState(width, p), orb, kind);
    if (act.sign != 0)
      m(static_cast<Eigen::Index>(act.state.pattern()),
        static_cast<Eigen::Index>(p)) = act.sign;
  }
  return m;
}

/// Diagonal total-electron-number operator over the full Fock space.
inline Eigen::MatrixXd full_space_number_matrix(int num_sites) {
  const int width = 2 * num_sites;
  const Eigen::Index dim = Eigen::Index{1} << width;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint64_t p = 0; p < static_cast<std::uint64_t>(dim); ++p)
    m(p, p) = FockState(width, p).electron_count();
  return m;
}

/// Diagonal 2*Sz operator over the full Fock space.
inline Eigen::MatrixXd full_space_two_sz_matrix(int num_sites) {
  const int width = 2 * num_sites;
  const Eigen::Index dim = Eigen::Index{1} << width;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint64_t p = 0; p < static_cast<std::uint64_t>(dim); ++p)
    m(p, p) = FockState(width, p).two_sz();
  return m;
}

}  // namespace dotsim
