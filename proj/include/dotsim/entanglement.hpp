// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dotsim/errors.hpp"
#include "dotsim/fock.hpp"
#include "dotsim/hubbard.hpp"

namespace dotsim {

/// The four states a single dot can be in. The numeric values index the
/// rows/columns of reduced density matrices and the branches of
/// correlation reports.
enum class LocalState : int { empty = 0, up = 1, down = 2, updown = 3 };

inline constexpr std::array<LocalState, 4> kLocalStates{
    LocalState::empty, LocalState::up, LocalState::down, LocalState::updown};

inline const char* to_string(LocalState s) {
  switch (s) {
    case LocalState::empty: return "0";
    case LocalState::up: return "up";
    case LocalState::down: return "down";
    case LocalState::updown: return "updown";
  }
  return "?";
}

inline int electron_count(LocalState s) {
  return (s == LocalState::empty) ? 0 : (s == LocalState::updown ? 2 : 1);
}
inline int two_sz(LocalState s) {
  return (s == LocalState::up) ? 1 : (s == LocalState::down ? -1 : 0);
}

/// Probabilities of the four local states of one site: z (empty),
/// u_plus (spin up), u_minus (spin down), w (doubly occupied).
struct LocalCoefficients {
  double z = 0.0;
  double u_plus = 0.0;
  double u_minus = 0.0;
  double w = 0.0;

  double operator[](LocalState s) const {
    switch (s) {
      case LocalState::empty: return z;
      case LocalState::up: return u_plus;
      case LocalState::down: return u_minus;
      case LocalState::updown: return w;
    }
    return 0.0;
  }
};

/// Local coefficients from occupation expectations:
/// w = <n_up n_down>, u± = <n_±> - w, z = 1 - u⁺ - u⁻ - w.
inline LocalCoefficients local_coefficients(const WaveFunction& wf, int site) {
  if (!wf.is_normalized())
    throw std::invalid_argument("local_coefficients: state is not normalized");
  if (site < 0 || site >= wf.basis().num_sites())
    throw std::invalid_argument("local_coefficients: site index out of range");

  double n_up = 0.0, n_down = 0.0, w = 0.0;
  for (Eigen::Index i = 0; i < wf.size(); ++i) {
    const double p = std::norm(wf.amplitude(i));
    if (p == 0.0) continue;
    const bool up = wf.basis().state(i).occupied(Orbital{site, Spin::up});
    const bool down = wf.basis().state(i).occupied(Orbital{site, Spin::down});
    n_up += p * up;
    n_down += p * down;
    w += p * (up && down);
  }
  const double u_plus = n_up - w;
  const double u_minus = n_down - w;
  return LocalCoefficients{1.0 - u_plus - u_minus - w, u_plus, u_minus, w};
}

namespace detail {

inline double xlog2x(double p) { return p <= 0.0 ? 0.0 : p * std::log2(p); }

/// Clamps coefficients that undershoot zero by floating-point dust.
inline double clamp_probability(double p, const char* who) {
  if (p < -1e-14 || p > 1.0 + 1e-12)
    throw std::invalid_argument(std::string(who) + ": coefficient " +
                                std::to_string(p) + " outside [0, 1]");
  return p < 0.0 ? 0.0 : p;
}

}  // namespace detail

/// Von Neumann entropy (bits) of the local mixture, with 0*log2(0) = 0.
inline double local_entanglement(const LocalCoefficients& c) {
  const double z = detail::clamp_probability(c.z, "local_entanglement");
  const double up = detail::clamp_probability(c.u_plus, "local_entanglement");
  const double dn = detail::clamp_probability(c.u_minus, "local_entanglement");
  const double w = detail::clamp_probability(c.w, "local_entanglement");
  if (std::abs(z + up + dn + w - 1.0) > 1e-10)
    throw std::invalid_argument("local_entanglement: coefficients do not sum to 1");
  return -detail::xlog2x(z) - detail::xlog2x(up) - detail::xlog2x(dn) -
         detail::xlog2x(w);
}

struct EntanglementReport {
  int site = 0;
  LocalCoefficients coefficients;
  double entropy_bits = 0.0;
};

inline EntanglementReport entanglement_report(const WaveFunction& wf, int site) {
  const LocalCoefficients c = local_coefficients(wf, site);
  return EntanglementReport{site, c, local_entanglement(c)};
}

/// Full partial trace over everything but `site`, in the local basis
/// (|0⟩, |↑⟩, |↓⟩, |↑↓⟩).
///
/// Each basis state is split as (site orbitals) ⊗ (complement) by moving
/// the site's creation operators to the front of the ordered product;
/// that reordering contributes (-1)^(n_site * m) with m the number of
/// occupied complement orbitals of smaller linear index. The sign is
/// irrelevant on the diagonal but required for coherences of states that
/// mix conservation sectors.
inline Eigen::Matrix4cd reduced_density_matrix(const WaveFunction& wf, int site) {
  if (!wf.is_normalized())
    throw std::invalid_argument("reduced_density_matrix: state is not normalized");
  if (site < 0 || site >= wf.basis().num_sites())
    throw std::invalid_argument("reduced_density_matrix: site index out of range");

  const int width = wf.basis().num_orbitals();
  const int k_up = Orbital{site, Spin::up}.linear_index();
  const int k_down = Orbital{site, Spin::down}.linear_index();
  const std::uint64_t site_mask = (std::uint64_t{1} << (width - 1 - k_up)) |
                                  (std::uint64_t{1} << (width - 1 - k_down));

  // signed local 4-vector per complement configuration
  std::map<std::uint64_t, Eigen::Vector4cd> buckets;
  for (Eigen::Index i = 0; i < wf.size(); ++i) {
    const std::complex<double> a = wf.amplitude(i);
    if (a == 0.0) continue;
    const FockState& s = wf.basis().state(i);
    const bool up = s.occupied(k_up);
    const bool down = s.occupied(k_down);
    const int nu = (up ? 1 : 0) + (down ? 2 : 0);  // empty/up/down/updown
    const int n_site = int(up) + int(down);
    const int m = s.count_below(k_up);  // complement orbitals precede k_up only
    const int sign = ((n_site * m) % 2 == 0) ? 1 : -1;
    auto [it, inserted] = buckets.try_emplace(s.pattern() & ~site_mask,
                                              Eigen::Vector4cd::Zero());
    it->second(nu) += double(sign) * a;
  }

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (const auto& [pattern, v] : buckets) rho += v * v.adjoint();
  return rho;
}

/// Entropy in bits of a density matrix's eigenvalue distribution.
inline double entropy_of_density_matrix(const Eigen::Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
  double e = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i)
    e -= detail::xlog2x(detail::clamp_probability(solver.eigenvalues()(i),
                                                  "entropy_of_density_matrix"));
  return e;
}

struct SweepPoint {
  double u_over_t = 0.0;
  LocalCoefficients coefficients;
  double entropy_bits = 0.0;
};

inline std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo < hi))
    throw std::invalid_argument("linear_grid: need points >= 2 and lo < hi");
  std::vector<double> grid(points);
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo + i * step;
  return grid;
}

/// Site-0 local entanglement of the half-filled (Sz=0) ground state per
/// grid point, t fixed to 1. Points are independent; output preserves
/// grid order.
inline std::vector<SweepPoint> entanglement_sweep(const std::vector<double>& u_grid,
                                                  int num_sites = 2,
                                                  Boundary boundary = Boundary::open) {
  if (num_sites < 2 || num_sites % 2 != 0)
    throw std::invalid_argument(
        "entanglement_sweep: half filling at Sz=0 needs an even site count >= 2");
  const SectorBasis basis = SectorBasis::build(num_sites, num_sites, 0);
  std::vector<SweepPoint> out;
  out.reserve(u_grid.size());
  for (double u : u_grid) {
    HubbardParams params{num_sites, 1.0, u, boundary};
    GroundState gs = [&] {
      try {
        return ground_state(build_hamiltonian(params, basis));
      } catch (const DegeneracyError& err) {
        throw DegeneracyError(std::string(err.what()) + " at u_over_t=" +
                              std::to_string(u));
      }
    }();
    const LocalCoefficients c = local_coefficients(gs.wf, 0);
    out.push_back({u, c, local_entanglement(c)});
  }
  return out;
}

struct CorrelationBranch {
  LocalState local_state = LocalState::empty;
  double probability = 0.0;
  int complement_electrons = 0;
  int complement_two_sz = 0;
};

/// Conditional statistics of the complement, given each local state of
/// one site.
struct CorrelationReport {
  int site = 0;
  std::array<CorrelationBranch, 4> branches;
};

/// Conditions a sector state on the four local states of `site` and
/// reports the complement's electron count and 2*Sz per branch. Number
/// and Sz conservation force every branch to be a point mass; a branch
/// whose complement statistics spread raises MixedSectorError.
/// Zero-probability branches report the conservation-implied values.
inline CorrelationReport complement_correlation(const WaveFunction& wf, int site) {
  if (!wf.is_normalized())
    throw std::invalid_argument("complement_correlation: state is not normalized");
  if (site < 0 || site >= wf.basis().num_sites())
    throw std::invalid_argument("complement_correlation: site index out of range");

  const SectorBasis& basis = wf.basis();
  CorrelationReport report;
  report.site = site;

  struct Tally {
    double probability = 0.0;
    bool seen = false;
    int electrons = 0;
    int sz = 0;
  };
  std::array<Tally, 4> tallies;

  for (Eigen::Index i = 0; i < wf.size(); ++i) {
    const double p = std::norm(wf.amplitude(i));
    if (p == 0.0) continue;
    const FockState& s = basis.state(i);
    const bool up = s.occupied(Orbital{site, Spin::up});
    const bool down = s.occupied(Orbital{site, Spin::down});
    const int nu = (up ? 1 : 0) + (down ? 2 : 0);
    const int local_n = int(up) + int(down);
    const int local_sz = int(up) - int(down);
    const int comp_n = s.electron_count() - local_n;
    const int comp_sz = s.two_sz() - local_sz;

    Tally& t = tallies[nu];
    if (p > 1e-12) {
      if (t.seen && (t.electrons != comp_n || t.sz != comp_sz))
        throw MixedSectorError(
            "complement_correlation: branch " +
            std::string(to_string(static_cast<LocalState>(nu))) +
            " is not a point mass over complement sectors");
      t.seen = true;
      t.electrons = comp_n;
      t.sz = comp_sz;
    }
    t.probability += p;
  }

  for (int nu = 0; nu < 4; ++nu) {
    const LocalState state = static_cast<LocalState>(nu);
    const Tally& t = tallies[nu];
    CorrelationBranch& b = report.branches[nu];
    b.local_state = state;
    b.probability = t.probability;
    if (t.seen) {
      b.complement_electrons = t.electrons;
      b.complement_two_sz = t.sz;
    } else {
      b.complement_electrons = basis.num_electrons() - electron_count(state);
      b.complement_two_sz = basis.two_sz() - two_sz(state);
    }
  }
  return report;
}

}  // namespace dotsim
