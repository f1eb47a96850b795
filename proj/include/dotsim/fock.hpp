// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dotsim/errors.hpp"

namespace dotsim {

inline constexpr double kNormTolerance = 1e-12;

enum class Spin : int { up = 0, down = 1 };

/// One spin-orbital of the chain. Linear index 2*site + spin is a
/// bijection with (site, spin) and fixes the fermionic ordering used
/// everywhere below.
struct Orbital {
  int site = 0;
  Spin spin = Spin::up;

  constexpr int linear_index() const noexcept {
    return 2 * site + static_cast<int>(spin);
  }

  static constexpr Orbital from_linear(int index) noexcept {
    return Orbital{index / 2, static_cast<Spin>(index & 1)};
  }

  friend constexpr bool operator==(const Orbital&, const Orbital&) = default;
};

/// Occupation-number basis state over `width` spin-orbitals, bit-packed.
///
/// Orbital k occupies bit (width-1-k) of the pattern, so the printed ket
/// |b0 b1 ... b_{width-1}> is exactly the binary rendering of pattern():
/// basis enumeration "by increasing pattern" and lexicographic ket order
/// coincide.
class FockState {
 public:
  FockState() = default;

  FockState(int width, std::uint64_t pattern) : m_bits(pattern), m_width(width) {
    if (width < 0 || width > 62)
      throw std::invalid_argument("FockState: unsupported orbital count");
    if (width < 64 && (pattern >> width) != 0)
      throw std::invalid_argument("FockState: pattern wider than orbital count");
  }

  static FockState vacuum(int num_sites) { return FockState(2 * num_sites, 0); }

  int width() const noexcept { return m_width; }
  int num_sites() const noexcept { return m_width / 2; }
  std::uint64_t pattern() const noexcept { return m_bits; }

  bool occupied(int linear) const {
    check_index(linear);
    return (m_bits >> (m_width - 1 - linear)) & 1u;
  }
  bool occupied(Orbital orb) const { return occupied(orb.linear_index()); }

  int electron_count() const noexcept { return std::popcount(m_bits); }

  /// n_up - n_down, i.e. twice the total Sz.
  int two_sz() const noexcept {
    int sz = 0;
    for (int k = 0; k < m_width; ++k)
      sz += ((m_bits >> (m_width - 1 - k)) & 1u) ? (k % 2 == 0 ? 1 : -1) : 0;
    return sz;
  }

  int double_occupancy() const noexcept {
    int d = 0;
    for (int s = 0; s + 1 < m_width; s += 2)
      d += ((m_bits >> (m_width - 1 - s)) & 1u) &&
           ((m_bits >> (m_width - 2 - s)) & 1u);
    return d;
  }

  /// Number of occupied orbitals with linear index strictly below
  /// `linear`: the Jordan-Wigner exchange count of a ladder operator
  /// acting on that orbital.
  int count_below(int linear) const {
    check_index(linear);
    if (linear == 0) return 0;
    return std::popcount(m_bits >> (m_width - linear));
  }

  FockState with_occupation(int linear, bool occ) const {
    check_index(linear);
    const std::uint64_t mask = std::uint64_t{1} << (m_width - 1 - linear);
    return FockState(m_width, occ ? (m_bits | mask) : (m_bits & ~mask));
  }

  /// Ket label, e.g. "|0110⟩".
  std::string ket() const {
    std::string s = "|";
    for (int k = 0; k < m_width; ++k) s += occupied(k) ? '1' : '0';
    s += "⟩";
    return s;
  }

  friend bool operator==(const FockState&, const FockState&) = default;
  friend bool operator<(const FockState& a, const FockState& b) {
    return a.m_bits < b.m_bits;
  }

 private:
  void check_index(int linear) const {
    if (linear < 0 || linear >= m_width)
      throw std::invalid_argument("FockState: orbital index out of range");
  }

  std::uint64_t m_bits = 0;
  int m_width = 0;
};

/// All states of fixed electron number and fixed total Sz, listed in
/// strictly increasing pattern order.
class SectorBasis {
 public:
  SectorBasis() = default;

  static bool sector_exists(int num_sites, int num_electrons, int two_sz) {
    if (num_sites < 1 || num_electrons < 0 || num_electrons > 2 * num_sites)
      return false;
    if (std::abs(two_sz) > num_electrons) return false;
    if ((num_electrons - two_sz) % 2 != 0) return false;
    const int n_up = (num_electrons + two_sz) / 2;
    const int n_down = (num_electrons - two_sz) / 2;
    return n_up <= num_sites && n_down <= num_sites;
  }

  /// Enumerates the sector. Impossible constraints raise EmptySectorError.
  static SectorBasis build(int num_sites, int num_electrons, int two_sz) {
    if (!sector_exists(num_sites, num_electrons, two_sz))
      throw EmptySectorError("empty sector: no states with " +
                             std::to_string(num_electrons) + " electrons and 2*Sz=" +
                             std::to_string(two_sz) + " on " +
                             std::to_string(num_sites) + " site(s)");
    SectorBasis basis;
    basis.m_num_sites = num_sites;
    basis.m_num_electrons = num_electrons;
    basis.m_two_sz = two_sz;
    const int width = 2 * num_sites;
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << width); ++p) {
      FockState s(width, p);
      if (s.electron_count() == num_electrons && s.two_sz() == two_sz)
        basis.m_states.push_back(s);
    }
    return basis;
  }

  int num_sites() const noexcept { return m_num_sites; }
  int num_orbitals() const noexcept { return 2 * m_num_sites; }
  int num_electrons() const noexcept { return m_num_electrons; }
  int two_sz() const noexcept { return m_two_sz; }

  Eigen::Index size() const noexcept {
    return static_cast<Eigen::Index>(m_states.size());
  }
  const FockState& state(Eigen::Index i) const { return m_states.at(i); }
  const std::vector<FockState>& states() const noexcept { return m_states; }

  /// Position of `s` in the sector, or -1 when it is not a member.
  Eigen::Index index_of(const FockState& s) const {
    auto it = std::lower_bound(m_states.begin(), m_states.end(), s);
    if (it == m_states.end() || !(*it == s)) return -1;
    return static_cast<Eigen::Index>(it - m_states.begin());
  }
  Eigen::Index index_of_pattern(std::uint64_t pattern) const {
    return index_of(FockState(num_orbitals(), pattern));
  }

  friend bool operator==(const SectorBasis&, const SectorBasis&) = default;

 private:
  int m_num_sites = 0;
  int m_num_electrons = 0;
  int m_two_sz = 0;
  std::vector<FockState> m_states;
};

/// Complex amplitude vector over a SectorBasis. Normalization is not
/// enforced at construction; ladder-operator intermediates are
/// legitimately unnormalized and callers requiring unit norm check it.
class WaveFunction {
 public:
  WaveFunction(SectorBasis basis, Eigen::VectorXcd amplitudes)
      : m_basis(std::move(basis)), m_amps(std::move(amplitudes)) {
    if (m_amps.size() != m_basis.size())
      throw std::invalid_argument("WaveFunction: amplitude count differs from basis size");
  }

  static WaveFunction zero(SectorBasis basis) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.size());
    return WaveFunction(std::move(basis), std::move(amps));
  }

  const SectorBasis& basis() const noexcept { return m_basis; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return m_amps; }
  std::complex<double> amplitude(Eigen::Index i) const { return m_amps(i); }
  Eigen::Index size() const noexcept { return m_amps.size(); }

  double norm() const { return m_amps.norm(); }
  bool is_normalized(double tol = kNormTolerance) const {
    return std::abs(m_amps.squaredNorm() - 1.0) <= tol;
  }

  WaveFunction normalized() const {
    const double n = norm();
    if (n <= 0.0)
      throw std::invalid_argument("WaveFunction: cannot normalize the zero vector");
    return WaveFunction(m_basis, m_amps / n);
  }

 private:
  SectorBasis m_basis;
  Eigen::VectorXcd m_amps;
};

enum class LadderKind { create, annihilate };

/// Ladder-operator action on a single basis state. sign == 0 marks a
/// Pauli-forbidden application (the state field is then meaningless).
struct LadderAction {
  int sign = 0;
  FockState state;
};

/// c^dagger / c on one basis state with the Jordan-Wigner sign
/// (-1)^(occupied orbitals of strictly smaller linear index).
inline LadderAction apply_ladder(const FockState& s, Orbital orb, LadderKind kind) {
  const int k = orb.linear_index();
  const bool want_occupied = (kind == LadderKind::annihilate);
  if (s.occupied(k) != want_occupied) return {0, s};
  const int sign = (s.count_below(k) % 2 == 0) ? 1 : -1;
  return {sign, s.with_occupation(k, kind == LadderKind::create)};
}

namespace detail {

inline std::pair<int, int> ladder_target_numbers(const SectorBasis& basis,
                                                 Orbital orb, LadderKind kind) {
  const int dn = (kind == LadderKind::create) ? 1 : -1;
  const int dsz = (orb.spin == Spin::up) ? dn : -dn;
  return {basis.num_electrons() + dn, basis.two_sz() + dsz};
}

}  // namespace detail

/// c^dagger / c applied componentwise. The result lives in the adjacent
/// (N±1, Sz±1/2) sector and is returned unnormalized; it is the zero
/// vector over the input basis when that sector does not exist.
inline WaveFunction apply_ladder(const WaveFunction& wf, Orbital orb, LadderKind kind) {
  const auto [n, tsz] = detail::ladder_target_numbers(wf.basis(), orb, kind);
  if (!SectorBasis::sector_exists(wf.basis().num_sites(), n, tsz))
    return WaveFunction::zero(wf.basis());
  SectorBasis target = SectorBasis::build(wf.basis().num_sites(), n, tsz);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(target.size());
  for (Eigen::Index i = 0; i < wf.size(); ++i) {
    if (wf.amplitude(i) == 0.0) continue;
    const LadderAction act = apply_ladder(wf.basis().state(i), orb, kind);
    if (act.sign == 0) continue;
    const Eigen::Index j = target.index_of(act.state);
    out(j) += static_cast<double>(act.sign) * wf.amplitude(i);
  }
  return WaveFunction(std::move(target), std::move(out));
}

/// <n_orb> of a normalized state; always in [0, 1].
inline double occupation_expectation(const WaveFunction& wf, Orbital orb) {
  if (!wf.is_normalized())
    throw std::invalid_argument("occupation_expectation: state is not normalized");
  double value = 0.0;
  for (Eigen::Index i = 0; i < wf.size(); ++i)
    if (wf.basis().state(i).occupied(orb)) value += std::norm(wf.amplitude(i));
  return value;
}

}  // namespace dotsim
