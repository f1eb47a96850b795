// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "dotsim/hubbard.hpp"
#include "dotsim/operators.hpp"
#include "oracles.hpp"

using namespace dotsim;
using Catch::Matchers::WithinAbs;

namespace {

/// Hamiltonian over the full Fock space assembled from ladder matrices;
/// an independent route to the same operator.
Eigen::MatrixXd full_hamiltonian(const HubbardParams& params) {
  const Eigen::Index dim = Eigen::Index{1} << (2 * params.num_sites);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [i, j] : params.bonds()) {
    for (Spin spin : {Spin::up, Spin::down}) {
      const Eigen::MatrixXd hop =
          full_space_ladder_matrix(params.num_sites, Orbital{i, spin}, LadderKind::create) *
          full_space_ladder_matrix(params.num_sites, Orbital{j, spin}, LadderKind::annihilate);
      h += -params.t * (hop + hop.transpose());
    }
  }
  for (int i = 0; i < params.num_sites; ++i) {
    const auto n = [&](Spin spin) {
      return (full_space_ladder_matrix(params.num_sites, Orbital{i, spin}, LadderKind::create) *
              full_space_ladder_matrix(params.num_sites, Orbital{i, spin}, LadderKind::annihilate))
          .eval();
    };
    h += params.u * n(Spin::up) * n(Spin::down);
  }
  return h;
}

}  // namespace

TEST_CASE("two-site hamiltonian matches the hand expansion") {
  const SectorBasis basis = SectorBasis::build(2, 2, 0);
  const OperatorMatrix h = build_hamiltonian({2, 1.0, 4.0, Boundary::open}, basis);

  const auto at = [&](std::uint64_t row, std::uint64_t col) {
    return h.entries(basis.index_of_pattern(row), basis.index_of_pattern(col)).real();
  };

  SECTION("diagonal is u times the double occupancy") {
    CHECK(at(0b1100, 0b1100) == 4.0);
    CHECK(at(0b0011, 0b0011) == 4.0);
    CHECK(at(0b1001, 0b1001) == 0.0);
    CHECK(at(0b0110, 0b0110) == 0.0);
  }

  SECTION("hopping connects each doubly occupied state to each singly occupied one") {
    for (std::uint64_t d : {0b1100ull, 0b0011ull})
      for (std::uint64_t s : {0b1001ull, 0b0110ull})
        CHECK(std::abs(at(d, s)) == 1.0);
    CHECK(at(0b1100, 0b0011) == 0.0);
    CHECK(at(0b1001, 0b0110) == 0.0);
  }

  SECTION("periodic boundary on two sites keeps the single bond") {
    const OperatorMatrix ring = build_hamiltonian({2, 1.0, 4.0, Boundary::periodic}, basis);
    CHECK((ring.entries - h.entries).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("t = u = 0 gives the zero matrix") {
  const SectorBasis basis = SectorBasis::build(2, 2, 0);
  const OperatorMatrix h = build_hamiltonian({2, 0.0, 0.0, Boundary::open}, basis);
  CHECK(h.entries.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hamiltonian is hermitian and matches the full-space block") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coupling(-3.0, 3.0);
  for (int round = 0; round < 4; ++round) {
    const HubbardParams params{3, coupling(rng), coupling(rng), Boundary::periodic};
    const SectorBasis basis = SectorBasis::build(3, 3, 1);
    const OperatorMatrix h = build_hamiltonian(params, basis);
    CHECK(h.is_hermitian(1e-12));

    const Eigen::MatrixXd full = full_hamiltonian(params);
    for (Eigen::Index a = 0; a < basis.size(); ++a)
      for (Eigen::Index b = 0; b < basis.size(); ++b)
        CHECK_THAT(h.entries(a, b).real(),
                   WithinAbs(full(basis.state(a).pattern(), basis.state(b).pattern()),
                             1e-12));
  }
}

TEST_CASE("hamiltonian commutes with the number and sz operators") {
  const HubbardParams params{2, 1.3, -2.1, Boundary::open};
  const Eigen::MatrixXd h = full_hamiltonian(params);
  const Eigen::MatrixXd n = full_space_number_matrix(2);
  const Eigen::MatrixXd sz = full_space_two_sz_matrix(2);
  CHECK((h * n - n * h).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((h * sz - sz * h).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("two-site singlet sector spectrum is known in closed form") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coupling(0.2, 6.0);
  const SectorBasis basis = SectorBasis::build(2, 2, 0);
  for (int round = 0; round < 6; ++round) {
    const double t = coupling(rng), u = coupling(rng) - 3.0;
    const OperatorMatrix h = build_hamiltonian({2, t, u, Boundary::open}, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries);
    const double root = std::sqrt(u * u + 16.0 * t * t);
    std::vector<double> expected{(u - root) / 2.0, 0.0, u, (u + root) / 2.0};
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 4; ++k)
      CHECK_THAT(solver.eigenvalues()(k), WithinAbs(expected[k], 1e-9));
  }
}

TEST_CASE("eigenvalues are invariant under the sign of t on bipartite chains") {
  for (int sites : {2, 3, 4}) {
    const SectorBasis basis = SectorBasis::build(sites, sites, sites % 2);
    const OperatorMatrix plus = build_hamiltonian({sites, 1.0, 2.5, Boundary::open}, basis);
    const OperatorMatrix minus = build_hamiltonian({sites, -1.0, 2.5, Boundary::open}, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sp(plus.entries), sm(minus.entries);
    CHECK((sp.eigenvalues() - sm.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("ground state of the two-site chain") {
  const SectorBasis basis = SectorBasis::build(2, 2, 0);

  SECTION("u = 0: energy -2t, all amplitudes of magnitude 1/2") {
    const GroundState gs = ground_state(build_hamiltonian({2, 1.0, 0.0, Boundary::open}, basis));
    CHECK_THAT(gs.energy, WithinAbs(-2.0, 1e-12));
    for (Eigen::Index i = 0; i < 4; ++i)
      CHECK_THAT(std::abs(gs.wf.amplitude(i)), WithinAbs(0.5, 1e-12));
    CHECK(gs.wf.is_normalized());
  }

  SECTION("u/t = 4: energy matches the singlet-block closed form") {
    const GroundState gs = ground_state(build_hamiltonian({2, 1.0, 4.0, Boundary::open}, basis));
    CHECK_THAT(gs.energy, WithinAbs(oracles::singlet_block(4.0).energy, 1e-12));
    CHECK_THAT(gs.energy, WithinAbs(2.0 - 2.0 * std::sqrt(2.0), 1e-12));
  }

  SECTION("t = 0, u > 0: no hopping, ground energy 0") {
    // the lowest level is 2-fold degenerate (the singly occupied states
    // do not mix at t=0), so a unique state is refused
    const OperatorMatrix h = build_hamiltonian({2, 0.0, 5.0, Boundary::open}, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries);
    CHECK_THAT(solver.eigenvalues()(0), WithinAbs(0.0, 1e-12));
    CHECK_THROWS_AS(ground_state(h), DegeneracyError);
  }

  SECTION("phase fixing makes the run deterministic") {
    const GroundState g1 = ground_state(build_hamiltonian({2, 1.0, 1.5, Boundary::open}, basis));
    const GroundState g2 = ground_state(build_hamiltonian({2, 1.0, 1.5, Boundary::open}, basis));
    CHECK((g1.wf.amplitudes() - g2.wf.amplitudes()).norm() == 0.0);
  }
}

TEST_CASE("ground_state rejects non-hermitian input") {
  const SectorBasis basis = SectorBasis::build(2, 2, 0);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(4, 4);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(ground_state(OperatorMatrix{basis, bad}), std::invalid_argument);
}

TEST_CASE("ebit weights of the two-site ground state") {
  const SectorBasis basis = SectorBasis::build(2, 2, 0);

  SECTION("u = 0 splits evenly") {
    const GroundState gs = ground_state(build_hamiltonian({2, 1.0, 0.0, Boundary::open}, basis));
    const EbitWeights w = ebit_weights(gs.wf);
    CHECK_THAT(w.a_mag, WithinAbs(1.0 / std::sqrt(2.0), 1e-12));
    CHECK_THAT(w.b_mag, WithinAbs(1.0 / std::sqrt(2.0), 1e-12));
  }

  SECTION("u/t = 1000 leaves almost no charge weight") {
    const GroundState gs = ground_state(build_hamiltonian({2, 1.0, 1000.0, Boundary::open}, basis));
    const EbitWeights w = ebit_weights(gs.wf);
    CHECK(w.a_mag < 0.01);
    CHECK(w.b_mag > 0.999);
  }

  SECTION("pure charge ebit decomposes as (1, 0)") {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
    amps(basis.index_of_pattern(0b1100)) = 1.0 / std::sqrt(2.0);
    amps(basis.index_of_pattern(0b0011)) = 1.0 / std::sqrt(2.0);
    const EbitWeights w = ebit_weights(WaveFunction(basis, amps));
    CHECK_THAT(w.a_mag, WithinAbs(1.0, 1e-12));
    CHECK_THAT(w.b_mag, WithinAbs(0.0, 1e-12));
  }

  SECTION("asymmetric pair magnitudes are rejected") {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
    amps(basis.index_of_pattern(0b1100)) = 0.8;
    amps(basis.index_of_pattern(0b0011)) = 0.6;
    CHECK_THROWS_AS(ebit_weights(WaveFunction(basis, amps)), AsymmetricStateError);
  }

  SECTION("weights agree with the singlet-block closed form") {
    for (double u : {-6.0, -1.0, 2.0, 8.0}) {
      const GroundState gs = ground_state(build_hamiltonian({2, 1.0, u, Boundary::open}, basis));
      const EbitWeights w = ebit_weights(gs.wf);
      const oracles::SingletBlock ref = oracles::singlet_block(u);
      CHECK_THAT(w.a_mag, WithinAbs(std::sqrt(2.0) * ref.a, 1e-10));
      CHECK_THAT(w.b_mag, WithinAbs(std::sqrt(2.0) * std::abs(ref.b), 1e-10));
    }
  }
}

TEST_CASE("ebit weight sweep: closure and monotonicity") {
  std::vector<double> grid;
  for (int i = 0; i <= 80; ++i) grid.push_back(-10.0 + 0.25 * i);
  const auto rows = ebit_weight_sweep(grid);
  REQUIRE(rows.size() == grid.size());

  double previous = 2.0;
  for (const WeightsPoint& row : rows) {
    const double a2 = row.weights.a_mag * row.weights.a_mag;
    CHECK_THAT(a2 + row.weights.b_mag * row.weights.b_mag, WithinAbs(1.0, 1e-10));
    CHECK(a2 < previous + 1e-12);  // charge weight falls as u grows
    previous = a2;
  }
}
