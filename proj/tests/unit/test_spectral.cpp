// Copyright 2026 The fermicluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fermicluster/model.hpp"
#include "fermicluster/spectral.hpp"
#include "taylor_expm.hpp"

using namespace fermicluster;
using model::OperatorMatrix;
using model::OperatorRole;

namespace {

OperatorMatrix random_hermitian(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    CMatrix a(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            a(r, c) = Complex(g(rng), g(rng));
        }
    }
    return OperatorMatrix((a + a.adjoint()) / 2.0, "random", OperatorRole::hermitian);
}

}  // namespace

TEST(Diagonalize, TwoByTwo) {
    CMatrix a(2, 2);
    a << 0, -1, -1, 0;
    const auto s = spectral::diagonalize(OperatorMatrix(a, "t", OperatorRole::hermitian));
    EXPECT_NEAR(s.eigenvalues(0), -1.0, 1e-15);
    EXPECT_NEAR(s.eigenvalues(1), 1.0, 1e-15);
    EXPECT_EQ(s.basis_tag, "t");
}

TEST(Diagonalize, ReconstructsAndFixesPhase) {
    const auto h = random_hermitian(12, 3);
    const auto s = spectral::diagonalize(h);
    const CMatrix rebuilt = s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
    EXPECT_LT((rebuilt - h.entries()).cwiseAbs().maxCoeff(), 1e-12);
    for (Eigen::Index k = 0; k < s.eigenvectors.cols(); ++k) {
        Eigen::Index best = 0;
        s.eigenvectors.col(k).cwiseAbs().maxCoeff(&best);
        EXPECT_NEAR(s.eigenvectors(best, k).imag(), 0.0, 1e-14);
        EXPECT_GT(s.eigenvectors(best, k).real(), 0.0);
    }
}

TEST(GroundState, TwoWellChain) {
    const auto g = spectral::ground_state(model::leapfrog_1d(2, 1.0));
    EXPECT_NEAR(g.energy, -2.0, 1e-12);
    // Sector order 1100, 0110, 1001, 0011.
    CVector expected(4);
    expected << 0.5, -0.5, 0.5, 0.5;
    EXPECT_LT((g.vector - expected).norm(), 1e-12);
    EXPECT_NEAR(g.gap, 2.0, 1e-12);
}

TEST(GroundState, ChainEnergiesAndGap) {
    for (int n = 1; n <= 8; ++n) {
        const auto g = spectral::ground_state(model::leapfrog_1d(n, 1.0));
        EXPECT_NEAR(g.energy, -n, 1e-9);
        EXPECT_EQ(g.degeneracy, 1);
        EXPECT_NEAR(g.gap, 2.0, 1e-9);
    }
    EXPECT_NEAR(spectral::ground_state(model::cluster_hamiltonian(3, 1.0)).energy, -3.0, 1e-12);
}

TEST(GroundState, DegenerateThrows) {
    const auto zero = OperatorMatrix(CMatrix::Zero(3, 3), "z", OperatorRole::hermitian);
    EXPECT_EQ(spectral::ground_degeneracy(spectral::diagonalize(zero)), 3);
    EXPECT_THROW(spectral::ground_state(zero), spectral::DegenerateGroundState);
}

TEST(Expm, MatchesTaylorOracle) {
    for (int d : {2, 5, 16}) {
        const auto h = random_hermitian(d, static_cast<std::uint64_t>(d));
        for (double t : {0.0, 0.3, -1.7, 4.0}) {
            const auto u = spectral::expm(h, t);
            EXPECT_EQ(u.role(), OperatorRole::unitary);
            EXPECT_LT((u.entries() - oracle::taylor_expm(h.entries(), t)).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(Expm, GroupLaw) {
    const auto h = random_hermitian(8, 11);
    const auto a = spectral::expm(h, 0.4);
    const auto b = spectral::expm(h, 1.1);
    const auto ab = spectral::expm(h, 1.5);
    EXPECT_LT(model::max_abs_difference(model::compose(a, b), ab), 1e-10);
    EXPECT_LT(model::max_abs_difference(model::compose(a, spectral::expm(h, -0.4)),
                                        OperatorMatrix::identity(8, h.basis_tag())),
              1e-10);
}

TEST(Propagate, LastStepLeftmost) {
    const auto h1 = random_hermitian(4, 1);
    const auto h2 = random_hermitian(4, 2);
    model::PulseSchedule sched;
    sched.add(h1, 0.3);
    sched.add(h2, 0.8);
    const CMatrix expected = oracle::taylor_expm(h2.entries(), 0.8) * oracle::taylor_expm(h1.entries(), 0.3);
    EXPECT_LT((spectral::propagate(sched).entries() - expected).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Expectation, NormalizesState) {
    const auto h = model::leapfrog_1d(1, 1.0);
    CVector psi(2);
    psi << 3.0, 3.0;
    EXPECT_NEAR(spectral::expectation(h, psi), -1.0, 1e-15);
}
