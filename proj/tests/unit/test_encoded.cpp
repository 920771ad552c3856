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
#include <numbers>

#include "fermicluster/encoded.hpp"
#include "fermicluster/spectral.hpp"
#include "qubit_oracle.hpp"

using namespace fermicluster;
using encoded::Axis;

TEST(RegisterMap, TwoWellBijection) {
    const auto map = encoded::chain_register(2);
    EXPECT_EQ(map.num_qubits(), 2);
    EXPECT_EQ(map.dim(), 4u);
    // 1100 -> 00, 0110 -> 10, 1001 -> 01, 0011 -> 11.
    EXPECT_EQ(map.encoded_index(0), 0u);
    EXPECT_EQ(map.encoded_index(1), 2u);
    EXPECT_EQ(map.encoded_index(2), 1u);
    EXPECT_EQ(map.encoded_index(3), 3u);
    for (std::uint64_t b = 0; b < 4; ++b) {
        EXPECT_EQ(map.encoded_index(map.sector_index(b)), b);
        EXPECT_EQ(map.coefficient(b), 1);
    }
    const CMatrix iso = map.isometry();
    EXPECT_LT((iso.adjoint() * iso - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RegisterMap, RoundTrips) {
    for (int n = 1; n <= 5; ++n) {
        const auto map = encoded::chain_register(n);
        const CVector v = CVector::Random(static_cast<Eigen::Index>(map.dim()));
        EXPECT_LT((map.to_sector(map.to_encoded(v)) - v).norm(), 1e-15);
        const auto h = model::leapfrog_1d(n, 1.0);
        EXPECT_LT(model::max_abs_difference(map.to_sector(map.to_encoded(h)), h), 1e-15);
        EXPECT_EQ(map.to_encoded(h).basis_tag(), map.encoded_tag());
    }
}

TEST(RegisterMap, GroundStateIsFourAmplitudeFormula) {
    const auto map = encoded::chain_register(2);
    const auto g = spectral::ground_state(model::leapfrog_1d(2, 1.0));
    CVector expected(4);
    expected << 0.5, 0.5, -0.5, 0.5;
    EXPECT_LT((map.to_encoded(g.vector) - expected).norm(), 1e-12);
}

TEST(EncodedPaulis, MatchQubitOperators) {
    for (int n = 1; n <= 6; ++n) {
        const auto map = encoded::chain_register(n);
        for (int j = 0; j < n; ++j) {
            for (char c : {'X', 'Y', 'Z'}) {
                const Axis axis = c == 'X' ? Axis::X : (c == 'Y' ? Axis::Y : Axis::Z);
                const auto p = map.to_encoded(encoded::encoded_pauli(map, axis, j));
                EXPECT_LT((p.entries() - oracle::single(oracle::gate(c), j, n)).cwiseAbs().maxCoeff(), 1e-14)
                    << n << " " << j << " " << c;
            }
        }
    }
}

TEST(EncodedPaulis, AlgebraIdentities) {
    const int n = 4;
    const auto map = encoded::chain_register(n);
    const auto d = static_cast<Eigen::Index>(map.dim());
    const CMatrix id = CMatrix::Identity(d, d);
    for (int j = 0; j < n; ++j) {
        const CMatrix x = encoded::encoded_x(map, j).entries();
        const CMatrix y = encoded::encoded_y(map, j).entries();
        const CMatrix z = encoded::encoded_z(map, j).entries();
        EXPECT_LT((x * x - id).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LT((y * y - id).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LT((x * y - kI * z).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LT((x * z + z * x).cwiseAbs().maxCoeff(), 1e-14);
        for (int k = 0; k < n; ++k) {
            if (k == j) {
                continue;
            }
            const CMatrix xk = encoded::encoded_x(map, k).entries();
            EXPECT_LT((x * xk - xk * x).cwiseAbs().maxCoeff(), 1e-14);
            EXPECT_LT((z * xk - xk * z).cwiseAbs().maxCoeff(), 1e-14);
        }
    }
}

TEST(EncodedGates, RotationsAndHadamard) {
    const auto map = encoded::chain_register(3);
    for (double theta : {0.0, 0.4, -2.1}) {
        const auto rz = map.to_encoded(encoded::encoded_rotation(map, Axis::Z, theta, 1));
        EXPECT_LT((rz.entries() - oracle::single(oracle::rz(theta), 1, 3)).cwiseAbs().maxCoeff(), 1e-14);
        const auto rx = map.to_encoded(encoded::encoded_rotation(map, Axis::X, theta, 2));
        EXPECT_LT((rx.entries() - oracle::single(oracle::rx(theta), 2, 3)).cwiseAbs().maxCoeff(), 1e-14);
    }
    const auto h = map.to_encoded(encoded::encoded_hadamard(map, 0));
    EXPECT_LT((h.entries() - oracle::single(oracle::gate('H'), 0, 3)).cwiseAbs().maxCoeff(), 1e-14);
    const auto id = encoded::encoded_rotation(map, Axis::Y, 0.0, 0);
    EXPECT_LT(model::max_abs_difference(id, model::OperatorMatrix::identity(8, id.basis_tag())), 1e-15);
}

TEST(EncodedGates, TermsAgreeWithMatrices) {
    const auto map = encoded::chain_register(3);
    const CVector psi = CVector::Random(8);
    const auto &basis = map.sector();
    for (int j = 0; j < 3; ++j) {
        const auto h = encoded::encoded_hadamard(map, j);
        EXPECT_LT((h.entries() * psi - model::apply_terms(basis, encoded::hadamard_terms(map, j), psi)).norm(),
                  1e-14);
        const auto r = encoded::encoded_rotation(map, Axis::Z, 0.3, j);
        EXPECT_LT(
            (r.entries() * psi - model::apply_terms(basis, encoded::rotation_terms(map, Axis::Z, 0.3, j), psi))
                .norm(),
            1e-14);
    }
}

TEST(Projectors, CompleteAndOrthogonal) {
    const auto map = encoded::chain_register(3);
    for (int j = 0; j < 3; ++j) {
        const CMatrix p0 = encoded::projector(map, j, 0).entries();
        const CMatrix p1 = encoded::projector(map, j, 1).entries();
        EXPECT_LT((p0 + p1 - CMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_LT((p0 * p1).cwiseAbs().maxCoeff(), 1e-15);
    }
    EXPECT_THROW(encoded::projector(map, 0, 2), encoded::InvalidOutcome);
}

TEST(Measurement, TwoQubitGroundStateBranches) {
    const auto map = encoded::chain_register(2);
    const auto g = spectral::ground_state(model::leapfrog_1d(2, 1.0));
    const auto probs = encoded::outcome_probabilities(map, g.vector, 0);
    EXPECT_NEAR(probs[0], 0.5, 1e-12);
    EXPECT_NEAR(probs[1], 0.5, 1e-12);
    const auto m0 = encoded::measure_encoded_forced(map, g.vector, 0, 0);
    const auto m1 = encoded::measure_encoded_forced(map, g.vector, 0, 1);
    const double r = 1.0 / std::sqrt(2.0);
    CVector zero_plus(4);
    zero_plus << r, r, 0, 0;
    CVector minus_one_minus(4);
    minus_one_minus << 0, 0, -r, r;
    EXPECT_LT((map.to_encoded(m0.post_state) - zero_plus).norm(), 1e-12);
    EXPECT_LT((map.to_encoded(m1.post_state) - minus_one_minus).norm(), 1e-12);
    EXPECT_TRUE(m0.record.forced);
    EXPECT_NEAR(m1.record.probability, 0.5, 1e-12);
}

TEST(Measurement, SeededSamplingIsReproducible) {
    const auto map = encoded::chain_register(2);
    const auto g = spectral::ground_state(model::leapfrog_1d(2, 1.0));
    const double p0 = encoded::outcome_probabilities(map, g.vector, 1)[0];
    int zeros = 0;
    for (std::uint64_t s = 0; s < 400; ++s) {
        const auto a = encoded::measure_encoded(map, g.vector, 1, s);
        const auto b = encoded::measure_encoded(map, g.vector, 1, s);
        EXPECT_EQ(a.record.outcome, b.record.outcome);
        EXPECT_EQ(a.post_state, b.post_state);
        EXPECT_EQ(a.record.seed, s);
        zeros += a.record.outcome == 0;
        // Rule: outcome 0 iff u < p0 for the first draw.
        std::mt19937_64 rng(s);
        EXPECT_EQ(a.record.outcome, encoded::uniform_unit(rng) < p0 ? 0 : 1);
    }
    EXPECT_GT(zeros, 150);
    EXPECT_LT(zeros, 250);
}

TEST(Measurement, ZeroNormBranchThrows) {
    const auto map = encoded::chain_register(1);
    CVector psi(2);
    psi << 1.0, 0.0;
    EXPECT_THROW(encoded::measure_encoded_forced(map, psi, 0, 1), encoded::ZeroNorm);
    EXPECT_EQ(encoded::measure_encoded(map, psi, 0, 5).record.outcome, 0);
}
