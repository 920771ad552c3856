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
#include <random>
#include <set>
#include <vector>

#include "fermicluster/mbqc.hpp"
#include "fermicluster/qubit.hpp"
#include "qubit_oracle.hpp"

using namespace fermicluster;

namespace {

// Qubit-level replay of a chain protocol with the angles the run applied.
CVector oracle_chain(int n, const mbqc::ProtocolTranscript &t) {
    CVector psi = oracle::dressed_cluster(n);
    int remaining = n;
    for (const auto &step : t.steps) {
        psi = oracle::single(oracle::gate('H') * oracle::rz(step.applied_theta), 0, remaining) * psi;
        psi = oracle::project_first(psi, step.measurement.outcome);
        --remaining;
    }
    return psi;
}

CVector branch(double theta, int m) {
    const Complex e = std::exp(kI * theta);
    CVector v(2);
    if (m == 0) {
        v << 1.0 - e, 1.0 + e;
    } else {
        v << 1.0 + e, 1.0 - e;
    }
    return v;
}

}  // namespace

TEST(PauliFrame, ComposeAndLabel) {
    mbqc::PauliFrame a(3);
    a.flip_x(0);
    a.flip_z(0);
    a.flip_z(2);
    EXPECT_EQ(a.label(), "YIZ");
    mbqc::PauliFrame b(3);
    b.flip_x(1);
    EXPECT_EQ(a.compose(b).label(), "YXZ");
    EXPECT_EQ(a.compose(a), mbqc::PauliFrame(3));
    EXPECT_EQ(a.compose(b).compose(b), a);
    EXPECT_THROW(a.compose(mbqc::PauliFrame(2)), std::invalid_argument);
}

TEST(Seeds, DerivedSeedsAreStableAndDistinct) {
    EXPECT_EQ(mbqc::derive_seed(42, 3), mbqc::derive_seed(42, 3));
    std::set<std::uint64_t> seen;
    for (std::uint64_t base = 0; base < 4; ++base) {
        for (std::uint64_t k = 0; k < 64; ++k) {
            seen.insert(mbqc::derive_seed(base, k));
        }
    }
    EXPECT_EQ(seen.size(), 256u);
}

TEST(TeleportStep, BranchFormulas) {
    const auto map = encoded::chain_register(2);
    const auto gs = mbqc::chain_ground_state(map);
    for (double theta : {0.0, 0.7, -1.3, 2.9}) {
        for (int m = 0; m < 2; ++m) {
            const auto r = mbqc::teleport_step_forced(map, gs, 0, theta, m);
            EXPECT_NEAR(r.entry.measurement.probability, 0.5, 1e-12);
            EXPECT_TRUE(r.state.measured[0]);
            const CVector out = mbqc::unmeasured_state(map, r.state);
            EXPECT_GE(oracle::overlap(out, branch(theta, m)), 1 - 1e-12) << theta << " " << m;
        }
    }
    // theta = 0, m = 0 leaves |1>.
    const auto r = mbqc::teleport_step_forced(map, gs, 0, 0.0, 0);
    const CVector out = mbqc::unmeasured_state(map, r.state);
    EXPECT_NEAR(std::abs(out(1)) / out.norm(), 1.0, 1e-12);
}

TEST(TeleportStep, RejectsMeasuredQubit) {
    const auto map = encoded::chain_register(3);
    const auto gs = mbqc::chain_ground_state(map);
    const auto r = mbqc::teleport_step_forced(map, gs, 0, 0.2, 1);
    EXPECT_THROW(mbqc::teleport_step_forced(map, r.state, 0, 0.2, 0), mbqc::QubitAlreadyMeasured);
    EXPECT_THROW(mbqc::teleport_step(map, gs, 5, 0.2, 1), std::out_of_range);
}

TEST(RunChain, MatchesQubitOracleForEveryOutcome) {
    const std::vector<double> thetas = {0.3, -1.1, 2.0};
    const int n = 4;
    for (int code = 0; code < 8; ++code) {
        const std::vector<int> outcomes = {(code >> 2) & 1, (code >> 1) & 1, code & 1};
        const auto t = mbqc::run_chain_forced(n, thetas, outcomes);
        EXPECT_GE(oracle::overlap(t.output, oracle_chain(n, t)), 1 - 1e-10) << code;
        EXPECT_GE(qubit::state_fidelity(mbqc::ideal_chain_output(thetas), t.logical_output), 1 - 1e-9) << code;
        EXPECT_NEAR(t.remainder_overlap, 1.0, 1e-9);
    }
}

TEST(RunChain, PartialChainLeavesProductRemainder) {
    const std::vector<double> thetas = {0.9};
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto t = mbqc::run_chain(4, thetas, seed);
        EXPECT_EQ(t.output.size(), 8);
        EXPECT_NEAR(t.remainder_overlap, 1.0, 1e-9);
        EXPECT_GE(qubit::state_fidelity(mbqc::ideal_chain_output(thetas), t.logical_output), 1 - 1e-9);
    }
}

TEST(RunChain, ZeroAnglesGiveCliffordOutput) {
    const std::vector<double> thetas = {0.0, 0.0};
    const auto t = mbqc::run_chain(3, thetas, 17);
    // H H |+> = |+>.
    EXPECT_GE(qubit::state_fidelity(oracle::plus(1), t.logical_output), 1 - 1e-12);
}

TEST(RunChain, SeededReplayIsIdentical) {
    const std::vector<double> thetas = {0.4, 1.2, -0.6, 0.1};
    const auto a = mbqc::run_chain(5, thetas, 99);
    const auto b = mbqc::run_chain(5, thetas, 99);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t k = 0; k < a.steps.size(); ++k) {
        EXPECT_EQ(a.steps[k].measurement.outcome, b.steps[k].measurement.outcome);
        EXPECT_EQ(a.steps[k].measurement.seed, mbqc::derive_seed(99, k));
        EXPECT_EQ(a.steps[k].applied_theta, b.steps[k].applied_theta);
    }
    EXPECT_EQ(a.output, b.output);
    EXPECT_EQ(a.frame, b.frame);
}

TEST(RunChain, RejectsBadArguments) {
    const std::vector<double> three = {0.1, 0.2, 0.3};
    EXPECT_THROW(mbqc::run_chain(1, {}, 0), std::invalid_argument);
    EXPECT_THROW(mbqc::run_chain(3, three, 0), std::invalid_argument);
    const std::vector<int> one = {0};
    EXPECT_THROW(mbqc::run_chain_forced(4, three, one), std::invalid_argument);
}

TEST(Subgraph, ForcedBranchesMatchListedByproducts) {
    const auto table = mbqc::generate_byproduct_table();
    ASSERT_EQ(table.size(), 8u);
    const std::vector<std::string> expected = {"IX", "XI", "XY", "IZ", "ZI", "YX", "YZ", "ZY"};
    const std::vector<std::string> generic = {"IX", "XI", "II", "XX", "XX", "II", "XI", "IX"};
    std::set<std::string> used;
    for (int code = 0; code < 8; ++code) {
        const auto &e = table[static_cast<std::size_t>(code)];
        EXPECT_EQ(e.listed, expected[static_cast<std::size_t>(code)]);
        EXPECT_EQ(e.generic, generic[static_cast<std::size_t>(code)]);
        used.insert(e.listed);
        mbqc::SubgraphOptions opt;
        opt.forced = e.outcomes;
        const auto t = mbqc::run_subgraph(opt);
        EXPECT_EQ(t.outcomes, e.outcomes);
        EXPECT_NEAR(t.entropy_bits, 1.0, 1e-9);
        const CVector expected_out = oracle::paulis(e.listed) * t.reference;
        EXPECT_GE(oracle::overlap(expected_out, t.output), 1 - 1e-9) << code;
    }
    EXPECT_EQ(used.size(), 8u);
}

TEST(Subgraph, ReferenceMatchesOracle) {
    const CMatrix local = oracle::gate('H') * oracle::rz(std::numbers::pi / 2);
    const CVector ref = oracle::kron2(local, local) * oracle::cz(0, 1, 2) * oracle::plus(2);
    mbqc::SubgraphOptions opt;
    opt.forced = std::array<int, 3>{0, 0, 0};
    EXPECT_GE(oracle::overlap(mbqc::run_subgraph(opt).reference, ref), 1 - 1e-12);
}

TEST(Subgraph, MeasurementOrderDoesNotMatter) {
    mbqc::SubgraphOptions a;
    a.forced = std::array<int, 3>{1, 0, 1};
    mbqc::SubgraphOptions b = a;
    b.order = {2, 0, 1};
    EXPECT_GE(oracle::overlap(mbqc::run_subgraph(a).output, mbqc::run_subgraph(b).output), 1 - 1e-12);
    b.order = {0, 0, 1};
    EXPECT_THROW(mbqc::run_subgraph(b), std::invalid_argument);
}

TEST(Subgraph, GenericInputsGiveXTypeByproducts) {
    const auto table = mbqc::generate_byproduct_table();
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::array<std::array<Complex, 2>, 2> in{};
    for (auto &o : in) {
        o = {Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
        const double nrm = std::sqrt(std::norm(o[0]) + std::norm(o[1]));
        o[0] /= nrm;
        o[1] /= nrm;
    }
    for (const auto &e : table) {
        mbqc::SubgraphOptions opt;
        opt.forced = e.outcomes;
        opt.inputs = in;
        const auto t = mbqc::run_subgraph(opt);
        const auto matches = mbqc::matching_paulis(t.reference, t.output);
        ASSERT_EQ(matches.size(), 1u);
        EXPECT_EQ(matches.front(), e.generic);
    }
}

TEST(Subgraph, InvalidForcedOutcome) {
    mbqc::SubgraphOptions opt;
    opt.forced = std::array<int, 3>{0, 2, 0};
    EXPECT_THROW(mbqc::run_subgraph(opt), encoded::InvalidOutcome);
}

TEST(Subgraph, SeededRunsAreReproducible) {
    mbqc::SubgraphOptions opt;
    opt.seed = 1234;
    const auto a = mbqc::run_subgraph(opt);
    const auto b = mbqc::run_subgraph(opt);
    EXPECT_EQ(a.outcomes, b.outcomes);
    EXPECT_EQ(a.output, b.output);
}
