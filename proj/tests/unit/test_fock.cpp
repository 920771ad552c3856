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

#include <vector>

#include <Eigen/Sparse>

#include "fermicluster/fock.hpp"
#include "jw_oracle.hpp"

using namespace fermicluster;
using fock::FockState;
using fock::ModeIndex;

namespace {

fock::ModeOrdering six_sites() {
    const std::vector<int> sites = {1, 2, 3, 4, 5, 6};
    return fock::spinless_modes(sites);
}

fock::ModeOrdering chain2() {
    const std::vector<int> sites = {1, 3, 4, 6};
    return fock::spinless_modes(sites);
}

FockState occ(const fock::ModeOrdering &o, std::initializer_list<int> sites) {
    FockState s{0, static_cast<unsigned>(o.size())};
    for (int site : sites) {
        s.occupation |= std::uint64_t{1} << o.require({site, 0});
    }
    return s;
}

}  // namespace

TEST(ModeOrdering, SortsLexicographically) {
    fock::ModeOrdering o({{3, 1}, {1, 0}, {3, 0}});
    EXPECT_EQ(o[0], (ModeIndex{1, 0}));
    EXPECT_EQ(o[1], (ModeIndex{3, 0}));
    EXPECT_EQ(o[2], (ModeIndex{3, 1}));
    EXPECT_FALSE(o.position({2, 0}).has_value());
    EXPECT_THROW(o.require({2, 0}), std::out_of_range);
}

TEST(Creation, VacuumHasEmptyString) {
    const auto o = six_sites();
    const auto r = fock::apply_creation(o, occ(o, {}), {1, 0});
    EXPECT_EQ(r.state, occ(o, {1}));
    EXPECT_EQ(r.sign, 1);
    EXPECT_EQ(fock::to_string(r.state), "100000");
}

TEST(Creation, OnePredecessorGivesMinus) {
    const auto o = six_sites();
    const auto r = fock::apply_creation(o, occ(o, {3}), {4, 0});
    EXPECT_EQ(r.state, occ(o, {3, 4}));
    EXPECT_EQ(r.sign, -1);
}

TEST(Creation, PauliExclusion) {
    const auto o = six_sites();
    EXPECT_THROW(fock::apply_creation(o, occ(o, {4}), {4, 0}), fock::ModeOccupied);
}

TEST(Annihilation, Examples) {
    const auto o = six_sites();
    auto r = fock::apply_annihilation(o, occ(o, {1}), {1, 0});
    EXPECT_EQ(r.state, occ(o, {}));
    EXPECT_EQ(r.sign, 1);
    r = fock::apply_annihilation(o, occ(o, {1, 4}), {4, 0});
    EXPECT_EQ(r.state, occ(o, {1}));
    EXPECT_EQ(r.sign, -1);
    EXPECT_THROW(fock::apply_annihilation(o, occ(o, {}), {3, 0}), fock::ModeEmpty);
}

TEST(Hopping, Examples) {
    const auto o = chain2();
    auto r = fock::hopping_element(o, occ(o, {3, 4}), {1, 0}, {4, 0});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->state, occ(o, {1, 3}));
    EXPECT_EQ(r->sign, -1);

    EXPECT_FALSE(fock::hopping_element(o, occ(o, {1, 3}), {1, 0}, {4, 0}).has_value());

    // The dense oracle fixes this sign at +1.
    r = fock::hopping_element(o, occ(o, {1, 6}), {4, 0}, {6, 0});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->state, occ(o, {1, 4}));
    EXPECT_EQ(r->sign, 1);
}

TEST(Hopping, MatchesDenseOracleOnFourModes) {
    const int m = 4;
    for (int to = 0; to < m; ++to) {
        for (int from = 0; from < m; ++from) {
            if (to == from) {
                continue;
            }
            const CMatrix dense = oracle::creation(to, m) * oracle::annihilation(from, m);
            for (std::uint64_t s = 0; s < 16; ++s) {
                const auto r = fock::hopping_element(FockState{s, m}, static_cast<unsigned>(to),
                                                     static_cast<unsigned>(from));
                const CVector col = dense.col(static_cast<Eigen::Index>(s));
                if (!r) {
                    EXPECT_LT(col.norm(), 1e-15);
                    continue;
                }
                EXPECT_EQ(col(static_cast<Eigen::Index>(r->state.occupation)).real(), r->sign);
                EXPECT_NEAR(col.norm(), 1.0, 1e-15);
            }
        }
    }
}

TEST(Anticommutation, LadderOperatorsOnEightModes) {
    using Sparse = Eigen::SparseMatrix<Complex>;
    const int m = 8;
    const Eigen::Index d = 1 << m;
    std::vector<Sparse> f(m, Sparse(d, d));
    for (int k = 0; k < m; ++k) {
        for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(d); ++s) {
            try {
                const auto r = fock::apply_annihilation(FockState{s, m}, static_cast<unsigned>(k));
                f[k].insert(static_cast<Eigen::Index>(r.state.occupation), static_cast<Eigen::Index>(s)) = r.sign;
            } catch (const fock::ModeEmpty &) {
            }
        }
        EXPECT_EQ((CMatrix(f[k]) - oracle::annihilation(k, m)).cwiseAbs().maxCoeff(), 0.0);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const CMatrix ff = CMatrix(Sparse(f[i] * f[j]) + Sparse(f[j] * f[i]));
            const Sparse fjd = f[j].adjoint();
            const CMatrix ffd = CMatrix(Sparse(f[i] * fjd) + Sparse(fjd * f[i]));
            const CMatrix expected = i == j ? CMatrix(CMatrix::Identity(d, d)) : CMatrix(CMatrix::Zero(d, d));
            EXPECT_EQ(ff.cwiseAbs().maxCoeff(), 0.0);
            EXPECT_EQ((ffd - expected).cwiseAbs().maxCoeff(), 0.0);
        }
    }
}

TEST(Sector, ChainSitesAndDimensions) {
    EXPECT_EQ(fock::chain_sites(1), (std::vector<int>{1, 4}));
    EXPECT_EQ(fock::chain_sites(2), (std::vector<int>{1, 3, 4, 6}));
    EXPECT_EQ(fock::chain_sites(3), (std::vector<int>{1, 3, 4, 5, 6, 8}));
    const auto s1 = fock::build_sector(1);
    ASSERT_EQ(s1.size(), 2u);
    EXPECT_EQ(fock::to_string(s1.state(0)), "10");
    EXPECT_EQ(fock::to_string(s1.state(1)), "01");
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(fock::build_sector(n).size(), std::size_t{1} << n);
    }
}

TEST(Sector, TwoWellsSortedByBitmask) {
    const auto s = fock::build_sector(2);
    std::vector<std::string> names;
    for (const auto &st : s.states()) {
        names.push_back(fock::to_string(st));
        EXPECT_TRUE(s.satisfies_constraint(st));
        EXPECT_EQ(st.particle_count(), 2);
    }
    EXPECT_EQ(names, (std::vector<std::string>{"1100", "0110", "1001", "0011"}));
    EXPECT_EQ(s.index_of(s.state(2)), std::optional<std::size_t>{2});
    EXPECT_FALSE(s.index_of(std::uint64_t{0b0101}).has_value());
    const auto wells = s.wells();
    ASSERT_EQ(wells.size(), 2u);
    EXPECT_EQ(s.ordering()[wells[0].first], (ModeIndex{1, 0}));
    EXPECT_EQ(s.ordering()[wells[0].second], (ModeIndex{4, 0}));
    EXPECT_EQ(s.ordering()[wells[1].first], (ModeIndex{3, 0}));
    EXPECT_EQ(s.ordering()[wells[1].second], (ModeIndex{6, 0}));
}
