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

#include "fermicluster/fock.hpp"

#include <algorithm>
#include <sstream>

namespace fermicluster::fock {

std::string to_string(const ModeIndex &mode) {
    std::ostringstream out;
    out << mode.site;
    if (mode.species != 0) {
        out << "/" << mode.species;
    }
    return out.str();
}

ModeOrdering::ModeOrdering(std::vector<ModeIndex> modes) : modes_(std::move(modes)) {
    std::sort(modes_.begin(), modes_.end());
    if (std::adjacent_find(modes_.begin(), modes_.end()) != modes_.end()) {
        throw std::invalid_argument("ModeOrdering: duplicate mode");
    }
    if (modes_.size() > kMaxModes) {
        throw std::invalid_argument("ModeOrdering: more than 64 modes");
    }
}

std::optional<unsigned> ModeOrdering::position(ModeIndex mode) const {
    auto it = std::lower_bound(modes_.begin(), modes_.end(), mode);
    if (it == modes_.end() || *it != mode) {
        return std::nullopt;
    }
    return static_cast<unsigned>(it - modes_.begin());
}

unsigned ModeOrdering::require(ModeIndex mode) const {
    auto p = position(mode);
    if (!p) {
        throw std::out_of_range("mode " + to_string(mode) + " is not part of the ordering");
    }
    return *p;
}

ModeOrdering spinless_modes(std::span<const int> sites) {
    std::vector<ModeIndex> modes;
    modes.reserve(sites.size());
    for (int s : sites) {
        modes.push_back({s, 0});
    }
    return ModeOrdering(std::move(modes));
}

std::string to_string(const FockState &state) {
    std::string out(state.mode_count, '0');
    for (unsigned k = 0; k < state.mode_count; ++k) {
        if (state.occupied(k)) {
            out[k] = '1';
        }
    }
    return out;
}

ModeOccupied::ModeOccupied(unsigned mode)
    : std::domain_error("creation on occupied mode " + std::to_string(mode)) {
}

ModeEmpty::ModeEmpty(unsigned mode) : std::domain_error("annihilation on empty mode " + std::to_string(mode)) {
}

SignedState apply_creation(FockState state, unsigned mode) {
    if (mode >= state.mode_count) {
        throw std::out_of_range("creation mode out of range");
    }
    if (state.occupied(mode)) {
        throw ModeOccupied(mode);
    }
    int sign = jordan_wigner_sign(state.occupation, mode);
    state.occupation |= std::uint64_t{1} << mode;
    return {state, sign};
}

SignedState apply_annihilation(FockState state, unsigned mode) {
    if (mode >= state.mode_count) {
        throw std::out_of_range("annihilation mode out of range");
    }
    if (!state.occupied(mode)) {
        throw ModeEmpty(mode);
    }
    int sign = jordan_wigner_sign(state.occupation, mode);
    state.occupation &= ~(std::uint64_t{1} << mode);
    return {state, sign};
}

std::optional<SignedState> hopping_element(FockState state, unsigned to, unsigned from) {
    if (to >= state.mode_count || from >= state.mode_count) {
        throw std::out_of_range("hopping mode out of range");
    }
    if (!state.occupied(from)) {
        return std::nullopt;
    }
    int sign = jordan_wigner_sign(state.occupation, from);
    state.occupation &= ~(std::uint64_t{1} << from);
    if (state.occupied(to)) {
        return std::nullopt;
    }
    sign *= jordan_wigner_sign(state.occupation, to);
    state.occupation |= std::uint64_t{1} << to;
    return SignedState{state, sign};
}

SignedState apply_creation(const ModeOrdering &ordering, FockState state, ModeIndex mode) {
    return apply_creation(state, ordering.require(mode));
}

SignedState apply_annihilation(const ModeOrdering &ordering, FockState state, ModeIndex mode) {
    return apply_annihilation(state, ordering.require(mode));
}

std::optional<SignedState> hopping_element(
    const ModeOrdering &ordering, FockState state, ModeIndex to, ModeIndex from) {
    return hopping_element(state, ordering.require(to), ordering.require(from));
}

SectorBasis::SectorBasis(ModeOrdering ordering, std::vector<OccupancyGroup> groups, std::string tag)
    : ordering_(std::move(ordering)), groups_(std::move(groups)), tag_(std::move(tag)) {
    const auto mode_count = static_cast<unsigned>(ordering_.size());
    std::uint64_t seen = 0;
    std::size_t total = 1;
    for (const auto &g : groups_) {
        if (g.empty()) {
            throw std::invalid_argument("SectorBasis: empty occupancy group");
        }
        for (unsigned m : g) {
            if (m >= mode_count) {
                throw std::out_of_range("SectorBasis: group mode out of range");
            }
            if ((seen >> m) & 1u) {
                throw std::invalid_argument("SectorBasis: mode appears in two groups");
            }
            seen |= std::uint64_t{1} << m;
        }
        total *= g.size();
    }

    // Mixed-radix enumeration: one chosen mode per group.
    states_.reserve(total);
    std::vector<std::size_t> digit(groups_.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::uint64_t occ = 0;
        for (std::size_t g = 0; g < groups_.size(); ++g) {
            occ |= std::uint64_t{1} << groups_[g][digit[g]];
        }
        states_.push_back({occ, mode_count});
        for (std::size_t g = groups_.size(); g-- > 0;) {
            if (++digit[g] < groups_[g].size()) {
                break;
            }
            digit[g] = 0;
        }
    }
    std::sort(states_.begin(), states_.end(),
              [](const FockState &a, const FockState &b) { return a.occupation < b.occupation; });
}

std::optional<std::size_t> SectorBasis::index_of(std::uint64_t occupation) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), occupation,
                               [](const FockState &s, std::uint64_t v) { return s.occupation < v; });
    if (it == states_.end() || it->occupation != occupation) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - states_.begin());
}

std::optional<std::size_t> SectorBasis::index_of(FockState state) const {
    if (state.mode_count != ordering_.size()) {
        return std::nullopt;
    }
    return index_of(state.occupation);
}

std::vector<DoubleWell> SectorBasis::wells() const {
    std::vector<DoubleWell> out;
    out.reserve(groups_.size());
    for (const auto &g : groups_) {
        if (g.size() != 2) {
            throw std::logic_error("SectorBasis: occupancy group is not a double well");
        }
        out.push_back({g[0], g[1]});
    }
    return out;
}

bool SectorBasis::satisfies_constraint(FockState state) const {
    std::uint64_t covered = 0;
    for (const auto &g : groups_) {
        int count = 0;
        for (unsigned m : g) {
            count += state.occupied(m);
            covered |= std::uint64_t{1} << m;
        }
        if (count != 1) {
            return false;
        }
    }
    return (state.occupation & ~covered) == 0;
}

std::vector<int> chain_sites(int num_encoded_qubits) {
    if (num_encoded_qubits < 1) {
        throw std::invalid_argument("chain needs at least one encoded qubit");
    }
    std::vector<int> sites;
    const int last = 2 * num_encoded_qubits + 2;
    for (int s = 1; s <= last; ++s) {
        if (s != 2 && s != 2 * num_encoded_qubits + 1) {
            sites.push_back(s);
        }
    }
    return sites;
}

SectorBasis build_well_sector(
    std::span<const int> sites, std::span<const std::pair<int, int>> wells, std::string tag) {
    ModeOrdering ordering = spinless_modes(sites);
    std::vector<OccupancyGroup> groups;
    groups.reserve(wells.size());
    for (auto [a, b] : wells) {
        groups.push_back({ordering.require({a, 0}), ordering.require({b, 0})});
    }
    return SectorBasis(std::move(ordering), std::move(groups), std::move(tag));
}

SectorBasis build_sector(int num_encoded_qubits) {
    auto sites = chain_sites(num_encoded_qubits);
    std::vector<std::pair<int, int>> wells;
    for (int j = 0; j < num_encoded_qubits; ++j) {
        wells.push_back(chain_well_sites(j));
    }
    return build_well_sector(sites, wells, "chain/N=" + std::to_string(num_encoded_qubits));
}

}  // namespace fermicluster::fock
