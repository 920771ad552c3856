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

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermicluster::fock {

/// A lattice mode: a 1-based site label plus a species index
/// (0 for spinless fermions, 0/1 for the two species of the CZ pulse).
struct ModeIndex {
    int site = 1;
    int species = 0;

    friend constexpr auto operator<=>(const ModeIndex &, const ModeIndex &) = default;
};

std::string to_string(const ModeIndex &mode);

inline constexpr std::size_t kMaxModes = 64;

/// Fixed total ordering of modes, lexicographic by (site, species).
/// Bit k of a FockState refers to modes()[k].
class ModeOrdering {
   public:
    ModeOrdering() = default;
    explicit ModeOrdering(std::vector<ModeIndex> modes);

    std::size_t size() const { return modes_.size(); }
    const ModeIndex &operator[](std::size_t k) const { return modes_[k]; }
    std::span<const ModeIndex> modes() const { return modes_; }

    std::optional<unsigned> position(ModeIndex mode) const;
    /// Like position(), but throws std::out_of_range for an unknown mode.
    unsigned require(ModeIndex mode) const;

    friend bool operator==(const ModeOrdering &, const ModeOrdering &) = default;

   private:
    std::vector<ModeIndex> modes_;
};

/// Spinless modes for the given site labels.
ModeOrdering spinless_modes(std::span<const int> sites);

struct FockState {
    std::uint64_t occupation = 0;
    unsigned mode_count = 0;

    bool occupied(unsigned mode) const { return (occupation >> mode) & 1u; }
    int particle_count() const { return std::popcount(occupation); }

    friend constexpr bool operator==(const FockState &, const FockState &) = default;
};

/// Renders the occupation as a string of 0/1 in mode order, e.g. "0110".
std::string to_string(const FockState &state);

struct SignedState {
    FockState state;
    int sign = 1;

    friend constexpr bool operator==(const SignedState &, const SignedState &) = default;
};

class ModeOccupied : public std::domain_error {
   public:
    explicit ModeOccupied(unsigned mode);
};

class ModeEmpty : public std::domain_error {
   public:
    explicit ModeEmpty(unsigned mode);
};

/// (-1)^(number of occupied modes strictly before `mode`).
inline int jordan_wigner_sign(std::uint64_t occupation, unsigned mode) {
    const std::uint64_t below = mode == 0 ? 0 : (occupation & ((std::uint64_t{1} << mode) - 1));
    return (std::popcount(below) & 1) ? -1 : 1;
}

SignedState apply_creation(FockState state, unsigned mode);
SignedState apply_annihilation(FockState state, unsigned mode);

/// <out| f_to^dagger f_from |state>; empty when the matrix element vanishes.
std::optional<SignedState> hopping_element(FockState state, unsigned to, unsigned from);

SignedState apply_creation(const ModeOrdering &ordering, FockState state, ModeIndex mode);
SignedState apply_annihilation(const ModeOrdering &ordering, FockState state, ModeIndex mode);
std::optional<SignedState> hopping_element(
    const ModeOrdering &ordering, FockState state, ModeIndex to, ModeIndex from);

/// Modes that must hold exactly one fermion between them.
using OccupancyGroup = std::vector<unsigned>;

/// A pair of modes holding one fermion; `first` encodes |0>, `second` encodes |1>.
struct DoubleWell {
    unsigned first = 0;
    unsigned second = 0;

    friend constexpr bool operator==(const DoubleWell &, const DoubleWell &) = default;
};

/// Fock states with exactly one fermion in every occupancy group, all other
/// modes empty. States are sorted ascending by bitmask.
class SectorBasis {
   public:
    SectorBasis(ModeOrdering ordering, std::vector<OccupancyGroup> groups, std::string tag);

    std::size_t size() const { return states_.size(); }
    const FockState &state(std::size_t index) const { return states_[index]; }
    std::span<const FockState> states() const { return states_; }
    std::optional<std::size_t> index_of(FockState state) const;
    std::optional<std::size_t> index_of(std::uint64_t occupation) const;

    const ModeOrdering &ordering() const { return ordering_; }
    std::span<const OccupancyGroup> groups() const { return groups_; }
    const std::string &tag() const { return tag_; }

    /// Groups reinterpreted as double wells; throws if any group is not a pair.
    std::vector<DoubleWell> wells() const;

    bool satisfies_constraint(FockState state) const;

   private:
    ModeOrdering ordering_;
    std::vector<OccupancyGroup> groups_;
    std::vector<FockState> states_;
    std::string tag_;
};

/// Sites of the open leapfrog chain with N double wells: 1..2N+2 without the
/// unpaired sites 2 and 2N+1.
std::vector<int> chain_sites(int num_encoded_qubits);

/// Site pair of double well j (0-based): (2j+1, 2j+4).
inline constexpr std::pair<int, int> chain_well_sites(int j) { return {2 * j + 1, 2 * j + 4}; }

/// Half-filled sector of the leapfrog chain; dimension 2^N.
SectorBasis build_sector(int num_encoded_qubits);

/// Builds a spinless sector from explicit double wells, listed in encoded-qubit order.
SectorBasis build_well_sector(
    std::span<const int> sites, std::span<const std::pair<int, int>> wells, std::string tag);

}  // namespace fermicluster::fock
