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

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "fermicluster/fock.hpp"
#include "fermicluster/model.hpp"

namespace fermicluster::encoded {

class ZeroNorm : public std::runtime_error {
   public:
    ZeroNorm() : std::runtime_error("measurement branch has zero norm") {}
};

/// Bijection between encoded bitstrings and the states of a double-well sector.
/// Qubit j is well j of the sector; |0_j> puts the fermion on the well's first
/// mode. In an encoded index qubit 0 is the most significant bit.
class EncodedRegisterMap {
   public:
    explicit EncodedRegisterMap(fock::SectorBasis sector);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return sector_.size(); }
    const fock::SectorBasis &sector() const { return sector_; }
    std::string encoded_tag() const { return model::encoded_tag(num_qubits_); }

    const fock::DoubleWell &well(int j) const;
    std::pair<fock::ModeIndex, fock::ModeIndex> qubit_sites(int j) const;
    /// Modes strictly between the two sites of well j in the mode ordering.
    std::vector<unsigned> intervening_modes(int j) const;

    std::size_t sector_index(std::uint64_t encoded) const { return to_sector_[encoded]; }
    std::uint64_t encoded_index(std::size_t sector_index) const { return to_encoded_[sector_index]; }
    /// Coefficient of the Fock ket built by creating the occupied modes in
    /// increasing order on the vacuum. Always +1 for this convention.
    int coefficient(std::uint64_t encoded) const;

    CVector to_encoded(const CVector &sector_vector) const;
    CVector to_sector(const CVector &encoded_vector) const;
    /// sector_dim x 2^N matrix with columns |fock(b)>.
    CMatrix isometry() const;
    /// Encoded-basis matrix of an operator on the sector.
    model::OperatorMatrix to_encoded(const model::OperatorMatrix &op) const;
    model::OperatorMatrix to_sector(const model::OperatorMatrix &op) const;

   private:
    void require_qubit(int j) const;

    fock::SectorBasis sector_;
    std::vector<fock::DoubleWell> wells_;
    int num_qubits_;
    std::vector<std::size_t> to_sector_;
    std::vector<std::uint64_t> to_encoded_;
};

EncodedRegisterMap chain_register(int n);
EncodedRegisterMap subgraph_register();

enum class Axis { X, Y, Z };

char to_char(Axis axis);

/// 1 - 2 n_second.
model::OperatorMatrix encoded_z(const EncodedRegisterMap &map, int j);
/// Intervening parities times (f_second^dagger f_first + h.c.).
model::OperatorMatrix encoded_x(const EncodedRegisterMap &map, int j);
/// -i Z X.
model::OperatorMatrix encoded_y(const EncodedRegisterMap &map, int j);
model::OperatorMatrix encoded_pauli(const EncodedRegisterMap &map, Axis axis, int j);
/// cos(theta/2) - i sin(theta/2) P, built from the fermionic expressions.
model::OperatorMatrix encoded_rotation(const EncodedRegisterMap &map, Axis axis, double theta, int j);
/// (1/sqrt2) [-(1 - 2 n_first) + X], i.e. Z R_Y(-pi/2).
model::OperatorMatrix encoded_hadamard(const EncodedRegisterMap &map, int j);

/// The fermionic terms behind the operators above, for sparse application
/// with model::apply_terms.
std::vector<model::FermionTerm> pauli_terms(const EncodedRegisterMap &map, Axis axis, int j);
std::vector<model::FermionTerm> rotation_terms(const EncodedRegisterMap &map, Axis axis, double theta, int j);
std::vector<model::FermionTerm> hadamard_terms(const EncodedRegisterMap &map, int j);

/// Outcome 0 projects on n_first = 1, outcome 1 on n_second = 1.
model::OperatorMatrix projector(const EncodedRegisterMap &map, int j, int outcome);

class InvalidOutcome : public std::invalid_argument {
   public:
    explicit InvalidOutcome(int outcome);
};

struct MeasurementRecord {
    int qubit = 0;
    int outcome = 0;
    double probability = 0.0;
    double post_state_norm = 0.0;
    std::uint64_t seed = 0;
    bool forced = false;
};

struct MeasurementResult {
    MeasurementRecord record;
    CVector post_state;
};

/// Probability of each outcome for a sector state.
std::array<double, 2> outcome_probabilities(const EncodedRegisterMap &map, const CVector &state, int j);

/// Born-rule sample with mt19937_64(seed): outcome 0 iff u < p0 for one
/// uniform draw u in [0, 1).
MeasurementResult measure_encoded(const EncodedRegisterMap &map, const CVector &state, int j, std::uint64_t seed);
/// Projects onto a chosen outcome; throws ZeroNorm if that branch is empty.
MeasurementResult measure_encoded_forced(const EncodedRegisterMap &map, const CVector &state, int j, int outcome);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64 &rng);

}  // namespace fermicluster::encoded
