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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermicluster/encoded.hpp"

namespace fermicluster::mbqc {

class QubitAlreadyMeasured : public std::logic_error {
   public:
    explicit QubitAlreadyMeasured(int qubit);
};

/// X/Z byproduct bits per encoded qubit. The byproduct on qubit j is
/// X^x_j Z^z_j, tracked classically and never applied to the state.
class PauliFrame {
   public:
    PauliFrame() = default;
    explicit PauliFrame(int num_qubits) : x_(num_qubits, 0), z_(num_qubits, 0) {}

    int size() const { return static_cast<int>(x_.size()); }
    bool x(int j) const { return x_.at(j) != 0; }
    bool z(int j) const { return z_.at(j) != 0; }
    void flip_x(int j) { x_.at(j) ^= 1; }
    void flip_z(int j) { z_.at(j) ^= 1; }

    /// Bitwise xor; associative, and every frame is its own inverse.
    PauliFrame compose(const PauliFrame &other) const;
    /// One letter per qubit from {I, X, Z, Y}; Y stands for the pair X Z.
    std::string label() const;

    friend bool operator==(const PauliFrame &, const PauliFrame &) = default;

   private:
    std::vector<std::uint8_t> x_;
    std::vector<std::uint8_t> z_;
};

/// splitmix64(base + golden * (index + 1)): independent streams per shot/step.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct ChainState {
    CVector amplitudes;  // sector basis
    std::vector<bool> measured;
    std::vector<int> outcomes;  // -1 while unmeasured
};

/// Ground state of leapfrog_1d(n, 1), nothing measured.
ChainState chain_ground_state(const encoded::EncodedRegisterMap &map);

struct StepRecord {
    encoded::MeasurementRecord measurement;
    double theta = 0.0;          // requested angle
    double applied_theta = 0.0;  // after the adaptive sign
};

struct StepResult {
    StepRecord entry;
    ChainState state;
};

/// R_Z(theta)_j, then H_j, then a computational measurement of qubit j.
StepResult teleport_step(const encoded::EncodedRegisterMap &map, const ChainState &state, int j, double theta,
                         std::uint64_t seed);
StepResult teleport_step_forced(const encoded::EncodedRegisterMap &map, const ChainState &state, int j,
                                double theta, int outcome);

/// Amplitudes of the unmeasured qubits (in qubit order) given the recorded
/// outcomes; qubit order inside the result follows the encoded convention.
CVector unmeasured_state(const encoded::EncodedRegisterMap &map, const ChainState &state);

struct ProtocolTranscript {
    int num_qubits = 0;
    std::uint64_t seed = 0;
    std::vector<double> thetas;
    std::vector<StepRecord> steps;
    PauliFrame frame;
    ChainState final_state;
    /// State of the unmeasured qubits, encoded basis.
    CVector output;
    /// Logical state on the first unmeasured qubit with the frame and the
    /// remaining CZ bonds undone.
    CVector logical_output;
    /// Norm of the projection of the frame-corrected remainder onto |+...+>
    /// for the qubits after the logical one; 1 when the remainder is a product.
    double remainder_overlap = 1.0;
};

/// Measures qubits 0..k-1 with angles thetas[0..k-1], flipping the sign of
/// an angle whenever the qubit carries a pending X byproduct. The initial
/// frame holds Z on qubits 0..n-2 (the ground state's dressing).
ProtocolTranscript run_chain(int n, std::span<const double> thetas, std::uint64_t seed);
/// Same with outcomes fixed in advance.
ProtocolTranscript run_chain_forced(int n, std::span<const double> thetas, std::span<const int> outcomes);

/// H R_Z(theta_k) ... H R_Z(theta_1) |+>.
CVector ideal_chain_output(std::span<const double> thetas);

// ---------------------------------------------------------------------------
// 2D subgraph: encoded qubits are wells {1,4},{3,5},{2,7},{6,9},{8,10}.

inline constexpr int kSubgraphX1 = 0;  // well {1,4}, outcome m1
inline constexpr int kSubgraphOut1 = 1;
inline constexpr int kSubgraphY = 2;  // well {2,7}, outcome m3
inline constexpr int kSubgraphX2 = 3;  // well {6,9}, outcome m2
inline constexpr int kSubgraphOut2 = 4;

/// Product of single-particle orbitals a_w f_first^dagger + b_w f_second^dagger,
/// applied in well order, in sector amplitudes.
CVector orbital_product_state(const encoded::EncodedRegisterMap &map, std::span<const std::array<Complex, 2>> orbitals);

struct SubgraphOptions {
    std::uint64_t seed = 0;
    std::optional<std::array<int, 3>> forced;  // (m1, m2, m3)
    /// Measurement order as a permutation of {0, 1, 2} = {m1, m2, m3}.
    std::array<int, 3> order{0, 1, 2};
    /// Input orbitals on wells {1,4} and {6,9}; |+> when absent.
    std::optional<std::array<std::array<Complex, 2>, 2>> inputs;
};

struct SubgraphTranscript {
    std::array<int, 3> outcomes{};  // (m1, m2, m3)
    std::vector<encoded::MeasurementRecord> records;
    CVector output;     // qubits {3,5} (x) {8,10}
    CVector reference;  // H sqrtZ (x) H sqrtZ CZ |in1 in2>
    double entropy_bits = 0.0;
};

/// Measures {1,4} and {6,9} in the X basis and {2,7} in the Y basis. Throws
/// encoded::InvalidOutcome for forced outcomes outside {0,1}.
SubgraphTranscript run_subgraph(const SubgraphOptions &options);

/// The eight byproducts listed for the subgraph protocol, as two-letter labels.
inline constexpr std::array<const char *, 8> kListedByproducts = {"XI", "IX", "IZ", "XY", "YX", "ZI", "ZY", "YZ"};

/// Two-qubit Paulis P (two-letter labels) with |<P ref|out>| = 1 within tol.
std::vector<std::string> matching_paulis(const CVector &reference, const CVector &output, double tol = 1e-9);

struct ByproductEntry {
    std::array<int, 3> outcomes{};
    std::vector<std::string> candidates;  // all matches with |++> inputs
    std::string listed;                   // bound member of the listed eight
    std::string generic;                  // unique match for generic inputs
};

/// Brute-force outcome -> byproduct table. Listed members are bound in
/// outcome order, each outcome taking the first unused listed candidate.
/// Generic byproducts come from seeded random product inputs.
std::vector<ByproductEntry> generate_byproduct_table(std::uint64_t seed = 7);

}  // namespace fermicluster::mbqc
