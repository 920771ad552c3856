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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermicluster/model.hpp"

// Encoded two-qubit gates synthesized from pulses on the N = 2 chain
// (qubit 0 = well {1,4}, qubit 1 = well {3,6}). All unitaries in a report are
// in the encoded basis, qubit 0 most significant. "Occupied" and "empty"
// label the qubit-1 fermion being on site 3 (qubit 1 = 0) or site 6 (= 1).
namespace fermicluster::synth {

inline constexpr double kGateTolerance = 1e-9;

struct BlockReport {
    std::string occupancy;  // "site3-occupied" or "site3-empty"
    CMatrix unitary;        // 2x2 action on qubit 0
    std::string expected;   // name of the gate it was matched against
    double fidelity = 0.0;
};

struct GateReport {
    std::string name;
    CMatrix synthesized;
    CMatrix reference;
    double fidelity = 0.0;  // |Tr(ref^dagger syn)| / d
    double tolerance = kGateTolerance;
    bool pass = false;
    model::PotentialScaling reading = model::PotentialScaling::literal;
    /// Fidelity of the same pulse under the other potential reading.
    std::optional<double> alternative_fidelity;
    std::vector<BlockReport> blocks;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::pair<std::string, std::string>> notes;

    double metric(const std::string &key) const;
};

/// 2x2 block acting on qubit 0 with qubit 1 fixed to `q1`.
CMatrix qubit0_block(const CMatrix &u, int q1);

/// exp(-i t H_a(0, 0, V4)): the hopping is off and only V4 n_4 remains, which
/// is the zero operator under the literal reading. Target R_Z(-V4 t) (x) I.
GateReport synth_rz_pulse(double v4, double t);
/// R_Z(theta) as the V4 = -theta, t = 1 pulse.
GateReport synth_rz(double theta);

/// H_a(tau, -1+sqrt2, 1+sqrt2) for t = pi / (sqrt8 tau). Target CZ H_0 CZ.
GateReport synth_hadamard_attempt(double tau = 1.0);
/// H_a(tau, 0, 0) for t = pi / (4 tau). Target CZ R_X(pi/2)_0 CZ.
GateReport synth_rx90_attempt(double tau = 1.0);
/// H_b(tau, 4/sqrt3, -1/sqrt3, 1/sqrt3) for t = sqrt3 pi / (2 tau). Target CZ.
GateReport synth_cz(double tau = 1.0);
/// CZ pulse, Hadamard attempt, CZ pulse. Target H_0 (x) I.
GateReport synth_hadamard_sandwich(double tau = 1.0);

/// Synthesizes a single-qubit U with a well-{1,4} pulse alone (complex
/// hopping plus potentials, generator from the principal log of U) and
/// checks that the result is CZ U CZ rather than U (x) I.
GateReport verify_obstruction(const CMatrix &u_local);

/// Two-qubit encoded unitary of a pulse on the N = 2 spinless sector.
CMatrix evolve_chain_pulse(const model::OperatorMatrix &h, double t);
/// Two-qubit encoded unitary of an H_b pulse; `leakage` receives the norm of
/// the component that leaves the encoded subspace.
CMatrix evolve_two_species_pulse(const model::OperatorMatrix &h, double t, double *leakage = nullptr);

/// CZ U_0 CZ on two qubits.
CMatrix cz_conjugate(const CMatrix &u_local);

}  // namespace fermicluster::synth
