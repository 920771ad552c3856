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

#include <span>
#include <string_view>

#include "fermicluster/types.hpp"

// Dense qubit algebra on the encoded register. Qubit 0 is the most
// significant bit of a basis index, so on_qubit(A, 0, n) = A (x) I (x) ... (x) I.
namespace fermicluster::qubit {

CMatrix identity(Eigen::Index dim);
CMatrix pauli(char label);
/// Tensor product of single-qubit Paulis, e.g. "XIZ".
CMatrix pauli_string(std::string_view labels);
CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix on_qubit(const CMatrix &op, int qubit, int num_qubits);
CMatrix controlled_z(int a, int b, int num_qubits);

CMatrix hadamard();
CMatrix rx(double theta);
CMatrix ry(double theta);
CMatrix rz(double theta);

CVector plus_state(int num_qubits);
CVector basis_state(Eigen::Index index, Eigen::Index dim);
CVector kron(const CVector &a, const CVector &b);

/// <psi| P |psi> / <psi|psi> for a Pauli string such as "ZXZI", evaluated on
/// basis indices without forming the matrix.
Complex pauli_expectation(const CVector &psi, std::string_view labels);

/// |Tr(A^dagger B)| / d; equals 1 iff B = e^{i phi} A for unitaries.
double phase_invariant_fidelity(const CMatrix &a, const CMatrix &b);
/// |<a|b>|^2 / (|a|^2 |b|^2).
double state_fidelity(const CVector &a, const CVector &b);

/// Von Neumann entropy (bits) of the first `left_qubits` qubits of a pure state.
double entanglement_entropy_bits(const CVector &state, int left_qubits, int num_qubits);

/// Number of non-negligible operator-Schmidt coefficients of a two-qubit
/// operator across the qubit-0 | qubit-1 cut.
int operator_schmidt_rank(const CMatrix &u, double tolerance = 1e-9);

/// Entangling power of a two-qubit unitary, e_p = (2/9)(1 - |G1|) with G1 the
/// first Makhlin invariant. Ranges over [0, 2/9]; CNOT-class gates reach 2/9.
double entangling_power(const CMatrix &u);

struct MakhlinInvariants {
    Complex g1;
    double g2 = 0.0;
};
MakhlinInvariants makhlin_invariants(const CMatrix &u);

}  // namespace fermicluster::qubit
