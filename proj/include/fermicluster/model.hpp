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
#include <stdexcept>
#include <string>
#include <vector>

#include "fermicluster/fock.hpp"
#include "fermicluster/types.hpp"

namespace fermicluster::model {

enum class OperatorRole { hermitian, unitary, projector, general };

std::string to_string(OperatorRole role);

class BasisMismatch : public std::invalid_argument {
   public:
    BasisMismatch(const std::string &a, const std::string &b);
};

class NotHermitian : public std::domain_error {
   public:
    explicit NotHermitian(double deviation);
};

class NotUnitary : public std::domain_error {
   public:
    explicit NotUnitary(double deviation);
};

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;

/// Dense operator tagged with the basis it acts on. The role is checked on
/// construction: hermitian needs max|A - A^dagger| < 1e-12, unitary needs
/// max|U^dagger U - I| < 1e-10, projector needs both P = P^dagger and P^2 = P.
class OperatorMatrix {
   public:
    OperatorMatrix(CMatrix entries, std::string basis_tag, OperatorRole role);

    static OperatorMatrix identity(Eigen::Index dim, std::string basis_tag);

    const CMatrix &entries() const { return entries_; }
    const std::string &basis_tag() const { return basis_tag_; }
    OperatorRole role() const { return role_; }
    Eigen::Index dim() const { return entries_.rows(); }

    Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

   private:
    CMatrix entries_;
    std::string basis_tag_;
    OperatorRole role_;
};

double hermiticity_deviation(const CMatrix &a);
double unitarity_deviation(const CMatrix &u);

void require_same_basis(const OperatorMatrix &a, const OperatorMatrix &b);

/// a * b. The result is unitary when both factors are, general otherwise.
OperatorMatrix compose(const OperatorMatrix &a, const OperatorMatrix &b);
/// a + b, hermitian when both terms are.
OperatorMatrix add(const OperatorMatrix &a, const OperatorMatrix &b);
OperatorMatrix adjoint(const OperatorMatrix &a);
double max_abs_difference(const OperatorMatrix &a, const OperatorMatrix &b);

// ---------------------------------------------------------------------------
// Second-quantized terms evaluated on a sector basis.

struct LadderOp {
    enum class Kind { create, annihilate, number, parity };
    Kind kind;
    unsigned mode;
};

/// coeff * ops[0] * ops[1] * ... ; the rightmost operator acts first.
/// `parity` is (1 - 2 n).
struct FermionTerm {
    Complex coeff{1.0, 0.0};
    std::vector<LadderOp> ops;
};

LadderOp create(unsigned mode);
LadderOp annihilate(unsigned mode);
LadderOp number(unsigned mode);
LadderOp parity(unsigned mode);

/// Matrix of sum(terms) restricted to the sector. Throws std::logic_error if a
/// term maps a sector state outside the sector.
CMatrix sector_matrix(const fock::SectorBasis &basis, std::span<const FermionTerm> terms);
/// sum(terms) |psi> without forming the matrix.
CVector apply_terms(const fock::SectorBasis &basis, std::span<const FermionTerm> terms, const CVector &psi);

/// Parity factors (1 - 2 n_k) for every mode strictly between `a` and `b` in
/// the ordering. Sites absent from the ordering are empty and contribute 1.
std::vector<LadderOp> intervening_parities(unsigned a, unsigned b);

// ---------------------------------------------------------------------------
// Pauli strings on the full spin chain of sites 1..M (bit s-1 <-> site s,
// |1> = occupied, Z = 1 - 2n).

struct PauliFactor {
    int site;
    char op;  // 'X', 'Y' or 'Z'
};

struct PauliString {
    Complex coeff{1.0, 0.0};
    std::vector<PauliFactor> factors;

    int weight() const { return static_cast<int>(factors.size()); }
    /// Image of a computational basis state: P|bits> = phase |out>.
    std::pair<std::uint64_t, Complex> apply(std::uint64_t site_bits) const;
};

/// Matrix elements <s'| sum(terms) |s> for s, s' in the sector.
CMatrix restrict_to_sector(std::span<const PauliString> terms, const fock::SectorBasis &basis);

/// Site bitmask (bit s-1 for site s) of a spinless sector state.
std::uint64_t site_bits(const fock::ModeOrdering &ordering, fock::FockState state);

// ---------------------------------------------------------------------------
// Hamiltonians.

/// -tau * sum over the sector's double wells of (f_b^dagger f_a + h.c.).
OperatorMatrix well_hopping(const fock::SectorBasis &basis, double tau);

/// Leapfrog chain, -tau sum_j (f_{2j+4}^dagger f_{2j+1} + h.c.), on build_sector(n).
OperatorMatrix leapfrog_1d(int n, double tau);

/// Ten-site 2D subgraph: wells {1,4},{3,5},{2,7},{6,9},{8,10} (encoded qubit order).
fock::SectorBasis subgraph_sector();
OperatorMatrix subgraph_2d(double tau);

/// Whether the pulse amplitude multiplies the potential terms or
/// only the hopping term.
enum class PotentialScaling { literal, unscaled };

std::string to_string(PotentialScaling scaling);

struct GateParamsA {
    double tau14 = 1.0;
    double v1 = 0.0;
    double v4 = 0.0;
};

struct GateParamsB {
    double tau34 = 1.0;
    double g = 0.0;
    double v3 = 0.0;
    double v4 = 0.0;
};

/// tau14 (f_4^dagger f_1 + h.c. + V1 n_1 + V4 n_4) on the N-qubit chain sector.
OperatorMatrix gate_ham_a(const GateParamsA &p, int n, PotentialScaling scaling = PotentialScaling::literal);
/// Same pulse between two arbitrary modes of a sector.
OperatorMatrix gate_ham_a(const GateParamsA &p, const fock::SectorBasis &basis, fock::ModeIndex first,
                          fock::ModeIndex second, PotentialScaling scaling = PotentialScaling::literal);

/// Two-species basis for the interaction pulse: species 0 (the qubit-0 fermion)
/// on sites {1,3,4}, species 1 (the qubit-1 fermion) frozen on {3,6}.
fock::SectorBasis two_species_basis();

/// tau34 (f_{4,0}^dagger f_{3,0} + h.c. + g n_{3,0} n_{3,1} + V3 n_{3,0} + V4 n_{4,0}).
OperatorMatrix gate_ham_b(const GateParamsB &p, PotentialScaling scaling = PotentialScaling::literal);

/// Two weight-4 strings per well j: -(tau/2) Z_{2j+2} Z_{2j+3} (X_{2j+1} X_{2j+4} + Y_{2j+1} Y_{2j+4}).
std::vector<PauliString> spin_hamiltonian_terms(int n, double tau);
/// Spin form restricted to build_sector(n).
OperatorMatrix spin_hamiltonian(int n, double tau);

/// Encoded form on 2^n qubit amplitudes (0-based qubits, Z_{-1} = I):
///   tau sum_{j=0}^{n-2} Z_{j-1} X_j Z_{j+1}  -  tau Z_{n-2} X_{n-1}.
OperatorMatrix encoded_hamiltonian(int n, double tau);

/// -tau sum_i X_i Z_{i-1} Z_{i+1} on an open chain of n qubits.
OperatorMatrix cluster_hamiltonian(int n, double tau);

std::string encoded_tag(int n);

/// prod CZ_{i,i+1} |+>^n.
CVector cluster_state(int n);
/// prod_{j=0}^{n-2} Z_j * prod CZ_{j,j+1} |+>^n: the chain ground state in encoded amplitudes.
CVector dressed_cluster_state(int n);

// ---------------------------------------------------------------------------

struct PulseStep {
    OperatorMatrix hamiltonian;
    double duration;
};

/// Time-ordered pulses; the first step acts first.
class PulseSchedule {
   public:
    void add(OperatorMatrix hamiltonian, double duration);
    std::span<const PulseStep> steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

   private:
    std::vector<PulseStep> steps_;
};

}  // namespace fermicluster::model
