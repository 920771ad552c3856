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

#include "fermicluster/model.hpp"

#include <cmath>
#include <sstream>

namespace fermicluster::model {

std::string to_string(OperatorRole role) {
    switch (role) {
        case OperatorRole::hermitian:
            return "hermitian";
        case OperatorRole::unitary:
            return "unitary";
        case OperatorRole::projector:
            return "projector";
        case OperatorRole::general:
            return "general";
    }
    return "unknown";
}

std::string to_string(PotentialScaling scaling) {
    return scaling == PotentialScaling::literal ? "literal" : "unscaled";
}

BasisMismatch::BasisMismatch(const std::string &a, const std::string &b)
    : std::invalid_argument("basis mismatch: '" + a + "' vs '" + b + "'") {
}

namespace {
std::string format_deviation(const char *what, double deviation) {
    std::ostringstream out;
    out << what << " (deviation " << deviation << ")";
    return out.str();
}
}  // namespace

NotHermitian::NotHermitian(double deviation)
    : std::domain_error(format_deviation("operator is not hermitian", deviation)) {
}

NotUnitary::NotUnitary(double deviation) : std::domain_error(format_deviation("operator is not unitary", deviation)) {
}

double hermiticity_deviation(const CMatrix &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const CMatrix &u) {
    if (u.size() == 0) {
        return 0.0;
    }
    return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

OperatorMatrix::OperatorMatrix(CMatrix entries, std::string basis_tag, OperatorRole role)
    : entries_(std::move(entries)), basis_tag_(std::move(basis_tag)), role_(role) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("OperatorMatrix: matrix is not square");
    }
    switch (role_) {
        case OperatorRole::hermitian: {
            const double dev = hermiticity_deviation(entries_);
            if (dev >= kHermitianTolerance) {
                throw NotHermitian(dev);
            }
            break;
        }
        case OperatorRole::unitary: {
            const double dev = unitarity_deviation(entries_);
            if (dev >= kUnitaryTolerance) {
                throw NotUnitary(dev);
            }
            break;
        }
        case OperatorRole::projector: {
            const double dev = hermiticity_deviation(entries_);
            if (dev >= kHermitianTolerance) {
                throw NotHermitian(dev);
            }
            const double idem =
                entries_.size() == 0 ? 0.0 : (entries_ * entries_ - entries_).cwiseAbs().maxCoeff();
            if (idem >= kUnitaryTolerance) {
                throw std::domain_error(format_deviation("operator is not idempotent", idem));
            }
            break;
        }
        case OperatorRole::general:
            break;
    }
}

OperatorMatrix OperatorMatrix::identity(Eigen::Index dim, std::string basis_tag) {
    return OperatorMatrix(CMatrix::Identity(dim, dim), std::move(basis_tag), OperatorRole::unitary);
}

void require_same_basis(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.basis_tag() != b.basis_tag() || a.dim() != b.dim()) {
        throw BasisMismatch(a.basis_tag(), b.basis_tag());
    }
}

OperatorMatrix compose(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_basis(a, b);
    const bool unitary = a.role() == OperatorRole::unitary && b.role() == OperatorRole::unitary;
    return OperatorMatrix(a.entries() * b.entries(), a.basis_tag(),
                          unitary ? OperatorRole::unitary : OperatorRole::general);
}

OperatorMatrix add(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_basis(a, b);
    const auto is_herm = [](OperatorRole r) { return r == OperatorRole::hermitian || r == OperatorRole::projector; };
    const bool herm = is_herm(a.role()) && is_herm(b.role());
    return OperatorMatrix(a.entries() + b.entries(), a.basis_tag(),
                          herm ? OperatorRole::hermitian : OperatorRole::general);
}

OperatorMatrix adjoint(const OperatorMatrix &a) {
    return OperatorMatrix(a.entries().adjoint(), a.basis_tag(), a.role());
}

double max_abs_difference(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_basis(a, b);
    if (a.dim() == 0) {
        return 0.0;
    }
    return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

LadderOp create(unsigned mode) {
    return {LadderOp::Kind::create, mode};
}
LadderOp annihilate(unsigned mode) {
    return {LadderOp::Kind::annihilate, mode};
}
LadderOp number(unsigned mode) {
    return {LadderOp::Kind::number, mode};
}
LadderOp parity(unsigned mode) {
    return {LadderOp::Kind::parity, mode};
}

namespace {

// Applies a product of ladder operators right to left. Returns false when the
// product annihilates the state.
bool apply_term(const FermionTerm &term, fock::FockState &state, Complex &amp) {
    amp = term.coeff;
    for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it) {
        switch (it->kind) {
            case LadderOp::Kind::create: {
                if (state.occupied(it->mode)) {
                    return false;
                }
                auto r = fock::apply_creation(state, it->mode);
                state = r.state;
                amp *= static_cast<double>(r.sign);
                break;
            }
            case LadderOp::Kind::annihilate: {
                if (!state.occupied(it->mode)) {
                    return false;
                }
                auto r = fock::apply_annihilation(state, it->mode);
                state = r.state;
                amp *= static_cast<double>(r.sign);
                break;
            }
            case LadderOp::Kind::number:
                if (it->mode >= state.mode_count) {
                    throw std::out_of_range("number operator mode out of range");
                }
                if (!state.occupied(it->mode)) {
                    return false;
                }
                break;
            case LadderOp::Kind::parity:
                if (it->mode >= state.mode_count) {
                    throw std::out_of_range("parity operator mode out of range");
                }
                if (state.occupied(it->mode)) {
                    amp = -amp;
                }
                break;
        }
    }
    return true;
}

}  // namespace

CMatrix sector_matrix(const fock::SectorBasis &basis, std::span<const FermionTerm> terms) {
    const auto dim = static_cast<Eigen::Index>(basis.size());
    CMatrix out = CMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        for (const auto &term : terms) {
            fock::FockState s = basis.state(static_cast<std::size_t>(col));
            Complex amp;
            if (!apply_term(term, s, amp)) {
                continue;
            }
            auto row = basis.index_of(s);
            if (!row) {
                throw std::logic_error("sector_matrix: term leaves the sector " + basis.tag());
            }
            out(static_cast<Eigen::Index>(*row), col) += amp;
        }
    }
    return out;
}

CVector apply_terms(const fock::SectorBasis &basis, std::span<const FermionTerm> terms, const CVector &psi) {
    if (static_cast<std::size_t>(psi.size()) != basis.size()) {
        throw std::invalid_argument("apply_terms: dimension mismatch");
    }
    CVector out = CVector::Zero(psi.size());
    for (Eigen::Index col = 0; col < psi.size(); ++col) {
        if (psi(col) == Complex{}) {
            continue;
        }
        for (const auto &term : terms) {
            fock::FockState s = basis.state(static_cast<std::size_t>(col));
            Complex amp;
            if (!apply_term(term, s, amp)) {
                continue;
            }
            auto row = basis.index_of(s);
            if (!row) {
                throw std::logic_error("apply_terms: term leaves the sector " + basis.tag());
            }
            out(static_cast<Eigen::Index>(*row)) += amp * psi(col);
        }
    }
    return out;
}

std::vector<LadderOp> intervening_parities(unsigned a, unsigned b) {
    if (a > b) {
        std::swap(a, b);
    }
    std::vector<LadderOp> ops;
    for (unsigned k = a + 1; k < b; ++k) {
        ops.push_back(parity(k));
    }
    return ops;
}

std::pair<std::uint64_t, Complex> PauliString::apply(std::uint64_t bits) const {
    Complex phase = coeff;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (it->site < 1 || it->site > 64) {
            throw std::out_of_range("PauliString: site out of range");
        }
        const std::uint64_t mask = std::uint64_t{1} << (it->site - 1);
        const bool one = bits & mask;
        switch (it->op) {
            case 'X':
                bits ^= mask;
                break;
            case 'Y':
                // Y|0> = i|1>, Y|1> = -i|0>.
                phase *= one ? -kI : kI;
                bits ^= mask;
                break;
            case 'Z':
                if (one) {
                    phase = -phase;
                }
                break;
            default:
                throw std::invalid_argument(std::string("PauliString: unknown factor '") + it->op + "'");
        }
    }
    return {bits, phase};
}

std::uint64_t site_bits(const fock::ModeOrdering &ordering, fock::FockState state) {
    std::uint64_t bits = 0;
    for (unsigned k = 0; k < state.mode_count; ++k) {
        if (state.occupied(k)) {
            const auto &m = ordering[k];
            if (m.species != 0) {
                throw std::invalid_argument("site_bits: spinless orderings only");
            }
            bits |= std::uint64_t{1} << (m.site - 1);
        }
    }
    return bits;
}

CMatrix restrict_to_sector(std::span<const PauliString> terms, const fock::SectorBasis &basis) {
    const auto &ordering = basis.ordering();
    std::vector<std::uint64_t> sector_bits;
    sector_bits.reserve(basis.size());
    for (const auto &s : basis.states()) {
        sector_bits.push_back(site_bits(ordering, s));
    }
    // Inverse map: site bits of an image state -> mode occupation (or none).
    auto to_occupation = [&](std::uint64_t bits) -> std::optional<std::uint64_t> {
        std::uint64_t occ = 0;
        for (unsigned k = 0; k < ordering.size(); ++k) {
            const std::uint64_t m = std::uint64_t{1} << (ordering[k].site - 1);
            if (bits & m) {
                occ |= std::uint64_t{1} << k;
                bits &= ~m;
            }
        }
        if (bits != 0) {
            return std::nullopt;
        }
        return occ;
    };

    const auto dim = static_cast<Eigen::Index>(basis.size());
    CMatrix out = CMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        for (const auto &term : terms) {
            auto [image, phase] = term.apply(sector_bits[static_cast<std::size_t>(col)]);
            auto occ = to_occupation(image);
            if (!occ) {
                continue;
            }
            auto row = basis.index_of(*occ);
            if (row) {
                out(static_cast<Eigen::Index>(*row), col) += phase;
            }
        }
    }
    return out;
}

namespace {

FermionTerm hop(Complex coeff, unsigned to, unsigned from) {
    return {coeff, {create(to), annihilate(from)}};
}

}  // namespace

OperatorMatrix well_hopping(const fock::SectorBasis &basis, double tau) {
    std::vector<FermionTerm> terms;
    for (const auto &w : basis.wells()) {
        terms.push_back(hop(-tau, w.second, w.first));
        terms.push_back(hop(-tau, w.first, w.second));
    }
    return OperatorMatrix(sector_matrix(basis, terms), basis.tag(), OperatorRole::hermitian);
}

OperatorMatrix leapfrog_1d(int n, double tau) {
    return well_hopping(fock::build_sector(n), tau);
}

fock::SectorBasis subgraph_sector() {
    static constexpr int kSites[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    static constexpr std::pair<int, int> kWells[] = {{1, 4}, {3, 5}, {2, 7}, {6, 9}, {8, 10}};
    return fock::build_well_sector(kSites, kWells, "subgraph2d");
}

OperatorMatrix subgraph_2d(double tau) {
    return well_hopping(subgraph_sector(), tau);
}

OperatorMatrix gate_ham_a(const GateParamsA &p, const fock::SectorBasis &basis, fock::ModeIndex first,
                          fock::ModeIndex second, PotentialScaling scaling) {
    const unsigned a = basis.ordering().require(first);
    const unsigned b = basis.ordering().require(second);
    const double pot = scaling == PotentialScaling::literal ? p.tau14 : 1.0;
    const std::vector<FermionTerm> terms = {
        hop(p.tau14, b, a),
        hop(p.tau14, a, b),
        {pot * p.v1, {number(a)}},
        {pot * p.v4, {number(b)}},
    };
    return OperatorMatrix(sector_matrix(basis, terms), basis.tag(), OperatorRole::hermitian);
}

OperatorMatrix gate_ham_a(const GateParamsA &p, int n, PotentialScaling scaling) {
    const auto [first, second] = fock::chain_well_sites(0);
    return gate_ham_a(p, fock::build_sector(n), {first, 0}, {second, 0}, scaling);
}

fock::SectorBasis two_species_basis() {
    fock::ModeOrdering ordering({{1, 0}, {3, 0}, {3, 1}, {4, 0}, {6, 1}});
    std::vector<fock::OccupancyGroup> groups = {
        {ordering.require({1, 0}), ordering.require({3, 0}), ordering.require({4, 0})},
        {ordering.require({3, 1}), ordering.require({6, 1})},
    };
    return fock::SectorBasis(std::move(ordering), std::move(groups), "two-species/N=2");
}

OperatorMatrix gate_ham_b(const GateParamsB &p, PotentialScaling scaling) {
    const auto basis = two_species_basis();
    const auto &o = basis.ordering();
    const unsigned s3 = o.require({3, 0});
    const unsigned s4 = o.require({4, 0});
    const unsigned t3 = o.require({3, 1});
    const double pot = scaling == PotentialScaling::literal ? p.tau34 : 1.0;
    const std::vector<FermionTerm> terms = {
        hop(p.tau34, s4, s3),
        hop(p.tau34, s3, s4),
        {pot * p.g, {number(s3), number(t3)}},
        {pot * p.v3, {number(s3)}},
        {pot * p.v4, {number(s4)}},
    };
    return OperatorMatrix(sector_matrix(basis, terms), basis.tag(), OperatorRole::hermitian);
}

std::vector<PauliString> spin_hamiltonian_terms(int n, double tau) {
    if (n < 1) {
        throw std::invalid_argument("spin_hamiltonian_terms: n must be >= 1");
    }
    std::vector<PauliString> terms;
    for (int j = 0; j < n; ++j) {
        const int a = 2 * j + 1;
        const int b = 2 * j + 4;
        for (char op : {'X', 'Y'}) {
            terms.push_back({-tau / 2, {{a, op}, {a + 1, 'Z'}, {a + 2, 'Z'}, {b, op}}});
        }
    }
    return terms;
}

OperatorMatrix spin_hamiltonian(int n, double tau) {
    const auto basis = fock::build_sector(n);
    const auto terms = spin_hamiltonian_terms(n, tau);
    return OperatorMatrix(restrict_to_sector(terms, basis), basis.tag(), OperatorRole::hermitian);
}

std::string encoded_tag(int n) {
    return "encoded/N=" + std::to_string(n);
}

namespace {

// Adds coeff * (X on x_mask) (Z on z_mask) to a 2^n matrix; qubit q is bit n-1-q.
void add_xz_string(CMatrix &h, int n, Complex coeff, std::uint64_t x_mask, std::uint64_t z_mask) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t col = 0; col < dim; ++col) {
        const double sign = (std::popcount(col & z_mask) & 1) ? -1.0 : 1.0;
        h(static_cast<Eigen::Index>(col ^ x_mask), static_cast<Eigen::Index>(col)) += coeff * sign;
    }
}

std::uint64_t qubit_bit(int q, int n) {
    return std::uint64_t{1} << (n - 1 - q);
}

void require_qubits(int n) {
    if (n < 1 || n > 20) {
        throw std::invalid_argument("qubit count must be in 1..20");
    }
}

}  // namespace

OperatorMatrix encoded_hamiltonian(int n, double tau) {
    require_qubits(n);
    const auto dim = Eigen::Index{1} << n;
    CMatrix h = CMatrix::Zero(dim, dim);
    for (int j = 0; j + 1 < n; ++j) {
        std::uint64_t z = qubit_bit(j + 1, n);
        if (j > 0) {
            z |= qubit_bit(j - 1, n);
        }
        add_xz_string(h, n, tau, qubit_bit(j, n), z);
    }
    const std::uint64_t z_last = n >= 2 ? qubit_bit(n - 2, n) : 0;
    add_xz_string(h, n, -tau, qubit_bit(n - 1, n), z_last);
    return OperatorMatrix(std::move(h), encoded_tag(n), OperatorRole::hermitian);
}

OperatorMatrix cluster_hamiltonian(int n, double tau) {
    require_qubits(n);
    const auto dim = Eigen::Index{1} << n;
    CMatrix h = CMatrix::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        std::uint64_t z = 0;
        if (i > 0) {
            z |= qubit_bit(i - 1, n);
        }
        if (i + 1 < n) {
            z |= qubit_bit(i + 1, n);
        }
        add_xz_string(h, n, -tau, qubit_bit(i, n), z);
    }
    return OperatorMatrix(std::move(h), encoded_tag(n), OperatorRole::hermitian);
}

namespace {

CVector signed_plus_state(int n, bool dressed) {
    require_qubits(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    // Adjacent pairs (q, q+1) are bit pairs (b, b>>1) of the index.
    const std::uint64_t bonds_mask = (dim - 1) >> 1;
    const std::uint64_t dressing_mask = dim - 1 - 1;  // every qubit but the last (bit 0)
    CVector psi(static_cast<Eigen::Index>(dim));
    for (std::uint64_t k = 0; k < dim; ++k) {
        int parity = std::popcount(k & (k >> 1) & bonds_mask);
        if (dressed) {
            parity += std::popcount(k & dressing_mask);
        }
        psi(static_cast<Eigen::Index>(k)) = (parity & 1) ? -amp : amp;
    }
    return psi;
}

}  // namespace

CVector cluster_state(int n) {
    return signed_plus_state(n, false);
}

CVector dressed_cluster_state(int n) {
    return signed_plus_state(n, true);
}

void PulseSchedule::add(OperatorMatrix hamiltonian, double duration) {
    if (!(duration >= 0.0)) {
        throw std::invalid_argument("PulseSchedule: negative duration");
    }
    if (hamiltonian.role() != OperatorRole::hermitian) {
        throw std::invalid_argument("PulseSchedule: pulse Hamiltonian must be hermitian");
    }
    if (!steps_.empty()) {
        require_same_basis(steps_.front().hamiltonian, hamiltonian);
    }
    steps_.push_back({std::move(hamiltonian), duration});
}

}  // namespace fermicluster::model
