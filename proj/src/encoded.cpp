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

#include "fermicluster/encoded.hpp"

#include <cmath>
#include <numbers>

#include "fermicluster/kernels.hpp"

namespace fermicluster::encoded {

using model::FermionTerm;
using model::OperatorMatrix;
using model::OperatorRole;

EncodedRegisterMap::EncodedRegisterMap(fock::SectorBasis sector)
    : sector_(std::move(sector)), wells_(sector_.wells()), num_qubits_(static_cast<int>(wells_.size())) {
    if (num_qubits_ < 1 || num_qubits_ > 20) {
        throw std::invalid_argument("EncodedRegisterMap: need 1..20 wells");
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits_;
    if (sector_.size() != dim) {
        throw std::logic_error("EncodedRegisterMap: sector is not 2^N dimensional");
    }
    to_sector_.assign(dim, 0);
    to_encoded_.assign(dim, 0);
    for (std::uint64_t b = 0; b < dim; ++b) {
        std::uint64_t occ = 0;
        for (int j = 0; j < num_qubits_; ++j) {
            const bool one = (b >> (num_qubits_ - 1 - j)) & 1u;
            occ |= std::uint64_t{1} << (one ? wells_[j].second : wells_[j].first);
        }
        const auto idx = sector_.index_of(occ);
        if (!idx) {
            throw std::logic_error("EncodedRegisterMap: bitstring outside the sector");
        }
        to_sector_[b] = *idx;
        to_encoded_[*idx] = b;
    }
}

void EncodedRegisterMap::require_qubit(int j) const {
    if (j < 0 || j >= num_qubits_) {
        throw std::out_of_range("encoded qubit " + std::to_string(j) + " out of range");
    }
}

const fock::DoubleWell &EncodedRegisterMap::well(int j) const {
    require_qubit(j);
    return wells_[static_cast<std::size_t>(j)];
}

std::pair<fock::ModeIndex, fock::ModeIndex> EncodedRegisterMap::qubit_sites(int j) const {
    const auto &w = well(j);
    return {sector_.ordering()[w.first], sector_.ordering()[w.second]};
}

std::vector<unsigned> EncodedRegisterMap::intervening_modes(int j) const {
    const auto &w = well(j);
    std::vector<unsigned> out;
    for (unsigned k = std::min(w.first, w.second) + 1; k < std::max(w.first, w.second); ++k) {
        out.push_back(k);
    }
    return out;
}

int EncodedRegisterMap::coefficient(std::uint64_t encoded) const {
    if (encoded >= to_sector_.size()) {
        throw std::out_of_range("encoded index out of range");
    }
    const fock::FockState target = sector_.state(to_sector_[encoded]);
    // f_{m1}^dagger f_{m2}^dagger ... |O> with m1 < m2 < ...: the rightmost acts first.
    fock::FockState s{0, target.mode_count};
    int sign = 1;
    for (unsigned k = target.mode_count; k-- > 0;) {
        if (target.occupied(k)) {
            const auto r = fock::apply_creation(s, k);
            s = r.state;
            sign *= r.sign;
        }
    }
    return sign;
}

CVector EncodedRegisterMap::to_encoded(const CVector &sector_vector) const {
    if (static_cast<std::size_t>(sector_vector.size()) != dim()) {
        throw std::invalid_argument("to_encoded: dimension mismatch");
    }
    CVector out(sector_vector.size());
    for (std::size_t b = 0; b < dim(); ++b) {
        out(static_cast<Eigen::Index>(b)) =
            static_cast<double>(coefficient(b)) * sector_vector(static_cast<Eigen::Index>(to_sector_[b]));
    }
    return out;
}

CVector EncodedRegisterMap::to_sector(const CVector &encoded_vector) const {
    if (static_cast<std::size_t>(encoded_vector.size()) != dim()) {
        throw std::invalid_argument("to_sector: dimension mismatch");
    }
    CVector out(encoded_vector.size());
    for (std::size_t b = 0; b < dim(); ++b) {
        out(static_cast<Eigen::Index>(to_sector_[b])) =
            static_cast<double>(coefficient(b)) * encoded_vector(static_cast<Eigen::Index>(b));
    }
    return out;
}

CMatrix EncodedRegisterMap::isometry() const {
    const auto d = static_cast<Eigen::Index>(dim());
    CMatrix p = CMatrix::Zero(d, d);
    for (std::size_t b = 0; b < dim(); ++b) {
        p(static_cast<Eigen::Index>(to_sector_[b]), static_cast<Eigen::Index>(b)) = coefficient(b);
    }
    return p;
}

OperatorMatrix EncodedRegisterMap::to_encoded(const OperatorMatrix &op) const {
    if (op.basis_tag() != sector_.tag()) {
        throw model::BasisMismatch(op.basis_tag(), sector_.tag());
    }
    const CMatrix p = isometry();
    return OperatorMatrix(p.adjoint() * op.entries() * p, encoded_tag(), op.role());
}

OperatorMatrix EncodedRegisterMap::to_sector(const OperatorMatrix &op) const {
    if (op.basis_tag() != encoded_tag()) {
        throw model::BasisMismatch(op.basis_tag(), encoded_tag());
    }
    const CMatrix p = isometry();
    return OperatorMatrix(p * op.entries() * p.adjoint(), sector_.tag(), op.role());
}

EncodedRegisterMap chain_register(int n) {
    return EncodedRegisterMap(fock::build_sector(n));
}

EncodedRegisterMap subgraph_register() {
    return EncodedRegisterMap(model::subgraph_sector());
}

char to_char(Axis axis) {
    switch (axis) {
        case Axis::X:
            return 'X';
        case Axis::Y:
            return 'Y';
        case Axis::Z:
            return 'Z';
    }
    return '?';
}

namespace {

// Terms of coeff * (intervening parities) * (f_second^dagger f_first + h.c.),
// optionally with an extra parity on the first site.
void append_swap_terms(std::vector<FermionTerm> &terms, const EncodedRegisterMap &map, int j, Complex coeff,
                       bool first_parity) {
    const auto &w = map.well(j);
    std::vector<model::LadderOp> prefix;
    if (first_parity) {
        prefix.push_back(model::parity(w.first));
    }
    for (unsigned k : map.intervening_modes(j)) {
        prefix.push_back(model::parity(k));
    }
    for (auto [to, from] : {std::pair{w.second, w.first}, std::pair{w.first, w.second}}) {
        FermionTerm t{coeff, prefix};
        t.ops.push_back(model::create(to));
        t.ops.push_back(model::annihilate(from));
        terms.push_back(std::move(t));
    }
}

CMatrix build(const EncodedRegisterMap &map, const std::vector<FermionTerm> &terms) {
    return model::sector_matrix(map.sector(), terms);
}

}  // namespace

std::vector<FermionTerm> pauli_terms(const EncodedRegisterMap &map, Axis axis, int j) {
    std::vector<FermionTerm> terms;
    switch (axis) {
        case Axis::X:
            append_swap_terms(terms, map, j, 1.0, false);
            break;
        case Axis::Y:
            // -i Z X = i Z_first X with Z_first = 1 - 2 n_first.
            append_swap_terms(terms, map, j, kI, true);
            break;
        case Axis::Z:
            terms.push_back({1.0, {model::parity(map.well(j).second)}});
            break;
    }
    return terms;
}

std::vector<FermionTerm> rotation_terms(const EncodedRegisterMap &map, Axis axis, double theta, int j) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    // The identity term is exact on the sector: n_first + n_second = 1.
    std::vector<FermionTerm> terms = {{c, {}}};
    switch (axis) {
        case Axis::X:
            append_swap_terms(terms, map, j, -kI * s, false);
            break;
        case Axis::Y:
            // -i sin * (i Z_first X) = sin * Z_first X
            append_swap_terms(terms, map, j, s, true);
            break;
        case Axis::Z:
            terms.push_back({-kI * s, {model::parity(map.well(j).second)}});
            break;
    }
    return terms;
}

std::vector<FermionTerm> hadamard_terms(const EncodedRegisterMap &map, int j) {
    const double r = 1.0 / std::numbers::sqrt2;
    std::vector<FermionTerm> terms = {{-r, {model::parity(map.well(j).first)}}};
    append_swap_terms(terms, map, j, r, false);
    return terms;
}

OperatorMatrix encoded_pauli(const EncodedRegisterMap &map, Axis axis, int j) {
    return OperatorMatrix(build(map, pauli_terms(map, axis, j)), map.sector().tag(), OperatorRole::hermitian);
}

OperatorMatrix encoded_z(const EncodedRegisterMap &map, int j) {
    return encoded_pauli(map, Axis::Z, j);
}

OperatorMatrix encoded_x(const EncodedRegisterMap &map, int j) {
    return encoded_pauli(map, Axis::X, j);
}

OperatorMatrix encoded_y(const EncodedRegisterMap &map, int j) {
    return encoded_pauli(map, Axis::Y, j);
}

OperatorMatrix encoded_rotation(const EncodedRegisterMap &map, Axis axis, double theta, int j) {
    return OperatorMatrix(build(map, rotation_terms(map, axis, theta, j)), map.sector().tag(), OperatorRole::unitary);
}

OperatorMatrix encoded_hadamard(const EncodedRegisterMap &map, int j) {
    return OperatorMatrix(build(map, hadamard_terms(map, j)), map.sector().tag(), OperatorRole::unitary);
}

InvalidOutcome::InvalidOutcome(int outcome)
    : std::invalid_argument("measurement outcome " + std::to_string(outcome) + " is not 0 or 1") {
}

namespace {

// 1.0 on sector states where qubit j reads `outcome`, else 0.0.
std::vector<double> outcome_mask(const EncodedRegisterMap &map, int j, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw InvalidOutcome(outcome);
    }
    const auto &w = map.well(j);
    const unsigned mode = outcome == 0 ? w.first : w.second;
    std::vector<double> mask(map.dim());
    for (std::size_t k = 0; k < map.dim(); ++k) {
        mask[k] = map.sector().state(k).occupied(mode) ? 1.0 : 0.0;
    }
    return mask;
}

void require_state(const EncodedRegisterMap &map, const CVector &state) {
    if (static_cast<std::size_t>(state.size()) != map.dim()) {
        throw std::invalid_argument("state dimension does not match the sector");
    }
}

MeasurementResult project(const EncodedRegisterMap &map, const CVector &state, int j, int outcome, double p) {
    if (!(p > 0.0)) {
        throw ZeroNorm();
    }
    const auto mask = outcome_mask(map, j, outcome);
    MeasurementResult out;
    out.post_state = state;
    for (std::size_t k = 0; k < mask.size(); ++k) {
        if (mask[k] == 0.0) {
            out.post_state(static_cast<Eigen::Index>(k)) = 0.0;
        }
    }
    const auto n = static_cast<std::size_t>(out.post_state.size());
    kernels::scale_real(out.post_state.data(), 1.0 / std::sqrt(p), n);
    out.record.qubit = j;
    out.record.outcome = outcome;
    out.record.probability = p;
    out.record.post_state_norm = std::sqrt(kernels::norm_squared(out.post_state.data(), n));
    return out;
}

}  // namespace

OperatorMatrix projector(const EncodedRegisterMap &map, int j, int outcome) {
    const auto mask = outcome_mask(map, j, outcome);
    const auto d = static_cast<Eigen::Index>(map.dim());
    CMatrix p = CMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        p(k, k) = mask[static_cast<std::size_t>(k)];
    }
    return OperatorMatrix(std::move(p), map.sector().tag(), OperatorRole::projector);
}

std::array<double, 2> outcome_probabilities(const EncodedRegisterMap &map, const CVector &state, int j) {
    require_state(map, state);
    const auto n = static_cast<std::size_t>(state.size());
    const double total = kernels::norm_squared(state.data(), n);
    if (!(total > 0.0)) {
        throw ZeroNorm();
    }
    const auto m0 = outcome_mask(map, j, 0);
    const auto m1 = outcome_mask(map, j, 1);
    return {kernels::weighted_norm_squared(state.data(), m0.data(), n) / total,
            kernels::weighted_norm_squared(state.data(), m1.data(), n) / total};
}

double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

MeasurementResult measure_encoded(const EncodedRegisterMap &map, const CVector &state, int j, std::uint64_t seed) {
    const auto p = outcome_probabilities(map, state, j);
    std::mt19937_64 rng(seed);
    const int outcome = uniform_unit(rng) < p[0] ? 0 : 1;
    auto out = project(map, state / std::sqrt(state.squaredNorm()), j, outcome, p[outcome]);
    out.record.seed = seed;
    return out;
}

MeasurementResult measure_encoded_forced(const EncodedRegisterMap &map, const CVector &state, int j, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw InvalidOutcome(outcome);
    }
    const auto p = outcome_probabilities(map, state, j);
    auto out = project(map, state / std::sqrt(state.squaredNorm()), j, outcome, p[outcome]);
    out.record.forced = true;
    return out;
}

}  // namespace fermicluster::encoded
