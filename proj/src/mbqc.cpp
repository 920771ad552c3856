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

#include "fermicluster/mbqc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>

#include "fermicluster/kernels.hpp"
#include "fermicluster/qubit.hpp"
#include "fermicluster/spectral.hpp"

namespace fermicluster::mbqc {

using encoded::EncodedRegisterMap;

QubitAlreadyMeasured::QubitAlreadyMeasured(int qubit)
    : std::logic_error("encoded qubit " + std::to_string(qubit) + " was already measured") {
}

PauliFrame PauliFrame::compose(const PauliFrame &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("PauliFrame: size mismatch");
    }
    PauliFrame out = *this;
    for (std::size_t k = 0; k < x_.size(); ++k) {
        out.x_[k] ^= other.x_[k];
        out.z_[k] ^= other.z_[k];
    }
    return out;
}

std::string PauliFrame::label() const {
    std::string out;
    for (std::size_t k = 0; k < x_.size(); ++k) {
        out += x_[k] ? (z_[k] ? 'Y' : 'X') : (z_[k] ? 'Z' : 'I');
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ChainState chain_ground_state(const EncodedRegisterMap &map) {
    // Diagonalizing a 2^N sector is the expensive part of every shot; the
    // result depends only on the sector, so it is cached per basis tag.
    static std::mutex mutex;
    static std::map<std::string, CVector> cache;
    CVector ground;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(map.sector().tag());
        if (it == cache.end()) {
            it = cache.emplace(map.sector().tag(),
                               spectral::ground_state(model::well_hopping(map.sector(), 1.0)).vector)
                     .first;
        }
        ground = it->second;
    }
    ChainState s;
    s.amplitudes = std::move(ground);
    s.measured.assign(static_cast<std::size_t>(map.num_qubits()), false);
    s.outcomes.assign(static_cast<std::size_t>(map.num_qubits()), -1);
    return s;
}

namespace {

void require_unmeasured(const EncodedRegisterMap &map, const ChainState &state, int j) {
    if (j < 0 || j >= map.num_qubits()) {
        throw std::out_of_range("encoded qubit out of range");
    }
    if (state.measured.at(static_cast<std::size_t>(j))) {
        throw QubitAlreadyMeasured(j);
    }
}

// R_Z(theta)_j is diagonal on the sector; apply it as an elementwise product.
void apply_rz(const EncodedRegisterMap &map, CVector &amps, int j, double theta) {
    const unsigned second = map.well(j).second;
    const Complex p0 = std::exp(-kI * (theta / 2));
    const Complex p1 = std::exp(kI * (theta / 2));
    std::vector<Complex> diag(map.dim());
    for (std::size_t k = 0; k < map.dim(); ++k) {
        diag[k] = map.sector().state(k).occupied(second) ? p1 : p0;
    }
    kernels::multiply_elementwise(amps.data(), diag.data(), diag.size());
}

StepResult finish_step(const encoded::MeasurementResult &m, const ChainState &state, int j, double theta,
                       double applied) {
    StepResult out;
    out.entry.measurement = m.record;
    out.entry.theta = theta;
    out.entry.applied_theta = applied;
    out.state = state;
    out.state.amplitudes = m.post_state;
    out.state.measured[static_cast<std::size_t>(j)] = true;
    out.state.outcomes[static_cast<std::size_t>(j)] = m.record.outcome;
    return out;
}

CVector rotate_for_step(const EncodedRegisterMap &map, const ChainState &state, int j, double theta) {
    require_unmeasured(map, state, j);
    CVector amps = state.amplitudes;
    apply_rz(map, amps, j, theta);
    return model::apply_terms(map.sector(), encoded::hadamard_terms(map, j), amps);
}

}  // namespace

StepResult teleport_step(const EncodedRegisterMap &map, const ChainState &state, int j, double theta,
                         std::uint64_t seed) {
    const CVector rotated = rotate_for_step(map, state, j, theta);
    return finish_step(encoded::measure_encoded(map, rotated, j, seed), state, j, theta, theta);
}

StepResult teleport_step_forced(const EncodedRegisterMap &map, const ChainState &state, int j, double theta,
                                int outcome) {
    const CVector rotated = rotate_for_step(map, state, j, theta);
    return finish_step(encoded::measure_encoded_forced(map, rotated, j, outcome), state, j, theta, theta);
}

CVector unmeasured_state(const EncodedRegisterMap &map, const ChainState &state) {
    const int n = map.num_qubits();
    std::vector<int> free_qubits;
    for (int q = 0; q < n; ++q) {
        if (!state.measured[static_cast<std::size_t>(q)]) {
            free_qubits.push_back(q);
        }
    }
    const CVector enc = map.to_encoded(state.amplitudes);
    CVector out = CVector::Zero(Eigen::Index{1} << free_qubits.size());
    for (std::uint64_t b = 0; b < map.dim(); ++b) {
        bool consistent = true;
        std::uint64_t local = 0;
        for (int q = 0; q < n && consistent; ++q) {
            const int bit = static_cast<int>((b >> (n - 1 - q)) & 1u);
            if (state.measured[static_cast<std::size_t>(q)]) {
                consistent = bit == state.outcomes[static_cast<std::size_t>(q)];
            } else {
                local = (local << 1) | static_cast<std::uint64_t>(bit);
            }
        }
        if (consistent) {
            out(static_cast<Eigen::Index>(local)) += enc(static_cast<Eigen::Index>(b));
        }
    }
    return out;
}

CVector ideal_chain_output(std::span<const double> thetas) {
    CVector psi = qubit::plus_state(1);
    for (double t : thetas) {
        psi = qubit::hadamard() * (qubit::rz(t) * psi);
    }
    return psi;
}

namespace {

// Undo the frame and the CZ bonds among the r unmeasured qubits, then project
// all but the first onto |+>.
void fill_logical_output(ProtocolTranscript &t, int first_free) {
    const int r = t.num_qubits - first_free;
    CVector chi = t.output;
    const std::uint64_t dim = std::uint64_t{1} << r;
    for (std::uint64_t k = 0; k < dim; ++k) {
        int parity = std::popcount(k & (k >> 1));
        for (int q = 0; q < r; ++q) {
            // X^x Z^z undone as Z^z X^x; the global phase is irrelevant.
            if (t.frame.z(first_free + q) && ((k >> (r - 1 - q)) & 1u)) {
                ++parity;
            }
        }
        if (parity & 1) {
            chi(static_cast<Eigen::Index>(k)) = -chi(static_cast<Eigen::Index>(k));
        }
    }
    std::uint64_t x_mask = 0;
    for (int q = 0; q < r; ++q) {
        if (t.frame.x(first_free + q)) {
            x_mask |= std::uint64_t{1} << (r - 1 - q);
        }
    }
    CVector flipped(chi.size());
    for (std::uint64_t k = 0; k < dim; ++k) {
        flipped(static_cast<Eigen::Index>(k ^ x_mask)) = chi(static_cast<Eigen::Index>(k));
    }
    const std::uint64_t rest = dim / 2;
    const double plus = 1.0 / std::sqrt(static_cast<double>(rest));
    CVector logical = CVector::Zero(2);
    for (std::uint64_t k = 0; k < dim; ++k) {
        logical(static_cast<Eigen::Index>(k / rest)) += plus * flipped(static_cast<Eigen::Index>(k));
    }
    const double norm = std::sqrt(logical.squaredNorm() / flipped.squaredNorm());
    t.remainder_overlap = norm;
    t.logical_output = logical / logical.norm();
}

template <typename Measure>
ProtocolTranscript run_chain_impl(int n, std::span<const double> thetas, Measure &&measure) {
    if (n < 2) {
        throw std::invalid_argument("run_chain: need at least two encoded qubits");
    }
    if (thetas.size() > static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("run_chain: at most n-1 angles");
    }
    const auto map = encoded::chain_register(n);
    ProtocolTranscript t;
    t.num_qubits = n;
    t.thetas.assign(thetas.begin(), thetas.end());
    t.frame = PauliFrame(n);
    for (int j = 0; j + 1 < n; ++j) {
        t.frame.flip_z(j);
    }
    ChainState state = chain_ground_state(map);
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        const int j = static_cast<int>(k);
        const bool x = t.frame.x(j);
        const double applied = x ? -thetas[k] : thetas[k];
        StepResult step = measure(map, state, j, applied, k);
        step.entry.theta = thetas[k];
        const int m = step.entry.measurement.outcome;
        if ((m != 0) != t.frame.z(j)) {
            t.frame.flip_x(j + 1);
        }
        if (x) {
            t.frame.flip_z(j + 1);
        }
        if (t.frame.x(j)) {
            t.frame.flip_x(j);
        }
        if (t.frame.z(j)) {
            t.frame.flip_z(j);
        }
        t.steps.push_back(step.entry);
        state = std::move(step.state);
    }
    t.final_state = state;
    t.output = unmeasured_state(map, state);
    t.output /= t.output.norm();
    fill_logical_output(t, static_cast<int>(thetas.size()));
    return t;
}

}  // namespace

ProtocolTranscript run_chain(int n, std::span<const double> thetas, std::uint64_t seed) {
    auto t = run_chain_impl(n, thetas, [seed](const EncodedRegisterMap &map, const ChainState &s, int j,
                                              double theta, std::size_t k) {
        return teleport_step(map, s, j, theta, derive_seed(seed, k));
    });
    t.seed = seed;
    return t;
}

ProtocolTranscript run_chain_forced(int n, std::span<const double> thetas, std::span<const int> outcomes) {
    if (outcomes.size() != thetas.size()) {
        throw std::invalid_argument("run_chain_forced: one outcome per angle");
    }
    return run_chain_impl(n, thetas, [outcomes](const EncodedRegisterMap &map, const ChainState &s, int j,
                                                double theta, std::size_t k) {
        return teleport_step_forced(map, s, j, theta, outcomes[k]);
    });
}

CVector orbital_product_state(const EncodedRegisterMap &map, std::span<const std::array<Complex, 2>> orbitals) {
    const int n = map.num_qubits();
    if (orbitals.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("orbital_product_state: one orbital per well");
    }
    const unsigned modes = static_cast<unsigned>(map.sector().ordering().size());
    CVector out = CVector::Zero(static_cast<Eigen::Index>(map.dim()));
    for (std::uint64_t b = 0; b < map.dim(); ++b) {
        Complex amp = 1.0;
        fock::FockState s{0, modes};
        // Leftmost factor is well 0, so well n-1 acts on the vacuum first.
        for (int w = n - 1; w >= 0; --w) {
            const int bit = static_cast<int>((b >> (n - 1 - w)) & 1u);
            const auto &well = map.well(w);
            const auto r = fock::apply_creation(s, bit ? well.second : well.first);
            s = r.state;
            amp *= orbitals[static_cast<std::size_t>(w)][static_cast<std::size_t>(bit)] * static_cast<double>(r.sign);
        }
        const auto idx = map.sector().index_of(s);
        out(static_cast<Eigen::Index>(*idx)) += amp;
    }
    return out;
}

namespace {

const std::array<Complex, 2> kPlusOrbital = {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};

CVector subgraph_reference(const std::array<Complex, 2> &in1, const std::array<Complex, 2> &in2) {
    CVector a(2), b(2);
    a << in1[0], in1[1];
    b << in2[0], in2[1];
    const CMatrix local = qubit::hadamard() * qubit::rz(std::numbers::pi / 2);
    return qubit::kron(local, local) * (qubit::controlled_z(0, 1, 2) * qubit::kron(a, b));
}

}  // namespace

SubgraphTranscript run_subgraph(const SubgraphOptions &options) {
    if (options.forced) {
        for (int m : *options.forced) {
            if (m != 0 && m != 1) {
                throw encoded::InvalidOutcome(m);
            }
        }
    }
    {
        auto sorted = options.order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 3>{0, 1, 2}) {
            throw std::invalid_argument("run_subgraph: order must be a permutation of {0,1,2}");
        }
    }
    const auto map = encoded::subgraph_register();
    std::array<Complex, 2> in1 = kPlusOrbital;
    std::array<Complex, 2> in2 = kPlusOrbital;
    CVector state;
    if (options.inputs) {
        in1 = (*options.inputs)[0];
        in2 = (*options.inputs)[1];
        std::array<std::array<Complex, 2>, 5> orbitals = {in1, kPlusOrbital, kPlusOrbital, in2, kPlusOrbital};
        state = orbital_product_state(map, orbitals);
    } else {
        state = spectral::ground_state(model::subgraph_2d(1.0)).vector;
    }

    // m1, m2, m3 -> qubit and basis-change operator.
    const std::array<int, 3> qubit_of = {kSubgraphX1, kSubgraphX2, kSubgraphY};
    SubgraphTranscript t;
    ChainState cs;
    cs.measured.assign(5, false);
    cs.outcomes.assign(5, -1);
    for (std::size_t step = 0; step < 3; ++step) {
        const int which = options.order[step];
        const int q = qubit_of[static_cast<std::size_t>(which)];
        const auto change = q == kSubgraphY ? encoded::rotation_terms(map, encoded::Axis::X, std::numbers::pi / 2, q)
                                            : encoded::hadamard_terms(map, q);
        state = model::apply_terms(map.sector(), change, state);
        const auto m = options.forced
                           ? encoded::measure_encoded_forced(map, state, q, (*options.forced)[static_cast<std::size_t>(which)])
                           : encoded::measure_encoded(map, state, q, derive_seed(options.seed, step));
        state = m.post_state;
        t.outcomes[static_cast<std::size_t>(which)] = m.record.outcome;
        t.records.push_back(m.record);
        cs.measured[static_cast<std::size_t>(q)] = true;
        cs.outcomes[static_cast<std::size_t>(q)] = m.record.outcome;
    }
    cs.amplitudes = state;
    t.output = unmeasured_state(map, cs);
    t.output /= t.output.norm();
    t.reference = subgraph_reference(in1, in2);
    t.entropy_bits = qubit::entanglement_entropy_bits(t.output, 1, 2);
    return t;
}

std::vector<std::string> matching_paulis(const CVector &reference, const CVector &output, double tol) {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::vector<std::string> out;
    for (char a : kLetters) {
        for (char b : kLetters) {
            const std::string label{a, b};
            const CVector candidate = qubit::pauli_string(label) * reference;
            if (std::abs(qubit::state_fidelity(candidate, output) - 1.0) < tol) {
                out.push_back(label);
            }
        }
    }
    return out;
}

std::vector<ByproductEntry> generate_byproduct_table(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::array<std::array<Complex, 2>, 2> generic{};
    for (auto &orb : generic) {
        for (auto &c : orb) {
            c = Complex(gauss(rng), gauss(rng));
        }
        const double norm = std::sqrt(std::norm(orb[0]) + std::norm(orb[1]));
        orb[0] /= norm;
        orb[1] /= norm;
    }

    std::vector<ByproductEntry> table;
    std::vector<bool> used(kListedByproducts.size(), false);
    for (int code = 0; code < 8; ++code) {
        ByproductEntry e;
        e.outcomes = {(code >> 2) & 1, (code >> 1) & 1, code & 1};
        SubgraphOptions plus;
        plus.forced = e.outcomes;
        const auto tp = run_subgraph(plus);
        e.candidates = matching_paulis(tp.reference, tp.output);
        for (std::size_t k = 0; k < kListedByproducts.size() && e.listed.empty(); ++k) {
            if (used[k]) {
                continue;
            }
            for (const auto &c : e.candidates) {
                if (c == kListedByproducts[k]) {
                    e.listed = c;
                    used[k] = true;
                    break;
                }
            }
        }
        SubgraphOptions gen = plus;
        gen.inputs = generic;
        const auto tg = run_subgraph(gen);
        const auto g = matching_paulis(tg.reference, tg.output);
        e.generic = g.size() == 1 ? g.front() : std::string();
        table.push_back(std::move(e));
    }
    return table;
}

}  // namespace fermicluster::mbqc
