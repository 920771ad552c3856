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

#include "fermicluster/qubit.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace fermicluster::qubit {

CMatrix identity(Eigen::Index dim) {
    return CMatrix::Identity(dim, dim);
}

CMatrix pauli(char label) {
    CMatrix p = CMatrix::Zero(2, 2);
    switch (label) {
        case 'I':
            p(0, 0) = p(1, 1) = 1.0;
            break;
        case 'X':
            p(0, 1) = p(1, 0) = 1.0;
            break;
        case 'Y':
            p(0, 1) = -kI;
            p(1, 0) = kI;
            break;
        case 'Z':
            p(0, 0) = 1.0;
            p(1, 1) = -1.0;
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli label '") + label + "'");
    }
    return p;
}

CMatrix pauli_string(std::string_view labels) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (char c : labels) {
        out = kron(out, pauli(c));
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CVector kron(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

CMatrix on_qubit(const CMatrix &op, int qubit, int num_qubits) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    const Eigen::Index left = Eigen::Index{1} << qubit;
    const Eigen::Index right = Eigen::Index{1} << (num_qubits - qubit - 1);
    return kron(kron(identity(left), op), identity(right));
}

CMatrix controlled_z(int a, int b, int num_qubits) {
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits || a == b) {
        throw std::out_of_range("controlled_z: bad qubit pair");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    CMatrix out = CMatrix::Identity(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const bool ba = (k >> (num_qubits - 1 - a)) & 1;
        const bool bb = (k >> (num_qubits - 1 - b)) & 1;
        if (ba && bb) {
            out(k, k) = -1.0;
        }
    }
    return out;
}

CMatrix hadamard() {
    return (pauli('X') + pauli('Z')) / std::numbers::sqrt2;
}

namespace {
CMatrix rotation(char axis, double theta) {
    return std::cos(theta / 2) * identity(2) - kI * std::sin(theta / 2) * pauli(axis);
}
}  // namespace

CMatrix rx(double theta) {
    return rotation('X', theta);
}
CMatrix ry(double theta) {
    return rotation('Y', theta);
}
CMatrix rz(double theta) {
    return rotation('Z', theta);
}

CVector plus_state(int num_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    return CVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
}

CVector basis_state(Eigen::Index index, Eigen::Index dim) {
    CVector v = CVector::Zero(dim);
    v(index) = 1.0;
    return v;
}

Complex pauli_expectation(const CVector &psi, std::string_view labels) {
    const int n = static_cast<int>(labels.size());
    if (psi.size() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("pauli_expectation: dimension mismatch");
    }
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    int y_count = 0;
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        switch (labels[static_cast<std::size_t>(q)]) {
            case 'I':
                break;
            case 'X':
                x_mask |= bit;
                break;
            case 'Z':
                z_mask |= bit;
                break;
            case 'Y':
                // Y = i X Z
                x_mask |= bit;
                z_mask |= bit;
                ++y_count;
                break;
            default:
                throw std::invalid_argument("pauli_expectation: unknown label");
        }
    }
    Complex acc = 0.0;
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
        const auto bits = static_cast<std::uint64_t>(k);
        const double sign = (std::popcount(bits & z_mask) & 1) ? -1.0 : 1.0;
        acc += std::conj(psi(static_cast<Eigen::Index>(bits ^ x_mask))) * psi(k) * sign;
    }
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kIPow[y_count % 4] * acc / psi.squaredNorm();
}

double phase_invariant_fidelity(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("phase_invariant_fidelity: shape mismatch");
    }
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

double state_fidelity(const CVector &a, const CVector &b) {
    const double na = a.squaredNorm();
    const double nb = b.squaredNorm();
    if (na == 0.0 || nb == 0.0) {
        return 0.0;
    }
    return std::norm(a.dot(b)) / (na * nb);
}

double entanglement_entropy_bits(const CVector &state, int left_qubits, int num_qubits) {
    const Eigen::Index rows = Eigen::Index{1} << left_qubits;
    const Eigen::Index cols = Eigen::Index{1} << (num_qubits - left_qubits);
    if (state.size() != rows * cols) {
        throw std::invalid_argument("entanglement_entropy_bits: dimension mismatch");
    }
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = state(r * cols + c);
        }
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    const RVector s = svd.singularValues();
    const double total = s.squaredNorm();
    double entropy = 0.0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        const double p = s(k) * s(k) / total;
        if (p > 1e-300) {
            entropy -= p * std::log2(p);
        }
    }
    return entropy;
}

int operator_schmidt_rank(const CMatrix &u, double tolerance) {
    if (u.rows() != 4 || u.cols() != 4) {
        throw std::invalid_argument("operator_schmidt_rank: expects a two-qubit operator");
    }
    // Realign U[(i1 i2), (j1 j2)] into R[(i1 j1), (i2 j2)].
    CMatrix r(4, 4);
    for (int i1 = 0; i1 < 2; ++i1) {
        for (int i2 = 0; i2 < 2; ++i2) {
            for (int j1 = 0; j1 < 2; ++j1) {
                for (int j2 = 0; j2 < 2; ++j2) {
                    r(2 * i1 + j1, 2 * i2 + j2) = u(2 * i1 + i2, 2 * j1 + j2);
                }
            }
        }
    }
    Eigen::JacobiSVD<CMatrix> svd(r);
    const RVector s = svd.singularValues();
    const double scale = s(0);
    int rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s(k) > tolerance * scale) {
            ++rank;
        }
    }
    return rank;
}

MakhlinInvariants makhlin_invariants(const CMatrix &u) {
    if (u.rows() != 4 || u.cols() != 4) {
        throw std::invalid_argument("makhlin_invariants: expects a two-qubit operator");
    }
    CMatrix q(4, 4);
    const double r = 1.0 / std::numbers::sqrt2;
    q << r, 0, 0, kI * r,
         0, kI * r, r, 0,
         0, kI * r, -r, 0,
         r, 0, 0, -kI * r;
    const CMatrix ub = q.adjoint() * u * q;
    const CMatrix m = ub.transpose() * ub;
    const Complex det = u.determinant();
    const Complex tr = m.trace();
    const Complex tr2 = (m * m).trace();
    MakhlinInvariants out;
    out.g1 = tr * tr / (16.0 * det);
    out.g2 = ((tr * tr - tr2) / (4.0 * det)).real();
    return out;
}

double entangling_power(const CMatrix &u) {
    return (2.0 / 9.0) * (1.0 - std::abs(makhlin_invariants(u).g1));
}

}  // namespace fermicluster::qubit
