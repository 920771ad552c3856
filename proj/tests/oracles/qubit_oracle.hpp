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

#include <cmath>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "fermicluster/types.hpp"
#include "jw_oracle.hpp"

// Plain state-vector algebra on n qubits, qubit 0 most significant. Written
// from the textbook definitions without the library's qubit module.
namespace oracle {

using fermicluster::CVector;

inline CMatrix gate(char name) {
    CMatrix g = CMatrix::Zero(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (name) {
        case 'I': g << 1, 0, 0, 1; break;
        case 'X': g << 0, 1, 1, 0; break;
        case 'Y': g << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 'Z': g << 1, 0, 0, -1; break;
        case 'H': g << r, r, r, -r; break;
        default: break;
    }
    return g;
}

inline CMatrix rz(double theta) {
    CMatrix g = CMatrix::Zero(2, 2);
    g(0, 0) = std::exp(Complex(0, -theta / 2));
    g(1, 1) = std::exp(Complex(0, theta / 2));
    return g;
}

inline CMatrix rx(double theta) {
    CMatrix g(2, 2);
    g << std::cos(theta / 2), Complex(0, -std::sin(theta / 2)), Complex(0, -std::sin(theta / 2)),
        std::cos(theta / 2);
    return g;
}

inline CMatrix paulis(std::string_view labels) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (char c : labels) {
        out = kron2(out, gate(c));
    }
    return out;
}

inline CMatrix single(const CMatrix &g, int qubit, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        out = kron2(out, q == qubit ? g : CMatrix::Identity(2, 2));
    }
    return out;
}

/// Diagonal CZ between qubits a and b.
inline CMatrix cz(int a, int b, int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    CMatrix out = CMatrix::Identity(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        if (((k >> (n - 1 - a)) & 1) && ((k >> (n - 1 - b)) & 1)) {
            out(k, k) = -1.0;
        }
    }
    return out;
}

inline CVector plus(int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    return CVector::Constant(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
}

/// Z_0 ... Z_{n-2} CZ-chain |+>^n.
inline CVector dressed_cluster(int n) {
    CVector psi = plus(n);
    for (int j = 0; j + 1 < n; ++j) {
        psi = cz(j, j + 1, n) * psi;
    }
    for (int j = 0; j + 1 < n; ++j) {
        psi = single(gate('Z'), j, n) * psi;
    }
    return psi;
}

/// |<a|b>| / (|a| |b|).
inline double overlap(const CVector &a, const CVector &b) {
    return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

/// Projects qubit 0 of an n-qubit state onto |m> and returns the other qubits.
inline CVector project_first(const CVector &psi, int m) {
    const Eigen::Index half = psi.size() / 2;
    return psi.segment(m * half, half);
}

}  // namespace oracle
