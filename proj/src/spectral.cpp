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

#include "fermicluster/spectral.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace fermicluster::spectral {

DegenerateGroundState::DegenerateGroundState(int degeneracy, double gap)
    : std::runtime_error("ground state is " + std::to_string(degeneracy) + "-fold degenerate (gap " +
                         std::to_string(gap) + ")"),
      degeneracy_(degeneracy) {
}

namespace {

void require_hermitian(const model::OperatorMatrix &h) {
    const double dev = model::hermiticity_deviation(h.entries());
    if (h.role() != model::OperatorRole::hermitian && h.role() != model::OperatorRole::projector) {
        throw model::NotHermitian(dev);
    }
    if (dev >= model::kHermitianTolerance) {
        throw model::NotHermitian(dev);
    }
}

void fix_phase(CMatrix &vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::Index best = 0;
        double best_abs = -1.0;
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            // Ties within rounding go to the lowest index so the choice is stable.
            const double a = std::abs(vectors(r, c));
            if (a > best_abs + 1e-12) {
                best_abs = a;
                best = r;
            }
        }
        if (best_abs > 0.0) {
            const Complex pivot = vectors(best, c);
            vectors.col(c) *= std::conj(pivot) / std::abs(pivot);
            vectors(best, c) = std::abs(vectors(best, c));
        }
    }
}

}  // namespace

Spectrum diagonalize(const model::OperatorMatrix &h) {
    require_hermitian(h);
    Spectrum out;
    out.basis_tag = h.basis_tag();
    if (h.dim() == 0) {
        return out;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.entries());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("diagonalize: eigensolver failed");
    }
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    fix_phase(out.eigenvectors);
    return out;
}

int ground_degeneracy(const Spectrum &spectrum) {
    const auto &ev = spectrum.eigenvalues;
    int count = 0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (ev(k) - ev(0) < kDegeneracyThreshold) {
            ++count;
        }
    }
    return count;
}

GroundState ground_state(const Spectrum &spectrum) {
    const auto &ev = spectrum.eigenvalues;
    if (ev.size() == 0) {
        throw std::invalid_argument("ground_state: empty spectrum");
    }
    GroundState g;
    g.energy = ev(0);
    g.gap = ev.size() > 1 ? ev(1) - ev(0) : 0.0;
    g.degeneracy = ground_degeneracy(spectrum);
    if (g.degeneracy > 1) {
        throw DegenerateGroundState(g.degeneracy, g.gap);
    }
    g.vector = spectrum.eigenvectors.col(0);
    return g;
}

GroundState ground_state(const model::OperatorMatrix &h) {
    return ground_state(diagonalize(h));
}

model::OperatorMatrix expm(const model::OperatorMatrix &h, double t) {
    const Spectrum s = diagonalize(h);
    CVector phases(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::exp(-kI * (t * s.eigenvalues(k)));
    }
    CMatrix u = s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
    return model::OperatorMatrix(std::move(u), h.basis_tag(), model::OperatorRole::unitary);
}

model::OperatorMatrix propagate(const model::PulseSchedule &schedule) {
    if (schedule.empty()) {
        throw std::invalid_argument("propagate: empty schedule");
    }
    const auto steps = schedule.steps();
    model::OperatorMatrix u = expm(steps[0].hamiltonian, steps[0].duration);
    for (std::size_t k = 1; k < steps.size(); ++k) {
        u = model::compose(expm(steps[k].hamiltonian, steps[k].duration), u);
    }
    return u;
}

double expectation(const model::OperatorMatrix &h, const CVector &psi) {
    if (psi.size() != h.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    const double norm = psi.squaredNorm();
    if (norm == 0.0) {
        throw std::invalid_argument("expectation: zero vector");
    }
    return psi.dot(h.entries() * psi).real() / norm;
}

}  // namespace fermicluster::spectral
