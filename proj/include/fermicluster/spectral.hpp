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

#include <stdexcept>

#include "fermicluster/model.hpp"

namespace fermicluster::spectral {

inline constexpr double kDegeneracyThreshold = 1e-8;

class DegenerateGroundState : public std::runtime_error {
   public:
    DegenerateGroundState(int degeneracy, double gap);
    int degeneracy() const { return degeneracy_; }

   private:
    int degeneracy_;
};

struct Spectrum {
    RVector eigenvalues;   // ascending
    CMatrix eigenvectors;  // column k belongs to eigenvalues(k)
    std::string basis_tag;
};

/// Full decomposition of a hermitian operator. Each eigenvector's
/// largest-magnitude component (lowest index on ties) is made real positive.
Spectrum diagonalize(const model::OperatorMatrix &h);

struct GroundState {
    double energy = 0.0;
    CVector vector;
    int degeneracy = 1;
    double gap = 0.0;
};

/// Number of eigenvalues within the degeneracy threshold of the lowest one.
int ground_degeneracy(const Spectrum &spectrum);

/// Lowest eigenpair. Throws DegenerateGroundState if lambda_1 - lambda_0 < 1e-8.
GroundState ground_state(const model::OperatorMatrix &h);
GroundState ground_state(const Spectrum &spectrum);

/// exp(-i t H), built from the spectral decomposition.
model::OperatorMatrix expm(const model::OperatorMatrix &h, double t);

/// Product of the pulse propagators, last step leftmost.
model::OperatorMatrix propagate(const model::PulseSchedule &schedule);

/// <psi|H|psi> / <psi|psi>.
double expectation(const model::OperatorMatrix &h, const CVector &psi);

}  // namespace fermicluster::spectral
