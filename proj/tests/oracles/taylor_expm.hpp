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

#include <Eigen/Dense>

#include "fermicluster/types.hpp"

namespace oracle {

/// exp(-i t H) by scaling and squaring of a truncated Taylor series.
inline fermicluster::CMatrix taylor_expm(const fermicluster::CMatrix &h, double t) {
    using fermicluster::CMatrix;
    const CMatrix a = fermicluster::Complex(0.0, -t) * h;
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const CMatrix s = a / std::ldexp(1.0, squarings);
    CMatrix term = CMatrix::Identity(h.rows(), h.cols());
    CMatrix sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = term * s / static_cast<double>(k);
        sum += term;
    }
    for (int k = 0; k < squarings; ++k) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace oracle
