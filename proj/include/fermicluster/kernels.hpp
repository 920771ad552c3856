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

#include <complex>
#include <cstddef>
#include <string_view>

// State-vector kernels with a scalar reference and an AVX2/FMA variant. The
// variant is picked once at startup from the CPU flags; setting
// FERMICLUSTER_ISA=scalar in the environment forces the reference path.
namespace fermicluster::kernels {

using Complex = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
    /// sum_i conj(a_i) b_i
    Complex (*inner_product)(const Complex *a, const Complex *b, std::size_t n);
    /// sum_i |a_i|^2
    double (*norm_squared)(const Complex *a, std::size_t n);
    /// sum_i w_i |a_i|^2
    double (*weighted_norm_squared)(const Complex *a, const double *w, std::size_t n);
    /// a_i *= s
    void (*scale_real)(Complex *a, double s, std::size_t n);
    /// a_i *= d_i
    void (*multiply_elementwise)(Complex *a, const Complex *d, std::size_t n);
};

bool isa_available(Isa isa);
/// Throws std::invalid_argument if the ISA is not available on this host.
const KernelTable &table(Isa isa);
Isa active_isa();
const KernelTable &active();

namespace scalar {
extern const KernelTable kTable;
}

#if defined(FERMICLUSTER_HAVE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}
#endif

inline Complex inner_product(const Complex *a, const Complex *b, std::size_t n) {
    return active().inner_product(a, b, n);
}
inline double norm_squared(const Complex *a, std::size_t n) {
    return active().norm_squared(a, n);
}
inline double weighted_norm_squared(const Complex *a, const double *w, std::size_t n) {
    return active().weighted_norm_squared(a, w, n);
}
inline void scale_real(Complex *a, double s, std::size_t n) {
    active().scale_real(a, s, n);
}
inline void multiply_elementwise(Complex *a, const Complex *d, std::size_t n) {
    active().multiply_elementwise(a, d, n);
}

}  // namespace fermicluster::kernels
