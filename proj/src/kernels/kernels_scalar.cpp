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

#include "fermicluster/kernels.hpp"

namespace fermicluster::kernels::scalar {

namespace {

Complex inner_product(const Complex *a, const Complex *b, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_squared(const Complex *a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return acc;
}

double weighted_norm_squared(const Complex *a, const double *w, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += w[i] * (a[i].real() * a[i].real() + a[i].imag() * a[i].imag());
    }
    return acc;
}

void scale_real(Complex *a, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = {a[i].real() * s, a[i].imag() * s};
    }
}

void multiply_elementwise(Complex *a, const Complex *d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double dr = d[i].real(), di = d[i].imag();
        a[i] = {ar * dr - ai * di, ar * di + ai * dr};
    }
}

}  // namespace

const KernelTable kTable = {
    &inner_product, &norm_squared, &weighted_norm_squared, &scale_real, &multiply_elementwise,
};

}  // namespace fermicluster::kernels::scalar
