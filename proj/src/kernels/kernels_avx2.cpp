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

// Built with -mavx2 -mfma; only reached after the dispatcher has checked the CPU.

#include <immintrin.h>

#include "fermicluster/kernels.hpp"

namespace fermicluster::kernels::avx2 {

namespace {

// One __m256d holds two complex numbers as [re0, im0, re1, im1].
inline __m256d load(const Complex *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store(Complex *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline double sum_even(__m256d v) {
    alignas(32) double t[4];
    _mm256_store_pd(t, v);
    return t[0] + t[2];
}

inline double sum_odd(__m256d v) {
    alignas(32) double t[4];
    _mm256_store_pd(t, v);
    return t[1] + t[3];
}

inline double sum_all(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Complex inner_product(const Complex *a, const Complex *b, std::size_t n) {
    __m256d prod = _mm256_setzero_pd();   // [ar*br, ai*bi, ...]
    __m256d cross = _mm256_setzero_pd();  // [ar*bi, ai*br, ...]
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        const __m256d vb = load(b + i);
        prod = _mm256_fmadd_pd(va, vb, prod);
        cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), cross);
    }
    double re = sum_even(prod) + sum_odd(prod);
    double im = sum_even(cross) - sum_odd(cross);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm_squared(const Complex *a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    double out = sum_all(acc);
    for (; i < n; ++i) {
        out += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return out;
}

double weighted_norm_squared(const Complex *a, const double *w, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        // [w0, w1] -> [w0, w0, w1, w1]
        const __m256d vw = _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(w + i)), 0x50);
        acc = _mm256_fmadd_pd(vw, _mm256_mul_pd(va, va), acc);
    }
    double out = sum_all(acc);
    for (; i < n; ++i) {
        out += w[i] * (a[i].real() * a[i].real() + a[i].imag() * a[i].imag());
    }
    return out;
}

void scale_real(Complex *a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store(a + i, _mm256_mul_pd(load(a + i), vs));
    }
    for (; i < n; ++i) {
        a[i] = {a[i].real() * s, a[i].imag() * s};
    }
}

void multiply_elementwise(Complex *a, const Complex *d, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load(a + i);
        const __m256d vd = load(d + i);
        const __m256d d_re = _mm256_movedup_pd(vd);          // [dr, dr, ...]
        const __m256d d_im = _mm256_permute_pd(vd, 0xF);     // [di, di, ...]
        const __m256d a_swap = _mm256_permute_pd(va, 0x5);   // [ai, ar, ...]
        store(a + i, _mm256_fmaddsub_pd(va, d_re, _mm256_mul_pd(a_swap, d_im)));
    }
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double dr = d[i].real(), di = d[i].imag();
        a[i] = {ar * dr - ai * di, ar * di + ai * dr};
    }
}

}  // namespace

const KernelTable kTable = {
    &inner_product, &norm_squared, &weighted_norm_squared, &scale_real, &multiply_elementwise,
};

}  // namespace fermicluster::kernels::avx2
