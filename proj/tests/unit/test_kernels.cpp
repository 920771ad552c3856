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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fermicluster/kernels.hpp"

using namespace fermicluster::kernels;

namespace {

std::vector<Complex> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> v(n);
    for (auto &x : v) {
        x = Complex(u(rng), u(rng));
    }
    return v;
}

void expect_close(Complex a, Complex b, std::size_t n) {
    EXPECT_LE(std::abs(a - b), 1e-13 * (1.0 + static_cast<double>(n))) << n;
}

}  // namespace

TEST(Kernels, ScalarReferenceValues) {
    const auto &t = table(Isa::scalar);
    const std::vector<Complex> a = {{1, 2}, {3, -1}};
    const std::vector<Complex> b = {{0, 1}, {2, 2}};
    // conj(1+2i) i + conj(3-i)(2+2i) = (2+i) + (4+8i)
    const Complex ip = t.inner_product(a.data(), b.data(), 2);
    EXPECT_EQ(ip, Complex(6, 9));
    EXPECT_EQ(t.norm_squared(a.data(), 2), 15.0);
    const std::vector<double> w = {0.0, 2.0};
    EXPECT_EQ(t.weighted_norm_squared(a.data(), w.data(), 2), 20.0);
}

TEST(Kernels, ScalarAlwaysAvailable) {
    EXPECT_TRUE(isa_available(Isa::scalar));
    EXPECT_EQ(to_string(Isa::scalar), "scalar");
    EXPECT_TRUE(isa_available(active_isa()));
}

TEST(Kernels, Avx2MatchesScalar) {
    if (!isa_available(Isa::avx2)) {
        GTEST_SKIP() << "AVX2 not available on this host";
    }
    const auto &s = table(Isa::scalar);
    const auto &v = table(Isa::avx2);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 64u, 1023u}) {
        const auto a = random_vector(n, n + 1);
        const auto b = random_vector(n, n + 100);
        std::vector<double> w(n);
        for (std::size_t k = 0; k < n; ++k) {
            w[k] = (k % 3 == 0) ? 1.0 : 0.25 * static_cast<double>(k % 5);
        }
        expect_close(s.inner_product(a.data(), b.data(), n), v.inner_product(a.data(), b.data(), n), n);
        expect_close(s.norm_squared(a.data(), n), v.norm_squared(a.data(), n), n);
        expect_close(s.weighted_norm_squared(a.data(), w.data(), n),
                     v.weighted_norm_squared(a.data(), w.data(), n), n);

        auto x1 = a;
        auto x2 = a;
        s.scale_real(x1.data(), -1.75, n);
        v.scale_real(x2.data(), -1.75, n);
        for (std::size_t k = 0; k < n; ++k) {
            expect_close(x1[k], x2[k], 1);
        }
        s.multiply_elementwise(x1.data(), b.data(), n);
        v.multiply_elementwise(x2.data(), b.data(), n);
        for (std::size_t k = 0; k < n; ++k) {
            expect_close(x1[k], x2[k], 1);
        }
    }
}
