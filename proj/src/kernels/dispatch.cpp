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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fermicluster/kernels.hpp"

namespace fermicluster::kernels {

std::string_view to_string(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(FERMICLUSTER_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable &table(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("kernel ISA '" + std::string(to_string(isa)) + "' is not available");
    }
#if defined(FERMICLUSTER_HAVE_AVX2)
    if (isa == Isa::avx2) {
        return avx2::kTable;
    }
#endif
    return scalar::kTable;
}

namespace {

Isa select_isa() {
    if (const char *env = std::getenv("FERMICLUSTER_ISA"); env != nullptr && std::string(env) == "scalar") {
        return Isa::scalar;
    }
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = select_isa();
    return isa;
}

const KernelTable &active() {
    static const KernelTable &t = table(active_isa());
    return t;
}

}  // namespace fermicluster::kernels
