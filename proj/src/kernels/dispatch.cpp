// Copyright 2026 The tgbs Authors
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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tgbs/kernels.hpp"

namespace tgbs::kernels {
namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, &scalar::rank2_downdate, &scalar::combine2};
#if defined(TGBS_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{Isa::kAvx2, &avx2::rank2_downdate, &avx2::combine2};
#endif
#if defined(TGBS_HAVE_NEON_KERNELS)
constexpr KernelTable kNeonTable{Isa::kNeon, &neon::rank2_downdate, &neon::combine2};
#endif

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return true;
        case Isa::kAvx2:
#if defined(TGBS_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::kNeon:
#if defined(TGBS_HAVE_NEON_KERNELS)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable *initial_selection() {
    if (const char *env = std::getenv("TGBS_ISA"); env != nullptr && *env != '\0') {
        return &table(parse_isa(env));
    }
    auto isas = available_isas();
    return &table(isas.back());
}

std::atomic<const KernelTable *> &selection() {
    static std::atomic<const KernelTable *> current{initial_selection()};
    return current;
}

}  // namespace

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return "scalar";
        case Isa::kAvx2:
            return "avx2";
        case Isa::kNeon:
            return "neon";
    }
    return "unknown";
}

Isa parse_isa(std::string_view name) {
    if (name == "scalar") {
        return Isa::kScalar;
    }
    if (name == "avx2") {
        return Isa::kAvx2;
    }
    if (name == "neon") {
        return Isa::kNeon;
    }
    throw std::invalid_argument("unknown ISA '" + std::string(name) + "'");
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
        if (cpu_supports(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

bool isa_available(Isa isa) { return cpu_supports(isa); }

const KernelTable &table(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::invalid_argument("ISA '" + std::string(to_string(isa)) + "' not available on this build/CPU");
    }
    switch (isa) {
#if defined(TGBS_HAVE_AVX2_KERNELS)
        case Isa::kAvx2:
            return kAvx2Table;
#endif
#if defined(TGBS_HAVE_NEON_KERNELS)
        case Isa::kNeon:
            return kNeonTable;
#endif
        default:
            return kScalarTable;
    }
}

const KernelTable &active() { return *selection().load(std::memory_order_acquire); }

void set_active(Isa isa) { selection().store(&table(isa), std::memory_order_release); }

}  // namespace tgbs::kernels
