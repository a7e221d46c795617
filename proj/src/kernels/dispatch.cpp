#include "taxalign/kernels.hpp"

namespace taxalign::kernels {

#if TAXALIGN_AVX2_ENABLED
const Kernels* avx2Build();  // kernels_avx2.cpp
#endif

const Kernels* avx2() {
#if TAXALIGN_AVX2_ENABLED
    if (__builtin_cpu_supports("avx2")) return avx2Build();
#endif
    return nullptr;
}

const Kernels& best() {
    if (const Kernels* k = avx2()) return *k;
    return scalar();
}

const Kernels* byName(std::string_view name) {
    if (name == "auto") return &best();
    if (name == "scalar") return &scalar();
    if (name == "avx2") return avx2();
    return nullptr;
}

std::vector<std::string> availableNames() {
    std::vector<std::string> names{"auto", "scalar"};
    if (avx2() != nullptr) names.emplace_back("avx2");
    return names;
}

}  // namespace taxalign::kernels
