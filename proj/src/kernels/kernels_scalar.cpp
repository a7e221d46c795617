#include "taxalign/kernels.hpp"

#include <cmath>

// Reference kernels. Accumulation order is part of the contract: plain
// left-to-right loops, single accumulator. Everything else in the project
// (oracle tests, the evidence index, the SIMD variants) is measured against
// these.

namespace taxalign::kernels {
namespace {

double gatherSumScalar(const double* w, const std::uint32_t* idx, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[idx[i]];
    return acc;
}

double gatherCrossSumScalar(const double* w, const std::uint32_t* a, std::size_t na,
                            const std::uint32_t* b, std::size_t nb) {
    double acc = 0.0;
    for (std::size_t i = 0; i < na; ++i) {
        const double wa = w[a[i]];
        for (std::size_t j = 0; j < nb; ++j) acc += wa * w[b[j]];
    }
    return acc;
}

double normalizeBlockScalar(const double* w, const double* s, double* out, std::size_t n) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = w[i] * (1.0 + s[i]);
        norm += out[i];
    }
    double maxDelta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] /= norm;
        const double d = std::fabs(out[i] - w[i]);
        if (d > maxDelta) maxDelta = d;
    }
    return maxDelta;
}

constexpr Kernels kScalar{"scalar", &gatherSumScalar, &gatherCrossSumScalar, &normalizeBlockScalar};

}  // namespace

const Kernels& scalar() { return kScalar; }

}  // namespace taxalign::kernels
