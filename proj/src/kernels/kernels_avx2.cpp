// AVX2 variants of the relaxation inner loops. Compiled with -mavx2 only;
// dispatch.cpp checks for CPU support before handing these out.
//
// Reductions keep four lane accumulators and fold at the end, so results can
// differ from the scalar kernels in the last ulps. No FMA: products and sums
// stay separate operations, matching the scalar expression shape.

#include "taxalign/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace taxalign::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double gatherSumAvx2(const double* w, const std::uint32_t* idx, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i vidx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
        __m256d vals = _mm256_i32gather_pd(w, vidx, 8);
        acc = _mm256_add_pd(acc, vals);
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += w[idx[i]];
    return hsum(acc) + tail;
}

double gatherCrossSumAvx2(const double* w, const std::uint32_t* a, std::size_t na,
                          const std::uint32_t* b, std::size_t nb) {
    double total = 0.0;
    for (std::size_t i = 0; i < na; ++i) {
        const double wa = w[a[i]];
        __m256d va = _mm256_set1_pd(wa);
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 4 <= nb; j += 4) {
            __m128i vidx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + j));
            __m256d vals = _mm256_i32gather_pd(w, vidx, 8);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vals));
        }
        double tail = 0.0;
        for (; j < nb; ++j) tail += wa * w[b[j]];
        total += hsum(acc) + tail;
    }
    return total;
}

double normalizeBlockAvx2(const double* w, const double* s, double* out, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d accNorm = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vw = _mm256_loadu_pd(w + i);
        __m256d vs = _mm256_loadu_pd(s + i);
        __m256d t = _mm256_mul_pd(vw, _mm256_add_pd(one, vs));
        _mm256_storeu_pd(out + i, t);
        accNorm = _mm256_add_pd(accNorm, t);
    }
    double norm = hsum(accNorm);
    for (; i < n; ++i) {
        out[i] = w[i] * (1.0 + s[i]);
        norm += out[i];
    }

    const __m256d vnorm = _mm256_set1_pd(norm);
    __m256d accDelta = _mm256_setzero_pd();
    const __m256d absMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));
    i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_div_pd(_mm256_loadu_pd(out + i), vnorm);
        _mm256_storeu_pd(out + i, t);
        __m256d d = _mm256_and_pd(_mm256_sub_pd(t, _mm256_loadu_pd(w + i)), absMask);
        accDelta = _mm256_max_pd(accDelta, d);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, accDelta);
    double maxDelta = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
    for (; i < n; ++i) {
        out[i] /= norm;
        const double d = std::fabs(out[i] - w[i]);
        if (d > maxDelta) maxDelta = d;
    }
    return maxDelta;
}

constexpr Kernels kAvx2{"avx2", &gatherSumAvx2, &gatherCrossSumAvx2, &normalizeBlockAvx2};

}  // namespace

const Kernels* avx2Build() { return &kAvx2; }

}  // namespace taxalign::kernels
