#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace taxalign::kernels {

// The arithmetic inner loops of the relaxation iteration, isolated so that
// SIMD builds can be swapped in at runtime. The scalar kernels are the
// reference semantics: strictly left-to-right accumulation, no FMA
// contraction. SIMD variants may reassociate reductions and are therefore
// equivalence-tested against the scalar kernels with an ulp-level tolerance
// rather than bitwise.
struct Kernels {
    const char* name;

    /// sum over i of w[idx[i]]
    double (*gatherSum)(const double* w, const std::uint32_t* idx, std::size_t n);

    /// sum over (i, j) of w[a[i]] * w[b[j]], i-major
    double (*gatherCrossSum)(const double* w, const std::uint32_t* a, std::size_t na,
                             const std::uint32_t* b, std::size_t nb);

    /// Multiplicative update of one variable's block:
    ///   out[i] = w[i] * (1 + s[i]) / sum_j w[j] * (1 + s[j])
    /// Returns max_i |out[i] - w[i]|. The caller guarantees the denominator
    /// is positive (weights are positive on at least one label and s >= 0).
    double (*normalizeBlock)(const double* w, const double* s, double* out, std::size_t n);
};

const Kernels& scalar();

/// AVX2 build, or nullptr when the binary or the CPU lacks it.
const Kernels* avx2();

/// Best kernel the current CPU supports.
const Kernels& best();

/// "scalar", "avx2" or "auto"; nullptr for an unknown name or an
/// unavailable variant.
const Kernels* byName(std::string_view name);

/// Names usable with byName on this machine, "auto" first.
std::vector<std::string> availableNames();

}  // namespace taxalign::kernels
