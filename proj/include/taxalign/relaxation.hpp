#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taxalign/evidence.hpp"
#include "taxalign/kernels.hpp"

namespace taxalign {

struct InitMode {
    enum class Kind { Uniform, SeededRandom };
    Kind kind = Kind::Uniform;
    std::uint64_t seed = 0;

    static InitMode uniform() { return {Kind::Uniform, 0}; }
    static InitMode seededRandom(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
};

struct RelaxationConfig {
    ConstraintPack pack;
    int maxIterations = 100;
    double epsilon = 1e-4;
    InitMode init = InitMode::uniform();
    /// nullptr picks the best kernel for this CPU.
    const kernels::Kernels* kernel = nullptr;
    int threads = 1;

    void validate() const;
};

/// Per-variable weight distributions over candidate labels, stored per
/// connection in problem order. Weights of one variable always sum to one.
struct Assignment {
    std::shared_ptr<const CompiledProblem> problem;
    std::vector<double> weights;  // per connection
    int iterations = 0;
    bool converged = false;

    std::span<const double> weightsOf(std::uint32_t var) const {
        return {weights.data() + problem->connOffsets[var],
                static_cast<std::size_t>(problem->connOffsets[var + 1] -
                                         problem->connOffsets[var])};
    }

    /// Weight of (source id, target id); 0 for a non-candidate pair.
    double weightOf(const SynsetId& source, const SynsetId& target) const;
};

struct IterationStats {
    int iteration = 0;
    double maxDelta = 0.0;
    double meanSupport = 0.0;
};

using IterationObserver =
    std::function<void(const IterationStats&, const Assignment&)>;

/// Uniform: each of k labels gets 1/k. SeededRandom: positive values
/// normalized per variable, reproducible. Monosemous variables get 1.
Assignment initWeights(std::shared_ptr<const CompiledProblem> problem,
                       const RelaxationConfig& config);

/// Support for every connection from the current weights (Jacobi semantics:
/// reads only `a`, writes only `out`):
///   S(c) = sum over codes of strength * sum over instances of supporter
///   weight (E/O) or the product of the two supporters' weights (B).
void computeSupport(const Assignment& a, const EvidenceIndex& index, const kernels::Kernels& k,
                    int threads, std::vector<double>& out);

/// Convenience form building the index on the fly.
std::vector<double> computeSupport(const Assignment& a, const CandidateTable& table,
                                   const ConstraintPack& pack);

/// One multiplicative update step; returns the new assignment and the max
/// per-label weight change.
std::pair<Assignment, double> updateWeights(const Assignment& a, std::span<const double> support,
                                            const kernels::Kernels& k = kernels::scalar(),
                                            int threads = 1);

struct RelaxationResult {
    Assignment assignment;
    std::vector<IterationStats> trace;
    const kernels::Kernels* kernel = nullptr;
};

/// The full iteration: init, then support/update rounds until the max weight
/// change drops below epsilon or maxIterations is reached. Non-convergence is
/// reported through Assignment::converged, not an error.
RelaxationResult run(const CandidateTable& table, const RelaxationConfig& config,
                     const IterationObserver& observer = {});

}  // namespace taxalign
