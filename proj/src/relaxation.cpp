#include "taxalign/relaxation.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

namespace taxalign {

void RelaxationConfig::validate() const {
    if (maxIterations < 1) throw ConfigError("maxIterations must be >= 1");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    if (threads < 1) throw ConfigError("threads must be >= 1");
    if (pack.codes.empty()) throw ConfigError("empty constraint set");
}

double Assignment::weightOf(const SynsetId& source, const SynsetId& target) const {
    const std::uint32_t s = problem->src->denseOf(source);
    const std::uint32_t t = problem->tgt->denseOf(target);
    if (s == kNoNode || t == kNoNode) return 0.0;
    const std::uint32_t conn = problem->connectionOf(s, t);
    return conn == kNoConnection ? 0.0 : weights[conn];
}

Assignment initWeights(std::shared_ptr<const CompiledProblem> problem,
                       const RelaxationConfig& config) {
    Assignment a;
    a.weights.resize(problem->numConnections());

    SplitMix64 rng(config.init.seed);

    for (std::uint32_t v = 0; v < problem->numVariables(); ++v) {
        const std::uint64_t begin = problem->connOffsets[v];
        const std::uint64_t end = problem->connOffsets[v + 1];
        const std::size_t k = static_cast<std::size_t>(end - begin);
        if (k == 1) {
            a.weights[begin] = 1.0;
            continue;
        }
        if (config.init.kind == InitMode::Kind::Uniform) {
            const double w = 1.0 / static_cast<double>(k);
            for (std::uint64_t c = begin; c < end; ++c) a.weights[c] = w;
        } else {
            // Draws in [0.1, 1.1): positive by construction, so every label
            // keeps a nonzero share through the multiplicative updates.
            double sum = 0.0;
            for (std::uint64_t c = begin; c < end; ++c) {
                a.weights[c] = 0.1 + rng.unit();
                sum += a.weights[c];
            }
            for (std::uint64_t c = begin; c < end; ++c) a.weights[c] /= sum;
        }
    }
    a.problem = std::move(problem);
    return a;
}

void computeSupport(const Assignment& a, const EvidenceIndex& index, const kernels::Kernels& k,
                    int threads, std::vector<double>& out) {
    const std::size_t numConns = a.problem->numConnections();
    out.resize(numConns);
    const double* w = a.weights.data();

    parallelFor(numConns, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t conn = begin; conn < end; ++conn) {
            double s = 0.0;
            for (const CodeEvidence& ce : index.codes) {
                double part;
                if (ce.code.direction == Direction::Both) {
                    const std::uint64_t ho = ce.hyperOffsets[conn];
                    const std::uint64_t oo = ce.hypoOffsets[conn];
                    part = k.gatherCrossSum(
                        w, ce.hyperSide.data() + ho,
                        static_cast<std::size_t>(ce.hyperOffsets[conn + 1] - ho),
                        ce.hypoSide.data() + oo,
                        static_cast<std::size_t>(ce.hypoOffsets[conn + 1] - oo));
                } else {
                    const std::uint64_t o = ce.offsets[conn];
                    part = k.gatherSum(w, ce.supporters.data() + o,
                                       static_cast<std::size_t>(ce.offsets[conn + 1] - o));
                }
                s += ce.strength * part;
            }
            out[conn] = s;
        }
    });
}

std::vector<double> computeSupport(const Assignment& a, const CandidateTable& table,
                                   const ConstraintPack& pack) {
    EvidenceIndex index = buildEvidenceIndex(*a.problem, pack);
    std::vector<double> out;
    computeSupport(a, index, kernels::scalar(), 1, out);
    (void)table;
    return out;
}

namespace {

double updateInto(const Assignment& a, std::span<const double> support, const kernels::Kernels& k,
                  int threads, std::vector<double>& next) {
    const CompiledProblem& p = *a.problem;
    next.resize(a.weights.size());

    // Max is order-independent, so a CAS-max keeps the result deterministic
    // under any thread count.
    std::atomic<double> maxDelta{0.0};
    parallelFor(p.numVariables(), threads, [&](std::size_t begin, std::size_t end) {
        double localMax = 0.0;
        for (std::size_t v = begin; v < end; ++v) {
            const std::uint64_t o = p.connOffsets[v];
            const std::size_t len = static_cast<std::size_t>(p.connOffsets[v + 1] - o);
            const double d =
                k.normalizeBlock(a.weights.data() + o, support.data() + o, next.data() + o, len);
            if (d > localMax) localMax = d;
        }
        double seen = maxDelta.load(std::memory_order_relaxed);
        while (localMax > seen &&
               !maxDelta.compare_exchange_weak(seen, localMax, std::memory_order_relaxed)) {
        }
    });
    return maxDelta.load(std::memory_order_relaxed);
}

}  // namespace

std::pair<Assignment, double> updateWeights(const Assignment& a, std::span<const double> support,
                                            const kernels::Kernels& k, int threads) {
    assert(support.size() == a.weights.size());
    Assignment next;
    next.problem = a.problem;
    next.iterations = a.iterations + 1;
    const double maxDelta = updateInto(a, support, k, threads, next.weights);
    return {std::move(next), maxDelta};
}

RelaxationResult run(const CandidateTable& table, const RelaxationConfig& config,
                     const IterationObserver& observer) {
    config.validate();
    const kernels::Kernels& kernel = config.kernel ? *config.kernel : kernels::best();

    auto problem = compileProblem(table);
    EvidenceIndex index = buildEvidenceIndex(*problem, config.pack);

    RelaxationResult result;
    result.kernel = &kernel;
    Assignment current = initWeights(problem, config);

    std::vector<double> support;
    std::vector<double> nextWeights;
    for (int iter = 1; iter <= config.maxIterations; ++iter) {
        computeSupport(current, index, kernel, config.threads, support);
        const double maxDelta = updateInto(current, support, kernel, config.threads, nextWeights);
        current.weights.swap(nextWeights);
        current.iterations = iter;

        IterationStats stats;
        stats.iteration = iter;
        stats.maxDelta = maxDelta;
        // Sequential sum, independent of thread count.
        double total = 0.0;
        for (double s : support) total += s;
        stats.meanSupport = support.empty() ? 0.0 : total / static_cast<double>(support.size());
        result.trace.push_back(stats);

        if (observer) observer(stats, current);

        if (maxDelta < config.epsilon) {
            current.converged = true;
            break;
        }
    }

    result.assignment = std::move(current);
    return result;
}

}  // namespace taxalign
