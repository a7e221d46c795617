#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "taxalign/evaluation.hpp"
#include "taxalign/taxonomy.hpp"

namespace taxalign {

/// Desk-scale experiment substrate: a random taxonomy, a copy of it (words
/// preserved, structure optionally perturbed) and the identity gold mapping.
struct SynthParams {
    std::size_t nodes = 100;
    /// Maximum children per node; shapes the random tree.
    std::size_t branching = 4;
    /// Fraction of nodes that additionally receive a word shared with
    /// clusterSize-1 random other nodes, making them ambiguous.
    double injectionRate = 0.0;
    std::size_t clusterSize = 4;
    /// Fraction of non-root target nodes whose parent is rewired to a random
    /// non-descendant, breaking the isomorphism.
    double perturbationRate = 0.0;
    /// Probability of an extra hypernym edge per node (multi-parent DAGs).
    double dagRate = 0.0;
    std::uint64_t seed = 1;

    void validate() const;
};

struct SynthResult {
    std::shared_ptr<const Taxonomy> source;
    std::shared_ptr<const Taxonomy> target;
    GoldSample gold;  // identity: every source node maps to its copy
};

/// Deterministic in `params` (including the seed). Every node's base word is
/// unique to it and its copy, so the identity link is always a candidate.
SynthResult synthesize(const SynthParams& params);

}  // namespace taxalign
