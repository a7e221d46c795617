#include "taxalign/synth.hpp"

#include <algorithm>
#include <cstdio>

namespace taxalign {

void SynthParams::validate() const {
    if (nodes < 1) throw ConfigError("nodes must be >= 1");
    if (branching < 1) throw ConfigError("branching must be >= 1");
    if (clusterSize < 2) throw ConfigError("cluster size must be >= 2");
    if (injectionRate < 0.0 || injectionRate > 1.0)
        throw ConfigError("injection rate must be in [0, 1]");
    if (perturbationRate < 0.0 || perturbationRate > 1.0)
        throw ConfigError("perturbation rate must be in [0, 1]");
    if (dagRate < 0.0 || dagRate > 1.0) throw ConfigError("dag rate must be in [0, 1]");
}

namespace {

std::string nodeId(std::size_t i, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "n%0*zu", width, i);
    return buf;
}

}  // namespace

SynthResult synthesize(const SynthParams& params) {
    params.validate();
    SplitMix64 rng(params.seed);
    const std::size_t n = params.nodes;

    // Zero-padded ids keep lexicographic order equal to construction order.
    int width = 1;
    for (std::size_t v = n; v >= 10; v /= 10) ++width;

    // Random tree: each new node attaches to a uniformly chosen node that
    // still has a free child slot, then extra DAG edges to earlier nodes.
    std::vector<std::vector<std::size_t>> parents(n);
    std::vector<std::size_t> open{0};
    std::vector<std::size_t> childCount(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t slot = static_cast<std::size_t>(rng.below(open.size()));
        const std::size_t parent = open[slot];
        parents[i].push_back(parent);
        if (++childCount[parent] >= params.branching) {
            open[slot] = open.back();
            open.pop_back();
        }
        open.push_back(i);

        if (i >= 2 && rng.chance(params.dagRate)) {
            const std::size_t extra = static_cast<std::size_t>(rng.below(i));
            if (extra != parent) parents[i].push_back(extra);
        }
    }

    // Base word per node: its own id. Every node therefore shares a word
    // with exactly its copy in the target.
    std::vector<std::vector<std::string>> words(n);
    for (std::size_t i = 0; i < n; ++i) words[i].push_back(nodeId(i, width));

    // Ambiguity injection: sampled nodes are shuffled and grouped; each
    // group shares one extra word, which makes each member's candidate set
    // the whole group (in the copy).
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < n; ++i)
        if (rng.chance(params.injectionRate)) pool.push_back(i);
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[static_cast<std::size_t>(rng.below(i))]);
    std::size_t cluster = 0;
    for (std::size_t at = 0; at < pool.size(); at += params.clusterSize, ++cluster) {
        const std::size_t end = std::min(pool.size(), at + params.clusterSize);
        const std::string shared = "amb" + std::to_string(cluster);
        for (std::size_t j = at; j < end; ++j) words[pool[j]].push_back(shared);
    }

    // Target structure: a copy with some parents rewired to a random earlier
    // node (edges keep pointing to lower indices, so the copy stays acyclic).
    std::vector<std::vector<std::size_t>> targetParents = parents;
    for (std::size_t i = 1; i < n; ++i)
        if (rng.chance(params.perturbationRate))
            targetParents[i] = {static_cast<std::size_t>(rng.below(i))};

    SynthResult result;
    auto build = [&](const std::vector<std::vector<std::size_t>>& structure, TaxonomyRole role) {
        TaxonomyBuilder builder(role);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<SynsetId> hypers;
            for (std::size_t p : structure[i]) hypers.push_back(nodeId(p, width));
            builder.addSynset(nodeId(i, width), words[i], hypers);
        }
        return builder.build();
    };
    result.source = build(parents, TaxonomyRole::Source);
    result.target = build(targetParents, TaxonomyRole::Target);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string id = nodeId(i, width);
        result.gold.entries[id] = {id};
    }
    return result;
}

}  // namespace taxalign
