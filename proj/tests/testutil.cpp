#include "testutil.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace taxalign::test {

std::shared_ptr<const Taxonomy> makeTaxonomy(TaxonomyRole role,
                                             const std::vector<SynsetRow>& rows) {
    TaxonomyBuilder builder(role);
    for (const auto& row : rows) builder.addSynset(row.id, row.words, row.hypernyms);
    return builder.build();
}

std::shared_ptr<const Taxonomy> randomTaxonomy(SplitMix64& rng, std::size_t maxNodes,
                                               std::size_t vocabSize, TaxonomyRole role) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(maxNodes > 2 ? maxNodes - 1 : 1));
    const char prefix = role == TaxonomyRole::Source ? 's' : 't';

    TaxonomyBuilder builder(role);
    for (std::size_t i = 0; i < n; ++i) {
        char id[16];
        std::snprintf(id, sizeof(id), "%c%03zu", prefix, i);

        std::vector<std::string> words;
        const std::size_t nWords = 1 + rng.below(2);
        for (std::size_t w = 0; w < nWords; ++w)
            words.push_back("w" + std::to_string(rng.below(vocabSize)));

        std::vector<SynsetId> hypers;
        if (i > 0) {
            char parent[16];
            std::snprintf(parent, sizeof(parent), "%c%03zu", prefix, rng.below(i));
            hypers.push_back(parent);
            if (i > 1 && rng.chance(0.25)) {
                char extra[16];
                std::snprintf(extra, sizeof(extra), "%c%03zu", prefix, rng.below(i));
                if (extra != std::string(parent)) hypers.push_back(extra);
            }
        }
        builder.addSynset(id, words, hypers);
    }
    return builder.build();
}

InstancePair randomInstance(std::uint64_t seed, std::size_t maxNodes) {
    SplitMix64 rng(seed);
    // A tight vocabulary makes word collisions (and thus candidates) common.
    const std::size_t vocab = 4 + rng.below(maxNodes);
    InstancePair pair;
    pair.src = randomTaxonomy(rng, maxNodes, vocab, TaxonomyRole::Source);
    pair.tgt = randomTaxonomy(rng, maxNodes, vocab, TaxonomyRole::Target);
    return pair;
}

NeighborScenario neighborSupportScenario() {
    NeighborScenario s;
    s.src = makeTaxonomy(TaxonomyRole::Source, {
                                                   {"p", {"pword"}, {}},
                                                   {"x", {"xword"}, {"p"}},
                                                   {"d1", {"d1word"}, {"x"}},
                                                   {"d2", {"d2word"}, {"x"}},
                                               });
    s.tgt = makeTaxonomy(TaxonomyRole::Target, {
                                                   {"tp", {"pword"}, {}},
                                                   {"tx", {"xword"}, {"tp"}},
                                                   {"td1", {"d1word"}, {"tx"}},
                                                   {"td2", {"d2word"}, {"tx"}},
                                                   {"ty", {"xword"}, {}},
                                                   {"tz", {"xword"}, {}},
                                               });
    s.supported = {"x", "tx"};
    s.competitors = {{"x", "ty"}, {"x", "tz"}};
    s.anchors = {{"p", "tp"}, {"d1", "td1"}, {"d2", "td2"}};
    return s;
}

TempDir::TempDir() {
    static std::atomic<unsigned> counter{0};
    const unsigned id = counter++;
    path_ = std::filesystem::temp_directory_path() /
            ("taxalign_test_" + std::to_string(::getpid()) + "_" + std::to_string(id));
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::string writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
    return path;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace taxalign::test
