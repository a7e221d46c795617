#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "taxalign/candidates.hpp"
#include "taxalign/taxonomy.hpp"

namespace taxalign::test {

struct SynsetRow {
    std::string id;
    std::vector<std::string> words;
    std::vector<std::string> hypernyms;
};

std::shared_ptr<const Taxonomy> makeTaxonomy(TaxonomyRole role, const std::vector<SynsetRow>& rows);

/// Random DAG over a shared small vocabulary; structure, word multiplicity
/// and extra parents all drawn from `rng`. Node ids are role-prefixed.
std::shared_ptr<const Taxonomy> randomTaxonomy(SplitMix64& rng, std::size_t maxNodes,
                                               std::size_t vocabSize, TaxonomyRole role);

struct InstancePair {
    std::shared_ptr<const Taxonomy> src;
    std::shared_ptr<const Taxonomy> tgt;
};

/// Independent random source/target pair sharing a vocabulary, so candidate
/// connections and structural evidence appear organically.
InstancePair randomInstance(std::uint64_t seed, std::size_t maxNodes);

/// The anchor scenario: an ambiguous variable whose structurally consistent
/// label is backed by three monosemous neighbor connections, while the two
/// competing labels sit on isolated target nodes and gather nothing.
struct NeighborScenario {
    std::shared_ptr<const Taxonomy> src;
    std::shared_ptr<const Taxonomy> tgt;
    Connection supported;                 // gains weight
    std::vector<Connection> competitors;  // lose weight
    std::vector<Connection> anchors;      // the monosemous neighbors
};

NeighborScenario neighborSupportScenario();

/// Unique temp directory, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

std::string writeFile(const std::string& path, const std::string& content);
std::string readFile(const std::string& path);

}  // namespace taxalign::test
