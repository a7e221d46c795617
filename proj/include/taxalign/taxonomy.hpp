#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "taxalign/common.hpp"

namespace taxalign {

using SynsetId = std::string;

enum class TaxonomyRole { Source, Target };

constexpr std::uint32_t kNoNode = std::numeric_limits<std::uint32_t>::max();

struct LoadOptions {
    /// Ancestor/descendant closures are precomputed at load when the node
    /// count is below this bound; above it they are filled lazily per query.
    std::size_t closurePrecomputeBound = 100000;
};

/// An immutable hypernym DAG of synsets. Nodes carry dense indices assigned
/// in lexicographic id order, so every dense-ordered traversal is also
/// id-ordered and deterministic. All adjacency and closure vectors are sorted
/// by dense index.
///
/// Safe for concurrent reads; the lazily memoized closures fill idempotently
/// behind a mutex.
class Taxonomy {
public:
    TaxonomyRole role() const { return role_; }
    std::size_t size() const { return ids_.size(); }

    bool contains(const SynsetId& id) const { return index_.count(id) != 0; }

    /// Dense index of `id`, or kNoNode.
    std::uint32_t denseOf(const SynsetId& id) const;

    /// Dense index of `id`; throws ValidationError when absent.
    std::uint32_t require(const SynsetId& id) const;

    const SynsetId& idOf(std::uint32_t dense) const { return ids_[dense]; }

    /// Normalized lemmas, sorted.
    std::span<const std::string> wordsOf(std::uint32_t dense) const { return words_[dense]; }

    std::span<const std::uint32_t> parentsOf(std::uint32_t dense) const { return parents_[dense]; }
    std::span<const std::uint32_t> childrenOf(std::uint32_t dense) const { return children_[dense]; }

    /// Proper ancestors (transitive hypernyms), sorted, memoized.
    const std::vector<std::uint32_t>& ancestorsOf(std::uint32_t dense) const;
    /// Proper descendants (transitive hyponyms), sorted, memoized.
    const std::vector<std::uint32_t>& descendantsOf(std::uint32_t dense) const;

    /// Synsets whose word set contains `lemma` (already normalized), sorted.
    std::span<const std::uint32_t> withLemma(const std::string& lemma) const;

    // Id-based views of the same queries.
    std::vector<SynsetId> immediateHypernyms(const SynsetId& id) const;
    std::vector<SynsetId> immediateHyponyms(const SynsetId& id) const;
    std::vector<SynsetId> ancestors(const SynsetId& id) const;
    std::vector<SynsetId> descendants(const SynsetId& id) const;
    std::vector<std::string> words(const SynsetId& id) const;

    std::vector<SynsetId> allIds() const { return ids_; }

    /// Content fingerprint (ids, words, edges); stable across loads of
    /// equivalent files.
    std::uint64_t fingerprint() const;

private:
    friend class TaxonomyBuilder;

    TaxonomyRole role_ = TaxonomyRole::Source;
    std::vector<SynsetId> ids_;                               // dense -> id, lexicographic
    std::unordered_map<SynsetId, std::uint32_t> index_;       // id -> dense
    std::vector<std::vector<std::string>> words_;             // dense -> sorted lemmas
    std::vector<std::vector<std::uint32_t>> parents_;         // dense -> sorted dense
    std::vector<std::vector<std::uint32_t>> children_;        // dense -> sorted dense
    std::unordered_map<std::string, std::vector<std::uint32_t>> lemmaIndex_;

    struct ClosureCache {
        std::vector<std::vector<std::uint32_t>> sets;
        std::vector<char> ready;
        mutable std::mutex fill;
    };
    mutable ClosureCache up_, down_;

    const std::vector<std::uint32_t>& closure(std::uint32_t dense,
                                              const std::vector<std::vector<std::uint32_t>>& adj,
                                              ClosureCache& cache) const;
    void precomputeClosures() const;
};

/// Accumulates synsets, then validates and freezes them into a Taxonomy.
class TaxonomyBuilder {
public:
    explicit TaxonomyBuilder(TaxonomyRole role) : role_(role) {}

    /// Lemmas are normalized here; duplicates within one synset collapse.
    /// Throws ValidationError on duplicate id or empty lemma set.
    void addSynset(const SynsetId& id, const std::vector<std::string>& lemmas,
                   const std::vector<SynsetId>& hypernyms);

    /// Validates dangling references and acyclicity, then builds the dense
    /// representation. The builder is left empty.
    std::shared_ptr<const Taxonomy> build(const LoadOptions& opts = {});

private:
    struct Raw {
        std::vector<std::string> lemmas;
        std::vector<SynsetId> hypernyms;
    };
    TaxonomyRole role_;
    std::vector<std::pair<SynsetId, Raw>> synsets_;
    std::unordered_map<SynsetId, std::size_t> seen_;
};

/// Reads the taxonomy TSV format:
///   <synset_id> TAB <comma-separated lemmas> TAB <comma-separated hypernym ids>
/// Lines starting with '#' are comments. Throws ParseError / ValidationError /
/// IoError.
std::shared_ptr<const Taxonomy> loadTaxonomy(const std::string& path, TaxonomyRole role,
                                             const LoadOptions& opts = {});

/// Writes the same format, sorted by id; loadTaxonomy(saveTaxonomy(t)) is
/// equivalent to t.
void saveTaxonomy(const Taxonomy& t, const std::string& path);

}  // namespace taxalign
