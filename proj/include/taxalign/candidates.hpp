#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "taxalign/taxonomy.hpp"

namespace taxalign {

/// One variable-label pair of the relaxation problem: a source synset and a
/// target synset sharing at least one word.
struct Connection {
    SynsetId source;
    SynsetId target;

    friend bool operator==(const Connection&, const Connection&) = default;
    friend auto operator<=>(const Connection&, const Connection&) = default;
};

struct CandidateStats {
    std::size_t totalVariables = 0;
    std::size_t covered = 0;     // >= 1 candidate
    std::size_t uncovered = 0;   // no candidate; excluded from relaxation
    std::size_t monosemous = 0;  // exactly 1 candidate
    std::size_t ambiguous = 0;   // > 1 candidates
    std::size_t connections = 0;
};

/// For every source synset, the target synsets sharing at least one word.
/// Lists are duplicate-free and sorted by target id (dense order equals
/// lexicographic id order).
class CandidateTable {
public:
    CandidateTable(const Taxonomy& src, const Taxonomy& tgt,
                   std::vector<std::vector<std::uint32_t>> byVariable);

    const Taxonomy& source() const { return *src_; }
    const Taxonomy& target() const { return *tgt_; }
    const CandidateStats& stats() const { return stats_; }

    std::span<const std::uint32_t> candidatesDense(std::uint32_t srcDense) const {
        return byVariable_[srcDense];
    }
    std::vector<SynsetId> candidatesOf(const SynsetId& source) const;

    bool isCovered(std::uint32_t srcDense) const { return !byVariable_[srcDense].empty(); }
    bool isAmbiguous(std::uint32_t srcDense) const { return byVariable_[srcDense].size() > 1; }

private:
    const Taxonomy* src_;
    const Taxonomy* tgt_;
    std::vector<std::vector<std::uint32_t>> byVariable_;  // source dense -> target dense, sorted
    CandidateStats stats_;
};

/// Candidate generation by word intersection. No structural pre-filtering:
/// every target sharing a word is a label.
CandidateTable generateCandidates(const Taxonomy& src, const Taxonomy& tgt);

}  // namespace taxalign
