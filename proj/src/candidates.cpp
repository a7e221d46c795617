#include "taxalign/candidates.hpp"

#include <algorithm>

namespace taxalign {

CandidateTable::CandidateTable(const Taxonomy& src, const Taxonomy& tgt,
                               std::vector<std::vector<std::uint32_t>> byVariable)
    : src_(&src), tgt_(&tgt), byVariable_(std::move(byVariable)) {
    stats_.totalVariables = byVariable_.size();
    for (const auto& labels : byVariable_) {
        if (labels.empty()) {
            ++stats_.uncovered;
        } else {
            ++stats_.covered;
            stats_.connections += labels.size();
            if (labels.size() == 1)
                ++stats_.monosemous;
            else
                ++stats_.ambiguous;
        }
    }
}

std::vector<SynsetId> CandidateTable::candidatesOf(const SynsetId& source) const {
    std::vector<SynsetId> out;
    for (std::uint32_t t : byVariable_[src_->require(source)]) out.push_back(tgt_->idOf(t));
    return out;
}

CandidateTable generateCandidates(const Taxonomy& src, const Taxonomy& tgt) {
    std::vector<std::vector<std::uint32_t>> byVariable(src.size());
    for (std::uint32_t s = 0; s < src.size(); ++s) {
        auto& labels = byVariable[s];
        for (const auto& lemma : src.wordsOf(s)) {
            auto matches = tgt.withLemma(lemma);
            labels.insert(labels.end(), matches.begin(), matches.end());
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    }
    return CandidateTable(src, tgt, std::move(byVariable));
}

}  // namespace taxalign
