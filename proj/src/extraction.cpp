#include "taxalign/extraction.hpp"

namespace taxalign {

std::size_t Mapping::proposingVariables() const {
    std::size_t n = 0;
    for (const auto& [src, ls] : links)
        if (!ls.empty()) ++n;
    return n;
}

std::size_t Mapping::totalLinks() const {
    std::size_t n = 0;
    for (const auto& [src, ls] : links) n += ls.size();
    return n;
}

const std::vector<Link>* Mapping::linksOf(const SynsetId& source) const {
    auto it = links.find(source);
    return it == links.end() ? nullptr : &it->second;
}

Mapping extractMapping(const Assignment& a, double delta) {
    if (!(delta > 0.0) || delta > 1.0) throw ConfigError("delta must be in (0, 1]");

    Mapping m;
    m.delta = delta;
    const CompiledProblem& p = *a.problem;
    for (std::uint32_t v = 0; v < p.numVariables(); ++v) {
        const SynsetId& source = p.src->idOf(p.varSource[v]);
        auto labels = p.labelsOf(v);
        auto weights = a.weightsOf(v);
        std::vector<Link>& out = m.links[source];
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (weights[i] >= delta) out.push_back({p.tgt->idOf(labels[i]), weights[i]});
    }
    return m;
}

namespace {

void accumulate(AmbiguityRow& row, std::size_t retained) {
    if (retained == 0) return;
    ++row.proposingVariables;
    row.retainedLinks += retained;
}

void finish(AmbiguityRow& row) {
    row.average = row.proposingVariables == 0
                      ? 0.0
                      : static_cast<double>(row.retainedLinks) /
                            static_cast<double>(row.proposingVariables);
}

}  // namespace

AmbiguityReport ambiguityStats(const Mapping& m, const CandidateTable& table) {
    AmbiguityReport report;
    const Taxonomy& src = table.source();
    for (const auto& [source, links] : m.links) {
        accumulate(report.overall, links.size());
        const std::uint32_t dense = src.denseOf(source);
        if (dense == kNoNode) continue;
        if (table.isAmbiguous(dense))
            accumulate(report.ambiguous, links.size());
        else
            accumulate(report.monosemous, links.size());
    }
    finish(report.overall);
    finish(report.monosemous);
    finish(report.ambiguous);
    return report;
}

AmbiguityRow ambiguityOverall(const Mapping& m) {
    AmbiguityRow row;
    for (const auto& [source, links] : m.links) accumulate(row, links.size());
    finish(row);
    return row;
}

}  // namespace taxalign
