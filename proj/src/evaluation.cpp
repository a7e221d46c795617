#include "taxalign/evaluation.hpp"

#include <algorithm>

namespace taxalign {

CoverageResult coverage(const Mapping& m, const CandidateTable& table) {
    CoverageResult r;
    const Taxonomy& src = table.source();
    std::size_t disambiguatedOverall = 0;
    std::size_t disambiguatedAmbiguous = 0;

    for (std::uint32_t s = 0; s < src.size(); ++s) {
        const std::size_t candidates = table.candidatesDense(s).size();
        if (candidates == 0) continue;  // uncovered: outside every denominator
        ++r.coveredVariables;
        const bool ambiguous = candidates > 1;
        if (ambiguous) ++r.ambiguousVariables;

        const std::vector<Link>* links = m.linksOf(src.idOf(s));
        const std::size_t retained = links ? links->size() : 0;
        if (retained == 0) continue;
        // A monosemous variable proposing its sole candidate has nothing to
        // discard; only ambiguous variables must drop at least one.
        const bool disambiguates = !ambiguous || retained < candidates;
        if (disambiguates) {
            ++disambiguatedOverall;
            if (ambiguous) ++disambiguatedAmbiguous;
        }
    }
    r.overall = r.coveredVariables == 0
                    ? 0.0
                    : static_cast<double>(disambiguatedOverall) /
                          static_cast<double>(r.coveredVariables);
    r.ambiguousOnly = r.ambiguousVariables == 0
                          ? 0.0
                          : static_cast<double>(disambiguatedAmbiguous) /
                                static_cast<double>(r.ambiguousVariables);
    return r;
}

namespace {

PrecisionRecallResult precisionRecallOver(const Mapping& m, const GoldSample& gold,
                                          const std::set<SynsetId>& variableSpace,
                                          const std::set<SynsetId>* restrictTo) {
    PrecisionRecallResult r;
    std::size_t proposingVariables = 0;
    std::size_t variablesWithCorrect = 0;

    for (const auto& [source, validTargets] : gold.entries) {
        if (!variableSpace.count(source)) {
            ++r.skippedGoldEntries;
            continue;
        }
        if (restrictTo && !restrictTo->count(source)) continue;
        ++r.goldVariables;

        const std::vector<Link>* links = m.linksOf(source);
        if (!links || links->empty()) continue;
        ++proposingVariables;

        std::size_t correct = 0;
        for (const Link& link : *links)
            if (validTargets.count(link.target)) ++correct;
        r.proposedLinks += links->size();
        r.correctLinks += correct;
        if (correct > 0) ++variablesWithCorrect;
    }

    r.precisionPerLink = r.proposedLinks == 0 ? 0.0
                                              : static_cast<double>(r.correctLinks) /
                                                    static_cast<double>(r.proposedLinks);
    r.precisionPerVariable = proposingVariables == 0
                                 ? 0.0
                                 : static_cast<double>(variablesWithCorrect) /
                                       static_cast<double>(proposingVariables);
    r.recall = r.goldVariables == 0 ? 0.0
                                    : static_cast<double>(variablesWithCorrect) /
                                          static_cast<double>(r.goldVariables);
    return r;
}

}  // namespace

PrecisionRecallReport precisionRecall(const Mapping& m, const GoldSample& gold,
                                      const std::set<SynsetId>& variableSpace,
                                      const std::set<SynsetId>* ambiguousVariables) {
    PrecisionRecallReport report;
    report.overall = precisionRecallOver(m, gold, variableSpace, nullptr);
    if (ambiguousVariables)
        report.ambiguousOnly = precisionRecallOver(m, gold, variableSpace, ambiguousVariables);
    return report;
}

namespace {

struct AgreementAccumulator {
    std::size_t variables = 0;
    std::size_t sharing = 0;
    double hardSum = 0.0;  // sum over variables of shared/left ratio
    std::size_t leftLinks = 0;
    std::size_t sharedLinks = 0;

    void add(std::size_t left, std::size_t shared) {
        ++variables;
        if (shared > 0) ++sharing;
        hardSum += static_cast<double>(shared) / static_cast<double>(left);
        leftLinks += left;
        sharedLinks += shared;
    }

    AgreementRow row(std::string name) const {
        AgreementRow r;
        r.group = std::move(name);
        r.size = variables;
        if (variables > 0) {
            r.hard = hardSum / static_cast<double>(variables);
            r.soft = static_cast<double>(sharing) / static_cast<double>(variables);
        }
        if (leftLinks > 0)
            r.hardPerLink = static_cast<double>(sharedLinks) / static_cast<double>(leftLinks);
        return r;
    }
};

constexpr const char* kUngrouped = "(ungrouped)";
constexpr const char* kMonosemous = "monosemous";

std::vector<std::string> orderedGroupNames(const std::map<std::string, AgreementAccumulator>& acc) {
    std::vector<std::string> names;
    for (const auto& [name, a] : acc)
        if (name != kMonosemous) names.push_back(name);
    std::sort(names.begin(), names.end());
    if (acc.count(kMonosemous)) names.insert(names.begin(), kMonosemous);
    return names;
}

}  // namespace

AgreementReport agreement(const Mapping& left, const Mapping& right,
                          const std::map<SynsetId, std::string>* groups) {
    AgreementAccumulator total;
    AgreementAccumulator subtotal;
    std::map<std::string, AgreementAccumulator> perGroup;
    bool sawMonosemous = false;

    for (const auto& [source, leftLinks] : left.links) {
        if (leftLinks.empty()) continue;
        std::size_t shared = 0;
        if (const std::vector<Link>* rightLinks = right.linksOf(source)) {
            for (const Link& l : leftLinks)
                for (const Link& r : *rightLinks)
                    if (l.target == r.target) {
                        ++shared;
                        break;
                    }
        }
        total.add(leftLinks.size(), shared);
        if (groups) {
            auto it = groups->find(source);
            const std::string& name = it == groups->end() ? kUngrouped : it->second;
            perGroup[name].add(leftLinks.size(), shared);
            if (name == kMonosemous)
                sawMonosemous = true;
            else
                subtotal.add(leftLinks.size(), shared);
        }
    }

    AgreementReport report;
    report.total = total.row("total");
    if (groups) {
        for (const auto& name : orderedGroupNames(perGroup))
            report.groups.push_back(perGroup.at(name).row(name));
        if (sawMonosemous && perGroup.size() > 1)
            report.subtotal = subtotal.row("subtotal");
    }
    return report;
}

GroupedAmbiguityReport groupedAmbiguity(const Mapping& m,
                                        const std::map<SynsetId, std::string>* groups) {
    struct Acc {
        std::size_t variables = 0;
        std::size_t links = 0;
        AmbiguityGroupRow row(std::string name) const {
            AmbiguityGroupRow r;
            r.group = std::move(name);
            r.size = variables;
            r.average = variables == 0 ? 0.0
                                       : static_cast<double>(links) / static_cast<double>(variables);
            return r;
        }
    };

    Acc total;
    Acc subtotal;
    std::map<std::string, Acc> perGroup;
    bool sawMonosemous = false;

    for (const auto& [source, links] : m.links) {
        if (links.empty()) continue;
        ++total.variables;
        total.links += links.size();
        if (groups) {
            auto it = groups->find(source);
            const std::string& name = it == groups->end() ? kUngrouped : it->second;
            auto& acc = perGroup[name];
            ++acc.variables;
            acc.links += links.size();
            if (name == kMonosemous) {
                sawMonosemous = true;
            } else {
                ++subtotal.variables;
                subtotal.links += links.size();
            }
        }
    }

    GroupedAmbiguityReport report;
    report.total = total.row("total");
    if (groups) {
        std::vector<std::string> names;
        for (const auto& [name, acc] : perGroup)
            if (name != kMonosemous) names.push_back(name);
        std::sort(names.begin(), names.end());
        if (perGroup.count(kMonosemous)) names.insert(names.begin(), kMonosemous);
        for (const auto& name : names) report.groups.push_back(perGroup.at(name).row(name));
        if (sawMonosemous && perGroup.size() > 1) report.subtotal = subtotal.row("subtotal");
    }
    return report;
}

ConversionResult senseToSynsetConvert(const SenseMapping& senseMap, const VariantIndex& srcIndex,
                                      const VariantIndex& tgtIndex) {
    ConversionResult result;
    std::map<SynsetId, std::set<SynsetId>> collected;
    for (const auto& [srcVariant, tgtVariant] : senseMap.pairs) {
        auto s = srcIndex.synsetOf.find(srcVariant);
        auto t = tgtIndex.synsetOf.find(tgtVariant);
        if (s == srcIndex.synsetOf.end() || t == tgtIndex.synsetOf.end()) {
            ++result.unresolvedPairs;
            continue;
        }
        collected[s->second].insert(t->second);
    }
    for (const auto& [source, targets] : collected) {
        auto& links = result.mapping.links[source];
        for (const auto& target : targets) links.push_back({target, 1.0});
    }
    result.mapping.delta = 0.0;
    result.mapping.provenance = "sense-to-synset conversion";
    return result;
}

}  // namespace taxalign
