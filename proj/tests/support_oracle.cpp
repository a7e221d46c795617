#include "support_oracle.hpp"

#include <map>

namespace taxalign::test {

namespace {

using IdPair = std::pair<SynsetId, SynsetId>;

std::vector<SynsetId> scopeIds(const Taxonomy& t, const SynsetId& id, Scope scope, bool up) {
    if (scope == Scope::Immediate) return up ? t.immediateHypernyms(id) : t.immediateHyponyms(id);
    return up ? t.ancestors(id) : t.descendants(id);
}

double weightOf(const std::map<IdPair, double>& weights, const SynsetId& s, const SynsetId& t) {
    return weights.at({s, t});
}

}  // namespace

std::vector<double> naiveSupport(const Assignment& a, const CandidateTable& table,
                                 const ConstraintPack& pack) {
    const Taxonomy& src = table.source();
    const Taxonomy& tgt = table.target();

    // Rebuild the connection universe by scanning the table; connections in
    // (source asc, target asc) order to mirror the dense numbering.
    std::set<IdPair> candidateSet;
    std::map<IdPair, double> weights;
    std::vector<IdPair> order;
    for (std::uint32_t s = 0; s < src.size(); ++s) {
        for (std::uint32_t t : table.candidatesDense(s)) {
            IdPair pair{src.idOf(s), tgt.idOf(t)};
            candidateSet.insert(pair);
            weights[pair] = a.weightOf(pair.first, pair.second);
            order.push_back(pair);
        }
    }

    std::vector<double> out;
    out.reserve(order.size());
    for (const auto& [source, target] : order) {
        double support = 0.0;
        for (const auto& [code, strength] : pack.codes) {
            double part = 0.0;
            if (code.direction == Direction::Hypernym) {
                for (const auto& su : scopeIds(src, source, code.sourceScope, true))
                    for (const auto& tu : scopeIds(tgt, target, code.targetScope, true))
                        if (candidateSet.count({su, tu})) part += weightOf(weights, su, tu);
            } else if (code.direction == Direction::Hyponym) {
                for (const auto& sd : scopeIds(src, source, code.sourceScope, false))
                    for (const auto& td : scopeIds(tgt, target, code.targetScope, false))
                        if (candidateSet.count({sd, td})) part += weightOf(weights, sd, td);
            } else {
                for (const auto& su : scopeIds(src, source, code.sourceScope, true))
                    for (const auto& tu : scopeIds(tgt, target, code.targetScope, true)) {
                        if (!candidateSet.count({su, tu})) continue;
                        const double wu = weightOf(weights, su, tu);
                        for (const auto& sd : scopeIds(src, source, code.sourceScope, false))
                            for (const auto& td : scopeIds(tgt, target, code.targetScope, false))
                                if (candidateSet.count({sd, td}))
                                    part += wu * weightOf(weights, sd, td);
                    }
            }
            support += strength * part;
        }
        out.push_back(support);
    }
    return out;
}

}  // namespace taxalign::test
