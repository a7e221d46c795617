#include "taxalign/evidence.hpp"

#include <algorithm>

namespace taxalign {

std::uint32_t CompiledProblem::connectionOf(std::uint32_t srcDense, std::uint32_t tgtDense) const {
    if (srcDense >= varOfSource.size()) return kNoConnection;
    const std::uint32_t var = varOfSource[srcDense];
    if (var == kNoNode) return kNoConnection;
    auto labels = labelsOf(var);
    auto it = std::lower_bound(labels.begin(), labels.end(), tgtDense);
    if (it == labels.end() || *it != tgtDense) return kNoConnection;
    return static_cast<std::uint32_t>(connOffsets[var] + (it - labels.begin()));
}

std::shared_ptr<const CompiledProblem> compileProblem(const CandidateTable& table) {
    auto problem = std::make_shared<CompiledProblem>();
    CompiledProblem& p = *problem;
    p.src = &table.source();
    p.tgt = &table.target();

    const std::size_t n = table.source().size();
    p.varOfSource.assign(n, kNoNode);
    p.connOffsets.push_back(0);
    for (std::uint32_t s = 0; s < n; ++s) {
        auto labels = table.candidatesDense(s);
        if (labels.empty()) continue;
        p.varOfSource[s] = static_cast<std::uint32_t>(p.varSource.size());
        p.varSource.push_back(s);
        p.connTarget.insert(p.connTarget.end(), labels.begin(), labels.end());
        p.connOffsets.push_back(p.connTarget.size());
    }
    p.connVar.resize(p.connTarget.size());
    for (std::uint32_t v = 0; v < p.varSource.size(); ++v)
        for (std::uint64_t c = p.connOffsets[v]; c < p.connOffsets[v + 1]; ++c)
            p.connVar[c] = v;
    return problem;
}

namespace {

std::span<const std::uint32_t> scopeSet(const Taxonomy& t, std::uint32_t node, Scope scope,
                                        bool up) {
    if (scope == Scope::Immediate) return up ? t.parentsOf(node) : t.childrenOf(node);
    return up ? t.ancestorsOf(node) : t.descendantsOf(node);
}

/// Appends the connection ids of all candidate pairs (s', t'),
/// s' in srcSide, t' in tgtSide, in canonical (s' asc, t' asc) order.
void appendConnectedPairs(const CompiledProblem& p, std::span<const std::uint32_t> srcSide,
                          std::span<const std::uint32_t> tgtSide,
                          std::vector<std::uint32_t>& out) {
    for (std::uint32_t s : srcSide) {
        if (p.varOfSource[s] == kNoNode) continue;
        for (std::uint32_t t : tgtSide) {
            const std::uint32_t conn = p.connectionOf(s, t);
            if (conn != kNoConnection) out.push_back(conn);
        }
    }
}

}  // namespace

EvidenceIndex buildEvidenceIndex(const CompiledProblem& p, const ConstraintPack& pack) {
    EvidenceIndex index;
    index.pack = pack;
    const std::size_t numConns = p.numConnections();
    const Taxonomy& src = *p.src;
    const Taxonomy& tgt = *p.tgt;

    for (const auto& [code, strength] : pack.codes) {
        CodeEvidence ce;
        ce.code = code;
        ce.strength = strength;

        const bool both = code.direction == Direction::Both;
        if (both) {
            ce.hyperOffsets.reserve(numConns + 1);
            ce.hypoOffsets.reserve(numConns + 1);
            ce.hyperOffsets.push_back(0);
            ce.hypoOffsets.push_back(0);
        } else {
            ce.offsets.reserve(numConns + 1);
            ce.offsets.push_back(0);
        }

        for (std::uint32_t conn = 0; conn < numConns; ++conn) {
            const std::uint32_t s = p.varSource[p.connVar[conn]];
            const std::uint32_t t = p.connTarget[conn];
            if (code.direction == Direction::Hypernym || both) {
                auto& out = both ? ce.hyperSide : ce.supporters;
                appendConnectedPairs(p, scopeSet(src, s, code.sourceScope, true),
                                     scopeSet(tgt, t, code.targetScope, true), out);
                (both ? ce.hyperOffsets : ce.offsets).push_back(out.size());
            }
            if (code.direction == Direction::Hyponym || both) {
                auto& out = both ? ce.hypoSide : ce.supporters;
                appendConnectedPairs(p, scopeSet(src, s, code.sourceScope, false),
                                     scopeSet(tgt, t, code.targetScope, false), out);
                (both ? ce.hypoOffsets : ce.offsets).push_back(out.size());
            }
            index.totalInstances += ce.instanceCountOf(conn);
        }
        index.codes.push_back(std::move(ce));
    }
    return index;
}

}  // namespace taxalign
