#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "taxalign/candidates.hpp"
#include "taxalign/constraints.hpp"

namespace taxalign {

constexpr std::uint32_t kNoConnection = std::numeric_limits<std::uint32_t>::max();

/// Dense form of the relaxation problem: covered variables in ascending
/// source order, their connections laid out contiguously (variable-major,
/// labels in ascending target order). Connection ids index the weight and
/// support arrays.
struct CompiledProblem {
    const Taxonomy* src = nullptr;
    const Taxonomy* tgt = nullptr;

    std::vector<std::uint32_t> varSource;    // variable -> source dense id
    std::vector<std::uint32_t> varOfSource;  // source dense id -> variable or kNoNode
    std::vector<std::uint64_t> connOffsets;  // variable -> first connection id
    std::vector<std::uint32_t> connTarget;   // connection -> target dense id
    std::vector<std::uint32_t> connVar;      // connection -> variable

    std::size_t numVariables() const { return varSource.size(); }
    std::size_t numConnections() const { return connTarget.size(); }

    std::span<const std::uint32_t> labelsOf(std::uint32_t var) const {
        return {connTarget.data() + connOffsets[var],
                static_cast<std::size_t>(connOffsets[var + 1] - connOffsets[var])};
    }

    /// Connection id of (source dense, target dense), or kNoConnection.
    std::uint32_t connectionOf(std::uint32_t srcDense, std::uint32_t tgtDense) const;

    Connection idPair(std::uint32_t conn) const {
        return {src->idOf(varSource[connVar[conn]]), tgt->idOf(connTarget[conn])};
    }
};

std::shared_ptr<const CompiledProblem> compileProblem(const CandidateTable& table);

/// Flattened evidence lists for one constraint code over every connection.
///
/// Canonical instance order, shared with enumerateSupport and the naive
/// reference: supporting source node ascending, then supporting target node
/// ascending; for the B direction, hypernym-side instance major, hyponym-side
/// minor. Accumulating a connection's list front to back therefore reproduces
/// the reference summation order bit for bit.
struct CodeEvidence {
    ConstraintCode code;
    double strength = 1.0;

    // Hypernym/Hyponym direction: supporters CSR.
    std::vector<std::uint64_t> offsets;
    std::vector<std::uint32_t> supporters;

    // Both direction: the two sides as separate CSRs; the instances are the
    // cross product, never materialized.
    std::vector<std::uint64_t> hyperOffsets;
    std::vector<std::uint32_t> hyperSide;
    std::vector<std::uint64_t> hypoOffsets;
    std::vector<std::uint32_t> hypoSide;

    std::size_t instanceCountOf(std::uint32_t conn) const {
        if (code.direction == Direction::Both)
            return static_cast<std::size_t>(hyperOffsets[conn + 1] - hyperOffsets[conn]) *
                   static_cast<std::size_t>(hypoOffsets[conn + 1] - hypoOffsets[conn]);
        return static_cast<std::size_t>(offsets[conn + 1] - offsets[conn]);
    }
};

struct EvidenceIndex {
    ConstraintPack pack;
    std::vector<CodeEvidence> codes;  // pack order
    std::size_t totalInstances = 0;

    std::size_t instanceCountOf(std::uint32_t conn) const {
        std::size_t n = 0;
        for (const auto& ce : codes) n += ce.instanceCountOf(conn);
        return n;
    }
};

EvidenceIndex buildEvidenceIndex(const CompiledProblem& problem, const ConstraintPack& pack);

}  // namespace taxalign
