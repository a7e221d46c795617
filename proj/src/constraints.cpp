#include "taxalign/constraints.hpp"

#include <algorithm>
#include <sstream>

namespace taxalign {

std::string ConstraintCode::str() const {
    return {static_cast<char>(sourceScope), static_cast<char>(targetScope),
            static_cast<char>(direction)};
}

ConstraintCode parseConstraintCode(std::string_view text) {
    std::string lower;
    for (char c : text) lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    if (lower.size() != 3) throw ConfigError("unknown constraint code: " + std::string(text));

    ConstraintCode code{};
    switch (lower[0]) {
        case 'i': code.sourceScope = Scope::Immediate; break;
        case 'a': code.sourceScope = Scope::Any; break;
        default: throw ConfigError("unknown constraint code: " + std::string(text));
    }
    switch (lower[1]) {
        case 'i': code.targetScope = Scope::Immediate; break;
        case 'a': code.targetScope = Scope::Any; break;
        default: throw ConfigError("unknown constraint code: " + std::string(text));
    }
    switch (lower[2]) {
        case 'e': code.direction = Direction::Hypernym; break;
        case 'o': code.direction = Direction::Hyponym; break;
        case 'b': code.direction = Direction::Both; break;
        default: throw ConfigError("unknown constraint code: " + std::string(text));
    }
    return code;
}

std::string ConstraintPack::describe() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i) out << ',';
        out << codes[i].first.str() << ':' << codes[i].second;
    }
    return out.str();
}

ConstraintPack expandPack(std::string_view spec) {
    ConstraintPack pack;
    std::string lower;
    for (char c : spec) lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);

    if (lower == "ii" || lower == "ai" || lower == "ia" || lower == "aa") {
        pack.name = lower;
        for (char dir : {'e', 'o', 'b'})
            pack.codes.emplace_back(parseConstraintCode(lower + dir), 1.0);
        return pack;
    }

    pack.name = "custom";
    for (auto token : splitView(spec, ',')) {
        auto trimmed = trimView(token);
        if (trimmed.empty()) throw ConfigError("empty constraint code in: " + std::string(spec));
        ConstraintCode code = parseConstraintCode(trimmed);
        for (const auto& [existing, strength] : pack.codes)
            if (existing == code)
                throw ConfigError("duplicate constraint code: " + code.str());
        pack.codes.emplace_back(code, 1.0);
    }
    if (pack.codes.empty()) throw ConfigError("empty constraint set");
    return pack;
}

void setStrength(ConstraintPack& pack, ConstraintCode code, double strength) {
    if (strength <= 0.0) throw ConfigError("constraint strength must be positive");
    for (auto& [existing, s] : pack.codes) {
        if (existing == code) {
            s = strength;
            return;
        }
    }
    throw ConfigError("strength for a code not in the constraint set: " + code.str());
}

namespace {

std::span<const std::uint32_t> scopeSet(const Taxonomy& t, std::uint32_t node, Scope scope,
                                        bool up) {
    if (scope == Scope::Immediate) return up ? t.parentsOf(node) : t.childrenOf(node);
    return up ? t.ancestorsOf(node) : t.descendantsOf(node);
}

/// All candidate connections (s', t') with s' in srcSide and t' in tgtSide,
/// in (s' asc, t' asc) order. This is the canonical evidence order shared
/// with the indexed path.
std::vector<Connection> connectedPairs(const CandidateTable& table,
                                       std::span<const std::uint32_t> srcSide,
                                       std::span<const std::uint32_t> tgtSide) {
    std::vector<Connection> out;
    const Taxonomy& src = table.source();
    const Taxonomy& tgt = table.target();
    for (std::uint32_t s : srcSide) {
        auto labels = table.candidatesDense(s);
        for (std::uint32_t t : tgtSide) {
            if (std::binary_search(labels.begin(), labels.end(), t))
                out.push_back({src.idOf(s), tgt.idOf(t)});
        }
    }
    return out;
}

}  // namespace

SupportEvidence enumerateSupport(ConstraintCode code, const Connection& c,
                                 const CandidateTable& table) {
    const Taxonomy& src = table.source();
    const Taxonomy& tgt = table.target();
    const std::uint32_t s = src.require(c.source);
    const std::uint32_t t = tgt.require(c.target);
    auto labels = table.candidatesDense(s);
    if (!std::binary_search(labels.begin(), labels.end(), t))
        throw ValidationError("not a candidate connection: " + c.source + " -> " + c.target);

    SupportEvidence evidence{c, code, {}, {}};
    switch (code.direction) {
        case Direction::Hypernym:
            evidence.supporters = connectedPairs(table, scopeSet(src, s, code.sourceScope, true),
                                                 scopeSet(tgt, t, code.targetScope, true));
            break;
        case Direction::Hyponym:
            evidence.supporters = connectedPairs(table, scopeSet(src, s, code.sourceScope, false),
                                                 scopeSet(tgt, t, code.targetScope, false));
            break;
        case Direction::Both: {
            auto hyperSide = connectedPairs(table, scopeSet(src, s, code.sourceScope, true),
                                            scopeSet(tgt, t, code.targetScope, true));
            auto hypoSide = connectedPairs(table, scopeSet(src, s, code.sourceScope, false),
                                           scopeSet(tgt, t, code.targetScope, false));
            for (const auto& up : hyperSide)
                for (const auto& down : hypoSide) evidence.pairedSupporters.emplace_back(up, down);
            break;
        }
    }
    return evidence;
}

}  // namespace taxalign
