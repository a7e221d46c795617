#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taxalign/candidates.hpp"
#include "taxalign/taxonomy.hpp"

namespace taxalign {

enum class Scope : char { Immediate = 'i', Any = 'a' };
enum class Direction : char { Hypernym = 'e', Hyponym = 'o', Both = 'b' };

/// One structural constraint type. The three-character form is
/// <source scope><target scope><direction>, e.g. "aie": any-depth source
/// ancestor connected to the immediate target hypernym.
struct ConstraintCode {
    Scope sourceScope;
    Scope targetScope;
    Direction direction;

    std::string str() const;

    friend bool operator==(const ConstraintCode&, const ConstraintCode&) = default;
};

/// Parses "iie", "aab", ...; throws ConfigError on anything else.
ConstraintCode parseConstraintCode(std::string_view text);

/// A set of constraint codes applied together, each with a strength
/// multiplier. Support from the codes adds up.
struct ConstraintPack {
    std::string name;  // "ii", "ai", "ia", "aa" or "custom"
    std::vector<std::pair<ConstraintCode, double>> codes;

    std::string describe() const;  // "aae:1,aao:1,aab:1"
};

/// Expands a named pack ("ii" -> iie,iio,iib) or an explicit comma-separated
/// code list ("aie,aio"). Strengths default to 1. Throws ConfigError.
ConstraintPack expandPack(std::string_view spec);

/// Overrides the strength of one code already in the pack; throws ConfigError
/// when the code is not part of it.
void setStrength(ConstraintPack& pack, ConstraintCode code, double strength);

/// The supporting connections one constraint type finds for `c`:
/// already-connected node pairs standing in the same hyper/hyponym relation
/// to both sides of `c`.
struct SupportEvidence {
    Connection forConnection;
    ConstraintCode viaCode;
    /// E/O directions: one supporter per instance, canonical order
    /// (source side ascending, then target side ascending).
    std::vector<Connection> supporters;
    /// B direction: (hypernym-side, hyponym-side) pairs, hypernym side major.
    std::vector<std::pair<Connection, Connection>> pairedSupporters;

    std::size_t instanceCount() const {
        return viaCode.direction == Direction::Both ? pairedSupporters.size() : supporters.size();
    }
};

/// Enumerates every evidence instance `code` yields for connection `c`.
/// Throws ValidationError when `c` is not a candidate connection.
SupportEvidence enumerateSupport(ConstraintCode code, const Connection& c,
                                 const CandidateTable& table);

}  // namespace taxalign
