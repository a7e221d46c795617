#pragma once

#include <map>
#include <string>
#include <vector>

#include "taxalign/relaxation.hpp"

namespace taxalign {

struct Link {
    SynsetId target;
    double weight = 1.0;

    friend bool operator==(const Link&, const Link&) = default;
};

/// Extracted source -> target links. Every variable the extraction looked at
/// appears in `links`; a variable whose best weight missed the threshold maps
/// to an empty vector (distinct from a variable that was never covered).
struct Mapping {
    std::map<SynsetId, std::vector<Link>> links;  // link vectors sorted by target id
    double delta = 0.0;
    std::string provenance;

    std::size_t proposingVariables() const;
    std::size_t totalLinks() const;
    const std::vector<Link>* linksOf(const SynsetId& source) const;
};

/// Keeps every label with weight >= delta (ties retained). A variable where
/// no label reaches delta keeps nothing: no fallback to the argmax.
/// Throws ConfigError for delta outside (0, 1].
Mapping extractMapping(const Assignment& a, double delta);

struct AmbiguityRow {
    std::size_t proposingVariables = 0;  // retained >= 1 target
    std::size_t retainedLinks = 0;
    /// Average retained targets per proposing variable; 0 when none propose.
    double average = 0.0;
};

struct AmbiguityReport {
    AmbiguityRow overall;
    AmbiguityRow monosemous;
    AmbiguityRow ambiguous;
};

/// Average remaining ambiguity of a mapping, split by whether the variable
/// had one candidate or several.
AmbiguityReport ambiguityStats(const Mapping& m, const CandidateTable& table);

/// Ambiguity of a standalone mapping (no candidate table): overall row only.
AmbiguityRow ambiguityOverall(const Mapping& m);

}  // namespace taxalign
