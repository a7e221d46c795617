#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taxalign/extraction.hpp"

namespace taxalign {

/// Manually verified links used as the precision/recall reference. `group`
/// labels are free-form data (e.g. confidence buckets) carried through to
/// grouped reports.
struct GoldSample {
    std::map<SynsetId, std::set<SynsetId>> entries;
    std::map<SynsetId, std::string> group;
};

struct CoverageResult {
    /// A variable counts as covered when it proposes at least one target and,
    /// if it had several candidates, kept only a strict subset of them.
    double overall = 0.0;
    double ambiguousOnly = 0.0;
    std::size_t coveredVariables = 0;    // denominator: variables with >= 1 candidate
    std::size_t ambiguousVariables = 0;  // denominator of the ambiguous-only figure
};

CoverageResult coverage(const Mapping& m, const CandidateTable& table);

struct PrecisionRecallResult {
    /// Correct proposed links / proposed links, over gold-covered variables.
    double precisionPerLink = 0.0;
    /// Variables with >= 1 correct link / variables with >= 1 proposal,
    /// over gold-covered variables. Brackets the per-link figure from above.
    double precisionPerVariable = 0.0;
    /// Gold-covered variables receiving >= 1 correct link / gold-covered
    /// variables.
    double recall = 0.0;

    std::size_t goldVariables = 0;      // gold entries over known variables
    std::size_t proposedLinks = 0;      // over gold-covered variables
    std::size_t correctLinks = 0;
    std::size_t skippedGoldEntries = 0; // gold ids absent from the mapping's variable space
};

/// When `ambiguousVariables` is given, a second result restricted to those
/// variables is produced.
struct PrecisionRecallReport {
    PrecisionRecallResult overall;
    std::optional<PrecisionRecallResult> ambiguousOnly;
};

/// `variableSpace` is the set of source ids the mapping was computed over;
/// gold entries outside it are skipped and counted.
PrecisionRecallReport precisionRecall(const Mapping& m, const GoldSample& gold,
                                      const std::set<SynsetId>& variableSpace,
                                      const std::set<SynsetId>* ambiguousVariables = nullptr);

struct AgreementRow {
    std::string group;
    std::size_t size = 0;  // variables of this group proposing in the left mapping
    /// Mean over those variables of (shared links / left links): the
    /// link-level agreement. Averaging per variable keeps hard <= soft.
    double hard = 0.0;
    /// Fraction of those variables sharing at least one link.
    double soft = 0.0;
    /// Link-count ratio (shared / left), for reference.
    double hardPerLink = 0.0;
};

struct AgreementReport {
    std::vector<AgreementRow> groups;          // group rows, "monosemous" first when present
    std::optional<AgreementRow> subtotal;      // all groups except "monosemous"
    AgreementRow total;
};

/// Directional agreement of `left` against `right`, over variables where
/// `left` proposes at least one link. Group labels, when provided, partition
/// the rows; ungrouped variables fall into "(ungrouped)".
AgreementReport agreement(const Mapping& left, const Mapping& right,
                          const std::map<SynsetId, std::string>* groups = nullptr);

struct AmbiguityGroupRow {
    std::string group;
    std::size_t size = 0;
    double average = 0.0;
};

struct GroupedAmbiguityReport {
    std::vector<AmbiguityGroupRow> groups;
    std::optional<AmbiguityGroupRow> subtotal;
    AmbiguityGroupRow total;
};

GroupedAmbiguityReport groupedAmbiguity(const Mapping& m,
                                        const std::map<SynsetId, std::string>* groups = nullptr);

/// A variant-level (sense-level) mapping plus the variant -> synset indexes
/// of both sides. Variant keys are opaque strings.
struct VariantIndex {
    std::map<std::string, SynsetId> synsetOf;
};

struct SenseMapping {
    std::vector<std::pair<std::string, std::string>> pairs;  // source variant -> target variant
};

struct ConversionResult {
    Mapping mapping;  // weight 1.0 per retained link
    std::size_t unresolvedPairs = 0;
};

/// Collapses a variant mapping to synset level: each source synset keeps the
/// union of the target synsets its mapped variants land in. Several distinct
/// targets are all retained. Pairs whose variants resolve in neither index
/// are skipped and counted.
ConversionResult senseToSynsetConvert(const SenseMapping& senseMap, const VariantIndex& srcIndex,
                                      const VariantIndex& tgtIndex);

}  // namespace taxalign
