#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "taxalign/evaluation.hpp"
#include "taxalign/relaxation.hpp"

namespace taxalign {

/// Reproducibility record serialized next to every align output. Two runs
/// with equal manifests produce byte-identical outputs, so nothing
/// time- or host-dependent belongs here.
struct RunManifest {
    std::string tool;
    std::string version;
    std::string command;

    std::string sourcePath;
    std::string sourceHash;  // fnv1a64 of the file bytes, hex
    std::string targetPath;
    std::string targetHash;

    std::string constraints;  // "aae:1,aao:1,aab:1"
    std::string packName;
    std::vector<std::string> deltas;  // as given on the command line
    double epsilon = 1e-4;
    int maxIterations = 100;
    std::string initMode;  // "uniform" | "random"
    std::uint64_t seed = 0;
    std::string kernelRequested;
    std::string kernelResolved;
    int threads = 1;

    std::map<std::string, int> formatVersions;

    /// Canonical JSON (sorted keys, stable number formatting).
    std::string toJson() const;
    /// fnv1a64 over toJson(), hex; recorded in mapping file headers.
    std::string configHash() const;
};

void writeManifest(const RunManifest& manifest, const std::string& path);

std::string hashFile(const std::string& path);

// --- mapping files -------------------------------------------------------
// <source_id> TAB <target_id> TAB <weight, 6 decimals>, sorted, one line per
// retained link. Header comments carry delta / constraints / config hash.

void writeMapping(const Mapping& m, const std::string& path, const std::string& constraints,
                  const std::string& configHash);

/// Reads a mapping file; header comments are collected into `provenance`
/// and a `# delta=` header restores the threshold.
Mapping readMapping(const std::string& path);

// --- evaluation inputs ---------------------------------------------------

/// <source_id> TAB <comma-separated target ids> [TAB <group>]
GoldSample readGoldSample(const std::string& path);

/// <source_id> TAB <group>
std::map<SynsetId, std::string> readGroups(const std::string& path);

/// <variant_key> TAB <synset_id>
VariantIndex readVariantIndex(const std::string& path);

/// <source_variant_key> TAB <target_variant_key>
SenseMapping readSenseMapping(const std::string& path);

// --- debug dumps ---------------------------------------------------------

/// <source_id> TAB <comma-separated candidate target ids>
void writeCandidateDump(const CandidateTable& table, const std::string& path);

/// iteration TAB max_delta TAB mean_support
void writeTrace(const std::vector<IterationStats>& trace, const std::string& path);

}  // namespace taxalign
