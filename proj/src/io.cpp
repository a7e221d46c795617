#include "taxalign/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace taxalign {

namespace {

using nlohmann::json;

std::string formatWeight(double w) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", w);
    return buf;
}

std::ifstream openOrThrow(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    return in;
}

std::ofstream createOrThrow(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write file: " + path);
    return out;
}

/// Iterates data lines (comments and blank lines skipped), stripping CR.
template <typename Fn>
void forEachDataLine(std::istream& in, const std::string& path, Fn&& fn) {
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string_view view = line;
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (view.empty() || view.front() == '#') continue;
        fn(view, lineNo);
    }
    (void)path;
}

}  // namespace

std::string RunManifest::toJson() const {
    json j;
    j["tool"] = tool;
    j["version"] = version;
    j["command"] = command;
    j["inputs"] = {
        {"source", {{"path", sourcePath}, {"fnv1a64", sourceHash}}},
        {"target", {{"path", targetPath}, {"fnv1a64", targetHash}}},
    };
    j["config"] = {
        {"constraints", constraints},
        {"pack", packName},
        {"deltas", deltas},
        {"epsilon", epsilon},
        {"max_iterations", maxIterations},
        {"init", initMode},
        {"seed", seed},
        {"kernel_requested", kernelRequested},
        {"kernel_resolved", kernelResolved},
        {"threads", threads},
    };
    j["formats"] = formatVersions;
    return j.dump(2);
}

std::string RunManifest::configHash() const { return toHex(fnv1a64(toJson())); }

void writeManifest(const RunManifest& manifest, const std::string& path) {
    auto out = createOrThrow(path);
    out << manifest.toJson() << '\n';
    if (!out) throw IoError("error writing manifest: " + path);
}

std::string hashFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return toHex(fnv1a64(buf.str()));
}

void writeMapping(const Mapping& m, const std::string& path, const std::string& constraints,
                  const std::string& configHash) {
    auto out = createOrThrow(path);
    out << "# taxalign mapping v1\n";
    if (m.delta > 0.0) out << "# delta=" << formatWeight(m.delta) << '\n';
    if (!constraints.empty()) out << "# constraints=" << constraints << '\n';
    if (!configHash.empty()) out << "# config=" << configHash << '\n';
    for (const auto& [source, links] : m.links)
        for (const Link& link : links)
            out << source << '\t' << link.target << '\t' << formatWeight(link.weight) << '\n';
    if (!out) throw IoError("error writing mapping: " + path);
}

Mapping readMapping(const std::string& path) {
    auto in = openOrThrow(path);
    Mapping m;
    std::string line;
    std::size_t lineNo = 0;
    std::ostringstream provenance;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string_view view = line;
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (view.empty()) continue;
        if (view.front() == '#') {
            provenance << view << '\n';
            constexpr std::string_view kDelta = "# delta=";
            if (view.substr(0, kDelta.size()) == kDelta) {
                try {
                    m.delta = std::stod(std::string(view.substr(kDelta.size())));
                } catch (const std::exception&) {
                    throw ParseError(path, lineNo, "bad delta header");
                }
            }
            continue;
        }
        auto fields = splitView(view, '\t');
        if (fields.size() != 3)
            throw ParseError(path, lineNo, "expected 3 tab-separated fields");
        double weight;
        try {
            weight = std::stod(std::string(fields[2]));
        } catch (const std::exception&) {
            throw ParseError(path, lineNo, "bad weight: " + std::string(fields[2]));
        }
        if (fields[0].empty() || fields[1].empty())
            throw ParseError(path, lineNo, "empty id field");
        m.links[std::string(fields[0])].push_back({std::string(fields[1]), weight});
    }
    for (auto& [source, links] : m.links) {
        std::sort(links.begin(), links.end(),
                  [](const Link& a, const Link& b) { return a.target < b.target; });
        links.erase(std::unique(links.begin(), links.end(),
                                [](const Link& a, const Link& b) { return a.target == b.target; }),
                    links.end());
    }
    m.provenance = provenance.str();
    return m;
}

GoldSample readGoldSample(const std::string& path) {
    auto in = openOrThrow(path);
    GoldSample gold;
    forEachDataLine(in, path, [&](std::string_view view, std::size_t lineNo) {
        auto fields = splitView(view, '\t');
        if (fields.size() != 2 && fields.size() != 3)
            throw ParseError(path, lineNo, "expected 2 or 3 tab-separated fields");
        SynsetId source{trimView(fields[0])};
        if (source.empty()) throw ParseError(path, lineNo, "empty source id");
        auto& targets = gold.entries[source];
        for (auto token : splitView(fields[1], ',')) {
            auto t = trimView(token);
            if (t.empty()) throw ParseError(path, lineNo, "empty target id");
            targets.insert(std::string(t));
        }
        if (targets.empty()) throw ParseError(path, lineNo, "gold entry without targets");
        if (fields.size() == 3) {
            auto g = trimView(fields[2]);
            if (!g.empty()) gold.group[source] = std::string(g);
        }
    });
    return gold;
}

std::map<SynsetId, std::string> readGroups(const std::string& path) {
    auto in = openOrThrow(path);
    std::map<SynsetId, std::string> groups;
    forEachDataLine(in, path, [&](std::string_view view, std::size_t lineNo) {
        auto fields = splitView(view, '\t');
        if (fields.size() != 2) throw ParseError(path, lineNo, "expected 2 tab-separated fields");
        auto id = trimView(fields[0]);
        auto group = trimView(fields[1]);
        if (id.empty() || group.empty()) throw ParseError(path, lineNo, "empty field");
        groups[std::string(id)] = std::string(group);
    });
    return groups;
}

VariantIndex readVariantIndex(const std::string& path) {
    auto in = openOrThrow(path);
    VariantIndex index;
    forEachDataLine(in, path, [&](std::string_view view, std::size_t lineNo) {
        auto fields = splitView(view, '\t');
        if (fields.size() != 2) throw ParseError(path, lineNo, "expected 2 tab-separated fields");
        std::string variant{trimView(fields[0])};
        std::string synset{trimView(fields[1])};
        if (variant.empty() || synset.empty()) throw ParseError(path, lineNo, "empty field");
        auto [it, inserted] = index.synsetOf.emplace(std::move(variant), std::move(synset));
        if (!inserted)
            throw ParseError(path, lineNo, "duplicate variant key: " + it->first);
    });
    return index;
}

SenseMapping readSenseMapping(const std::string& path) {
    auto in = openOrThrow(path);
    SenseMapping sm;
    forEachDataLine(in, path, [&](std::string_view view, std::size_t lineNo) {
        auto fields = splitView(view, '\t');
        if (fields.size() != 2) throw ParseError(path, lineNo, "expected 2 tab-separated fields");
        std::string src{trimView(fields[0])};
        std::string tgt{trimView(fields[1])};
        if (src.empty() || tgt.empty()) throw ParseError(path, lineNo, "empty field");
        sm.pairs.emplace_back(std::move(src), std::move(tgt));
    });
    return sm;
}

void writeCandidateDump(const CandidateTable& table, const std::string& path) {
    auto out = createOrThrow(path);
    out << "# taxalign candidates v1\n";
    const Taxonomy& src = table.source();
    const Taxonomy& tgt = table.target();
    for (std::uint32_t s = 0; s < src.size(); ++s) {
        out << src.idOf(s) << '\t';
        auto labels = table.candidatesDense(s);
        for (std::size_t i = 0; i < labels.size(); ++i)
            out << (i ? "," : "") << tgt.idOf(labels[i]);
        out << '\n';
    }
    if (!out) throw IoError("error writing candidate dump: " + path);
}

void writeTrace(const std::vector<IterationStats>& trace, const std::string& path) {
    auto out = createOrThrow(path);
    out << "iteration\tmax_delta\tmean_support\n";
    char buf[80];
    for (const IterationStats& s : trace) {
        std::snprintf(buf, sizeof(buf), "%d\t%.9g\t%.9g\n", s.iteration, s.maxDelta,
                      s.meanSupport);
        out << buf;
    }
    if (!out) throw IoError("error writing trace: " + path);
}

}  // namespace taxalign
