// taxalign: aligns a source taxonomy to a target taxonomy by relaxation
// labeling over hyper/hyponymy constraints, and evaluates the result.
//
// Subcommands: align, eval, compare, convert, synth. Exit codes: 0 ok,
// 1 runtime error, 2 usage/config error, 3 input format error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "taxalign/evaluation.hpp"
#include "taxalign/io.hpp"
#include "taxalign/synth.hpp"
#include "taxalign/version.hpp"

namespace fs = std::filesystem;
using namespace taxalign;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct GlobalOpts {
    int threads = 1;
    bool verbose = false;
    std::string reportFormat = "text";
};

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

// ---- report printing ------------------------------------------------------

void printMetric(const GlobalOpts& g, const std::string& metric, const std::string& scope,
                 double value, const std::string& extra = "") {
    if (g.reportFormat == "tsv") {
        std::cout << metric << '\t' << scope << '\t' << fmt("%.6f", value) << '\n';
    } else {
        std::cout << "  " << metric << " [" << scope << "] = " << fmt("%.4f", value);
        if (!extra.empty()) std::cout << "  (" << extra << ")";
        std::cout << '\n';
    }
}

void printAgreementRow(const GlobalOpts& g, const AgreementRow& row) {
    if (g.reportFormat == "tsv") {
        std::cout << "agreement_hard\t" << row.group << '\t' << fmt("%.6f", row.hard) << '\n';
        std::cout << "agreement_soft\t" << row.group << '\t' << fmt("%.6f", row.soft) << '\n';
        std::cout << "agreement_hard_per_link\t" << row.group << '\t'
                  << fmt("%.6f", row.hardPerLink) << '\n';
    } else {
        std::printf("  %-14s %8zu   %7.4f %7.4f %14.4f\n", row.group.c_str(), row.size, row.hard,
                    row.soft, row.hardPerLink);
    }
}

void printAmbiguityRow(const GlobalOpts& g, const std::string& side, const AmbiguityGroupRow& row) {
    if (g.reportFormat == "tsv") {
        std::cout << "ambiguity_" << side << '\t' << row.group << '\t' << fmt("%.6f", row.average)
                  << '\n';
    } else {
        std::printf("  %-14s %8zu   %7.3f\n", row.group.c_str(), row.size, row.average);
    }
}

// ---- align ----------------------------------------------------------------

struct AlignOpts {
    std::string sourcePath;
    std::string targetPath;
    std::string constraints = "aa";
    std::vector<std::string> strengths;
    std::string deltas = "0.5";
    double epsilon = 1e-4;
    int maxIterations = 100;
    std::string init = "uniform";
    std::uint64_t seed = 0;
    std::string kernel = "auto";
    std::string outDir = ".";
    std::string tracePath;
    std::string dumpCandidatesPath;
};

int runAlign(const GlobalOpts& g, const AlignOpts& o) {
    ConstraintPack pack = expandPack(o.constraints);
    for (const auto& spec : o.strengths) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw ConfigError("--strength expects code=value: " + spec);
        double value;
        try {
            value = std::stod(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad strength value: " + spec);
        }
        setStrength(pack, parseConstraintCode(spec.substr(0, eq)), value);
    }

    std::vector<std::pair<std::string, double>> deltas;
    for (auto token : splitView(o.deltas, ',')) {
        auto t = trimView(token);
        if (t.empty()) throw ConfigError("empty delta in list: " + o.deltas);
        double d;
        try {
            d = std::stod(std::string(t));
        } catch (const std::exception&) {
            throw ConfigError("bad delta: " + std::string(t));
        }
        if (!(d > 0.0) || d > 1.0) throw ConfigError("delta must be in (0, 1]: " + std::string(t));
        deltas.emplace_back(std::string(t), d);
    }
    if (deltas.empty()) throw ConfigError("at least one delta required");

    const kernels::Kernels* kernel = kernels::byName(o.kernel);
    if (!kernel) throw ConfigError("unknown or unavailable kernel: " + o.kernel);
    if (o.init != "uniform" && o.init != "random")
        throw ConfigError("init must be uniform or random");

    RelaxationConfig config;
    config.pack = pack;
    config.epsilon = o.epsilon;
    config.maxIterations = o.maxIterations;
    config.init = o.init == "uniform" ? InitMode::uniform() : InitMode::seededRandom(o.seed);
    config.kernel = kernel;
    config.threads = g.threads;
    config.validate();

    auto src = loadTaxonomy(o.sourcePath, TaxonomyRole::Source);
    auto tgt = loadTaxonomy(o.targetPath, TaxonomyRole::Target);
    std::cout << "loaded source: " << src->size() << " synsets, target: " << tgt->size()
              << " synsets\n";

    CandidateTable table = generateCandidates(*src, *tgt);
    const auto& st = table.stats();
    std::cout << "candidates: " << st.totalVariables << " variables, " << st.covered
              << " covered (" << st.ambiguous << " ambiguous), " << st.connections
              << " connections\n";
    if (!o.dumpCandidatesPath.empty()) writeCandidateDump(table, o.dumpCandidatesPath);

    IterationObserver observer;
    if (g.verbose)
        observer = [](const IterationStats& s, const Assignment&) {
            std::fprintf(stderr, "iter %d  max_delta=%.9g  mean_support=%.9g\n", s.iteration,
                         s.maxDelta, s.meanSupport);
        };

    RelaxationResult result = run(table, config, observer);
    std::cout << "relaxation: " << (result.assignment.converged ? "converged" : "stopped")
              << " after " << result.assignment.iterations << " iterations (kernel="
              << result.kernel->name << ")\n";

    RunManifest manifest;
    manifest.tool = kToolName;
    manifest.version = kVersion;
    manifest.command = "align";
    manifest.sourcePath = o.sourcePath;
    manifest.sourceHash = hashFile(o.sourcePath);
    manifest.targetPath = o.targetPath;
    manifest.targetHash = hashFile(o.targetPath);
    manifest.constraints = pack.describe();
    manifest.packName = pack.name;
    for (const auto& [text, value] : deltas) manifest.deltas.push_back(text);
    manifest.epsilon = o.epsilon;
    manifest.maxIterations = o.maxIterations;
    manifest.initMode = o.init;
    manifest.seed = o.seed;
    manifest.kernelRequested = o.kernel;
    manifest.kernelResolved = result.kernel->name;
    manifest.threads = g.threads;
    manifest.formatVersions = {{"taxonomy", 1}, {"mapping", 1}};

    fs::create_directories(o.outDir);
    const std::string configHash = manifest.configHash();
    for (const auto& [text, value] : deltas) {
        Mapping m = extractMapping(result.assignment, value);
        AmbiguityReport amb = ambiguityStats(m, table);
        const fs::path path = fs::path(o.outDir) / ("mapping_d" + text + ".tsv");
        writeMapping(m, path.string(), manifest.constraints, configHash);
        std::cout << "delta " << text << ": " << amb.overall.proposingVariables
                  << " variables propose, " << amb.overall.retainedLinks << " links, avg ambiguity "
                  << fmt("%.3f", amb.overall.average) << '\n';
        std::cout << "wrote " << path.string() << '\n';
    }

    const fs::path manifestPath = fs::path(o.outDir) / "manifest.json";
    writeManifest(manifest, manifestPath.string());
    std::cout << "wrote " << manifestPath.string() << '\n';

    if (!o.tracePath.empty()) writeTrace(result.trace, o.tracePath);
    return kExitOk;
}

// ---- eval -----------------------------------------------------------------

struct EvalOpts {
    std::string mappingPath;
    std::string goldPath;
    std::string sourcePath;
    std::string targetPath;
};

int runEval(const GlobalOpts& g, const EvalOpts& o) {
    auto src = loadTaxonomy(o.sourcePath, TaxonomyRole::Source);
    auto tgt = loadTaxonomy(o.targetPath, TaxonomyRole::Target);
    CandidateTable table = generateCandidates(*src, *tgt);
    Mapping mapping = readMapping(o.mappingPath);
    GoldSample gold = readGoldSample(o.goldPath);

    std::size_t unknownSources = 0;
    for (const auto& [source, links] : mapping.links)
        if (!src->contains(source)) ++unknownSources;
    if (unknownSources > 0)
        std::cerr << "warning: " << unknownSources
                  << " mapping source ids not present in the source taxonomy\n";

    std::set<SynsetId> covered;
    std::set<SynsetId> ambiguousSet;
    for (std::uint32_t s = 0; s < src->size(); ++s) {
        if (!table.isCovered(s)) continue;
        covered.insert(src->idOf(s));
        if (table.isAmbiguous(s)) ambiguousSet.insert(src->idOf(s));
    }

    CoverageResult cov = coverage(mapping, table);
    PrecisionRecallReport pr = precisionRecall(mapping, gold, covered, &ambiguousSet);

    if (g.reportFormat == "text") std::cout << "coverage:\n";
    printMetric(g, "coverage", "overall", cov.overall,
                std::to_string(cov.coveredVariables) + " covered variables");
    printMetric(g, "coverage", "ambiguous", cov.ambiguousOnly,
                std::to_string(cov.ambiguousVariables) + " ambiguous variables");

    if (g.reportFormat == "text")
        std::cout << "precision/recall (" << pr.overall.goldVariables << " gold variables, "
                  << pr.overall.skippedGoldEntries << " skipped):\n";
    printMetric(g, "precision_per_link", "overall", pr.overall.precisionPerLink);
    printMetric(g, "precision_per_variable", "overall", pr.overall.precisionPerVariable);
    printMetric(g, "recall", "overall", pr.overall.recall);
    if (pr.ambiguousOnly) {
        printMetric(g, "precision_per_link", "ambiguous", pr.ambiguousOnly->precisionPerLink);
        printMetric(g, "precision_per_variable", "ambiguous",
                    pr.ambiguousOnly->precisionPerVariable);
        printMetric(g, "recall", "ambiguous", pr.ambiguousOnly->recall);
    }
    if (g.reportFormat == "tsv") {
        std::cout << "gold_skipped\toverall\t" << pr.overall.skippedGoldEntries << '\n';
        std::cout << "mapping_unknown_sources\toverall\t" << unknownSources << '\n';
    }
    return kExitOk;
}

// ---- compare ---------------------------------------------------------------

struct CompareOpts {
    std::string leftPath;
    std::string rightPath;
    std::string groupsPath;
    std::string sourcePath;
    std::string targetPath;
};

int runCompare(const GlobalOpts& g, const CompareOpts& o) {
    Mapping left = readMapping(o.leftPath);
    Mapping right = readMapping(o.rightPath);

    std::map<SynsetId, std::string> groups;
    const std::map<SynsetId, std::string>* groupsPtr = nullptr;
    if (!o.groupsPath.empty()) {
        groups = readGroups(o.groupsPath);
        groupsPtr = &groups;
    }

    AgreementReport agr = agreement(left, right, groupsPtr);
    if (g.reportFormat == "text") {
        std::cout << "agreement (left vs right):\n";
        std::printf("  %-14s %8s   %7s %7s %14s\n", "group", "size", "hard", "soft",
                    "hard_per_link");
    }
    for (const auto& row : agr.groups) printAgreementRow(g, row);
    if (agr.subtotal) printAgreementRow(g, *agr.subtotal);
    printAgreementRow(g, agr.total);

    for (const auto& [side, mapping] : {std::pair<const char*, const Mapping*>{"left", &left},
                                        {"right", &right}}) {
        GroupedAmbiguityReport amb = groupedAmbiguity(*mapping, groupsPtr);
        if (g.reportFormat == "text") {
            std::cout << "remaining ambiguity (" << side << "):\n";
            std::printf("  %-14s %8s   %7s\n", "group", "size", "average");
        }
        for (const auto& row : amb.groups) printAmbiguityRow(g, side, row);
        if (amb.subtotal) printAmbiguityRow(g, side, *amb.subtotal);
        printAmbiguityRow(g, side, amb.total);
    }

    // A candidate table enables the monosemous/ambiguous split.
    if (!o.sourcePath.empty() && !o.targetPath.empty()) {
        auto src = loadTaxonomy(o.sourcePath, TaxonomyRole::Source);
        auto tgt = loadTaxonomy(o.targetPath, TaxonomyRole::Target);
        CandidateTable table = generateCandidates(*src, *tgt);
        for (const auto& [side, mapping] : {std::pair<const char*, const Mapping*>{"left", &left},
                                            {"right", &right}}) {
            AmbiguityReport amb = ambiguityStats(*mapping, table);
            if (g.reportFormat == "text")
                std::cout << "candidate-based ambiguity split (" << side << "):\n";
            printMetric(g, std::string("ambiguity_") + side, "monosemous", amb.monosemous.average);
            printMetric(g, std::string("ambiguity_") + side, "ambiguous", amb.ambiguous.average);
            printMetric(g, std::string("ambiguity_") + side, "overall", amb.overall.average);
        }
    }
    return kExitOk;
}

// ---- convert ----------------------------------------------------------------

struct ConvertOpts {
    std::string senseMappingPath;
    std::string sourceIndexPath;
    std::string targetIndexPath;
    std::string outPath;
};

int runConvert(const GlobalOpts&, const ConvertOpts& o) {
    SenseMapping sm = readSenseMapping(o.senseMappingPath);
    VariantIndex srcIndex = readVariantIndex(o.sourceIndexPath);
    VariantIndex tgtIndex = readVariantIndex(o.targetIndexPath);
    ConversionResult result = senseToSynsetConvert(sm, srcIndex, tgtIndex);
    if (result.unresolvedPairs > 0)
        std::cerr << "warning: " << result.unresolvedPairs
                  << " variant pairs skipped (unresolvable keys)\n";
    writeMapping(result.mapping, o.outPath, "", "");
    std::cout << "wrote " << o.outPath << " (" << result.mapping.totalLinks() << " links over "
              << result.mapping.links.size() << " synsets)\n";
    return kExitOk;
}

// ---- synth -----------------------------------------------------------------

struct SynthOpts {
    SynthParams params;
    std::string outDir = ".";
    std::string prefix = "synth";
};

int runSynth(const GlobalOpts&, const SynthOpts& o) {
    SynthResult result = synthesize(o.params);
    fs::create_directories(o.outDir);
    const fs::path base = fs::path(o.outDir) / o.prefix;

    saveTaxonomy(*result.source, base.string() + "_source.tsv");
    saveTaxonomy(*result.target, base.string() + "_target.tsv");

    std::ofstream gold(base.string() + "_gold.tsv");
    if (!gold) throw IoError("cannot write gold file");
    gold << "# taxalign gold v1\n";
    for (const auto& [source, targets] : result.gold.entries) {
        gold << source << '\t';
        std::size_t i = 0;
        for (const auto& t : targets) gold << (i++ ? "," : "") << t;
        gold << '\n';
    }

    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = "synth";
    j["params"] = {{"nodes", o.params.nodes},
                   {"branching", o.params.branching},
                   {"injection_rate", o.params.injectionRate},
                   {"cluster_size", o.params.clusterSize},
                   {"perturbation_rate", o.params.perturbationRate},
                   {"dag_rate", o.params.dagRate},
                   {"seed", o.params.seed}};
    std::ofstream manifest(base.string() + "_manifest.json");
    if (!manifest) throw IoError("cannot write synth manifest");
    manifest << j.dump(2) << '\n';

    std::cout << "wrote " << base.string() << "_{source,target,gold}.tsv\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"taxonomy alignment by relaxation labeling"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--threads", global.threads, "worker threads (default 1)");
    app.add_flag("--verbose", global.verbose, "per-iteration log on stderr");
    app.add_option("--report-format", global.reportFormat, "text|tsv")
        ->check(CLI::IsMember({"text", "tsv"}));

    AlignOpts alignOpts;
    CLI::App* align = app.add_subcommand("align", "run the full alignment pipeline");
    align->add_option("--source", alignOpts.sourcePath, "source taxonomy TSV")->required();
    align->add_option("--target", alignOpts.targetPath, "target taxonomy TSV")->required();
    align->add_option("--constraints", alignOpts.constraints,
                      "pack (ii|ai|ia|aa) or explicit code list, e.g. aie,aio,aab");
    align->add_option("--strength", alignOpts.strengths,
                      "per-code strength override, code=value (repeatable)");
    align->add_option("--delta", alignOpts.deltas, "comma-separated thresholds in (0,1]");
    align->add_option("--epsilon", alignOpts.epsilon, "convergence tolerance");
    align->add_option("--max-iterations", alignOpts.maxIterations, "iteration cap");
    align->add_option("--init", alignOpts.init, "uniform|random")
        ->check(CLI::IsMember({"uniform", "random"}));
    align->add_option("--seed", alignOpts.seed, "seed for --init random");
    align->add_option("--kernel", alignOpts.kernel, "auto|scalar|avx2");
    align->add_option("--out", alignOpts.outDir, "output directory");
    align->add_option("--trace", alignOpts.tracePath, "write per-iteration trace TSV");
    align->add_option("--dump-candidates", alignOpts.dumpCandidatesPath,
                      "write the candidate table TSV");

    EvalOpts evalOpts;
    CLI::App* eval = app.add_subcommand("eval", "coverage and precision/recall against gold");
    eval->add_option("--mapping", evalOpts.mappingPath, "mapping TSV")->required();
    eval->add_option("--gold", evalOpts.goldPath, "gold sample TSV")->required();
    eval->add_option("--source", evalOpts.sourcePath, "source taxonomy TSV")->required();
    eval->add_option("--target", evalOpts.targetPath, "target taxonomy TSV")->required();

    CompareOpts compareOpts;
    CLI::App* compare = app.add_subcommand("compare", "agreement and ambiguity of two mappings");
    compare->add_option("--left", compareOpts.leftPath, "mapping TSV (reference side)")
        ->required();
    compare->add_option("--right", compareOpts.rightPath, "mapping TSV")->required();
    compare->add_option("--groups", compareOpts.groupsPath, "source id -> group TSV");
    compare->add_option("--source", compareOpts.sourcePath,
                        "source taxonomy TSV (enables candidate-based split)");
    compare->add_option("--target", compareOpts.targetPath, "target taxonomy TSV");

    ConvertOpts convertOpts;
    CLI::App* convert = app.add_subcommand("convert", "variant-level mapping to synset level");
    convert->add_option("--sense-mapping", convertOpts.senseMappingPath, "variant mapping TSV")
        ->required();
    convert->add_option("--source-index", convertOpts.sourceIndexPath, "variant->synset TSV")
        ->required();
    convert->add_option("--target-index", convertOpts.targetIndexPath, "variant->synset TSV")
        ->required();
    convert->add_option("--out", convertOpts.outPath, "output mapping TSV")->required();

    SynthOpts synthOpts;
    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic taxonomy pair + gold");
    synth->add_option("--nodes", synthOpts.params.nodes, "node count");
    synth->add_option("--branching", synthOpts.params.branching, "max children per node");
    synth->add_option("--inject", synthOpts.params.injectionRate, "ambiguous-word injection rate");
    synth->add_option("--cluster-size", synthOpts.params.clusterSize,
                      "nodes sharing one injected word");
    synth->add_option("--perturb", synthOpts.params.perturbationRate,
                      "structural perturbation rate");
    synth->add_option("--dag-rate", synthOpts.params.dagRate, "extra-hypernym probability");
    synth->add_option("--seed", synthOpts.params.seed, "generator seed");
    synth->add_option("--out", synthOpts.outDir, "output directory");
    synth->add_option("--prefix", synthOpts.prefix, "output file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*align) return runAlign(global, alignOpts);
        if (*eval) return runEval(global, evalOpts);
        if (*compare) return runCompare(global, compareOpts);
        if (*convert) return runConvert(global, convertOpts);
        if (*synth) return runSynth(global, synthOpts);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
