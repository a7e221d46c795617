#include "taxalign/taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace taxalign {

std::uint32_t Taxonomy::denseOf(const SynsetId& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? kNoNode : it->second;
}

std::uint32_t Taxonomy::require(const SynsetId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown synset id: " + id);
    return it->second;
}

std::span<const std::uint32_t> Taxonomy::withLemma(const std::string& lemma) const {
    static const std::vector<std::uint32_t> kEmpty;
    auto it = lemmaIndex_.find(lemma);
    return it == lemmaIndex_.end() ? std::span<const std::uint32_t>(kEmpty)
                                   : std::span<const std::uint32_t>(it->second);
}

const std::vector<std::uint32_t>& Taxonomy::closure(std::uint32_t dense,
                                                    const std::vector<std::vector<std::uint32_t>>& adj,
                                                    ClosureCache& cache) const {
    if (cache.ready[dense]) return cache.sets[dense];
    std::lock_guard<std::mutex> lock(cache.fill);
    if (cache.ready[dense]) return cache.sets[dense];

    // Iterative DFS over the (acyclic) relation, collecting every reachable
    // node except the start.
    std::vector<char> seen(ids_.size(), 0);
    std::vector<std::uint32_t> stack(adj[dense].begin(), adj[dense].end());
    std::vector<std::uint32_t> out;
    while (!stack.empty()) {
        std::uint32_t n = stack.back();
        stack.pop_back();
        if (seen[n]) continue;
        seen[n] = 1;
        out.push_back(n);
        for (std::uint32_t next : adj[n])
            if (!seen[next]) stack.push_back(next);
    }
    std::sort(out.begin(), out.end());
    cache.sets[dense] = std::move(out);
    cache.ready[dense] = 1;
    return cache.sets[dense];
}

const std::vector<std::uint32_t>& Taxonomy::ancestorsOf(std::uint32_t dense) const {
    return closure(dense, parents_, up_);
}

const std::vector<std::uint32_t>& Taxonomy::descendantsOf(std::uint32_t dense) const {
    return closure(dense, children_, down_);
}

void Taxonomy::precomputeClosures() const {
    for (std::uint32_t n = 0; n < ids_.size(); ++n) {
        ancestorsOf(n);
        descendantsOf(n);
    }
}

namespace {

std::vector<SynsetId> toIds(const Taxonomy& t, std::span<const std::uint32_t> dense) {
    std::vector<SynsetId> out;
    out.reserve(dense.size());
    for (std::uint32_t d : dense) out.push_back(t.idOf(d));
    return out;
}

}  // namespace

std::vector<SynsetId> Taxonomy::immediateHypernyms(const SynsetId& id) const {
    return toIds(*this, parentsOf(require(id)));
}

std::vector<SynsetId> Taxonomy::immediateHyponyms(const SynsetId& id) const {
    return toIds(*this, childrenOf(require(id)));
}

std::vector<SynsetId> Taxonomy::ancestors(const SynsetId& id) const {
    return toIds(*this, ancestorsOf(require(id)));
}

std::vector<SynsetId> Taxonomy::descendants(const SynsetId& id) const {
    return toIds(*this, descendantsOf(require(id)));
}

std::vector<std::string> Taxonomy::words(const SynsetId& id) const {
    auto w = wordsOf(require(id));
    return {w.begin(), w.end()};
}

std::uint64_t Taxonomy::fingerprint() const {
    std::uint64_t h = fnv1a64("taxonomy");
    for (std::uint32_t n = 0; n < ids_.size(); ++n) {
        h = fnv1a64(ids_[n], h);
        for (const auto& w : words_[n]) h = fnv1a64(w, h ^ 0x77);
        for (std::uint32_t p : parents_[n]) h = fnv1a64(ids_[p], h ^ 0x55);
    }
    return h;
}

void TaxonomyBuilder::addSynset(const SynsetId& id, const std::vector<std::string>& lemmas,
                                const std::vector<SynsetId>& hypernyms) {
    if (id.empty()) throw ValidationError("empty synset id");
    if (id.find('\t') != std::string::npos || id.find('\n') != std::string::npos ||
        id.find(',') != std::string::npos)
        throw ValidationError("synset id contains a reserved character: " + id);
    if (seen_.count(id)) throw ValidationError("duplicate synset id: " + id);

    Raw raw;
    for (const auto& lemma : lemmas) {
        std::string norm = normalizeLemma(std::string(trimView(lemma)));
        if (norm.empty()) throw ValidationError("empty lemma in synset " + id);
        raw.lemmas.push_back(std::move(norm));
    }
    std::sort(raw.lemmas.begin(), raw.lemmas.end());
    raw.lemmas.erase(std::unique(raw.lemmas.begin(), raw.lemmas.end()), raw.lemmas.end());
    if (raw.lemmas.empty()) throw ValidationError("synset with zero words: " + id);

    raw.hypernyms = hypernyms;
    std::sort(raw.hypernyms.begin(), raw.hypernyms.end());
    raw.hypernyms.erase(std::unique(raw.hypernyms.begin(), raw.hypernyms.end()),
                        raw.hypernyms.end());

    seen_.emplace(id, synsets_.size());
    synsets_.emplace_back(id, std::move(raw));
}

namespace {

/// Iterative 3-color DFS; on a back edge returns the node ids of one cycle.
void checkAcyclic(const std::vector<std::vector<std::uint32_t>>& parents,
                  const std::vector<SynsetId>& ids) {
    enum : char { White, Gray, Black };
    const std::size_t n = ids.size();
    std::vector<char> color(n, White);
    std::vector<std::uint32_t> parentInDfs(n, kNoNode);

    for (std::uint32_t root = 0; root < n; ++root) {
        if (color[root] != White) continue;
        std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
        color[root] = Gray;
        while (!stack.empty()) {
            auto& [node, edge] = stack.back();
            if (edge < parents[node].size()) {
                std::uint32_t next = parents[node][edge++];
                if (color[next] == Gray) {
                    // Walk the gray chain back from `node` to `next`.
                    std::string cycle = ids[next];
                    for (std::uint32_t at = node; at != next; at = parentInDfs[at])
                        cycle = ids[at] + " -> " + cycle;
                    cycle = ids[next] + " -> " + cycle;
                    throw ValidationError("hypernym cycle detected: " + cycle);
                }
                if (color[next] == White) {
                    color[next] = Gray;
                    parentInDfs[next] = node;
                    stack.emplace_back(next, 0);
                }
            } else {
                color[node] = Black;
                stack.pop_back();
            }
        }
    }
}

}  // namespace

std::shared_ptr<const Taxonomy> TaxonomyBuilder::build(const LoadOptions& opts) {
    auto taxonomy = std::make_shared<Taxonomy>();
    Taxonomy& t = *taxonomy;
    t.role_ = role_;

    t.ids_.reserve(synsets_.size());
    for (const auto& [id, raw] : synsets_) t.ids_.push_back(id);
    std::sort(t.ids_.begin(), t.ids_.end());
    for (std::uint32_t n = 0; n < t.ids_.size(); ++n) t.index_.emplace(t.ids_[n], n);

    const std::size_t n = t.ids_.size();
    t.words_.resize(n);
    t.parents_.resize(n);
    t.children_.resize(n);

    for (auto& [id, raw] : synsets_) {
        const std::uint32_t dense = t.index_.at(id);
        t.words_[dense] = std::move(raw.lemmas);
        for (const SynsetId& hyper : raw.hypernyms) {
            auto it = t.index_.find(hyper);
            if (it == t.index_.end())
                throw ValidationError("synset " + id + " references unknown hypernym: " + hyper);
            if (it->second == dense)
                throw ValidationError("hypernym cycle detected: " + id + " -> " + id);
            t.parents_[dense].push_back(it->second);
        }
        std::sort(t.parents_[dense].begin(), t.parents_[dense].end());
    }
    for (std::uint32_t node = 0; node < n; ++node)
        for (std::uint32_t p : t.parents_[node]) t.children_[p].push_back(node);
    for (auto& ch : t.children_) std::sort(ch.begin(), ch.end());

    checkAcyclic(t.parents_, t.ids_);

    for (std::uint32_t node = 0; node < n; ++node)
        for (const auto& w : t.words_[node]) t.lemmaIndex_[w].push_back(node);

    t.up_.sets.resize(n);
    t.up_.ready.assign(n, 0);
    t.down_.sets.resize(n);
    t.down_.ready.assign(n, 0);
    if (n < opts.closurePrecomputeBound) t.precomputeClosures();

    synsets_.clear();
    seen_.clear();
    return taxonomy;
}

std::shared_ptr<const Taxonomy> loadTaxonomy(const std::string& path, TaxonomyRole role,
                                             const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open taxonomy file: " + path);

    TaxonomyBuilder builder(role);
    std::string line;
    std::size_t lineNo = 0;
    try {
        while (std::getline(in, line)) {
            ++lineNo;
            std::string_view view = line;
            if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
            if (view.empty() || view.front() == '#') continue;

            auto fields = splitView(view, '\t');
            if (fields.size() != 3)
                throw ParseError(path, lineNo,
                                 "expected 3 tab-separated fields, got " +
                                     std::to_string(fields.size()));

            std::string id{trimView(fields[0])};
            std::vector<std::string> lemmas;
            for (auto token : splitView(fields[1], ','))
                lemmas.emplace_back(trimView(token));
            std::vector<SynsetId> hypernyms;
            if (!trimView(fields[2]).empty())
                for (auto token : splitView(fields[2], ','))
                    hypernyms.emplace_back(trimView(token));

            builder.addSynset(id, lemmas, hypernyms);
        }
    } catch (const ValidationError& e) {
        throw ParseError(path, lineNo, e.what());
    }
    return builder.build(opts);
}

void saveTaxonomy(const Taxonomy& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write taxonomy file: " + path);
    out << "# taxalign taxonomy v1\n";
    for (std::uint32_t n = 0; n < t.size(); ++n) {
        out << t.idOf(n) << '\t';
        auto words = t.wordsOf(n);
        for (std::size_t i = 0; i < words.size(); ++i)
            out << (i ? "," : "") << words[i];
        out << '\t';
        auto parents = t.parentsOf(n);
        for (std::size_t i = 0; i < parents.size(); ++i)
            out << (i ? "," : "") << t.idOf(parents[i]);
        out << '\n';
    }
    if (!out) throw IoError("error writing taxonomy file: " + path);
}

}  // namespace taxalign
