#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taxalign {

/// Input file could not be parsed. `line` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::size_t line, const std::string& what)
        : std::runtime_error(line > 0 ? file + ":" + std::to_string(line) + ": " + what
                                      : file + ": " + what),
          file_(std::move(file)), line_(line) {}

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

/// Structurally invalid data (dangling reference, cycle, duplicate id, ...).
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad configuration value (unknown constraint code, delta out of range, ...).
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<std::string_view> splitView(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::string_view trimView(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

/// Canonical lemma form: ASCII lowercase, internal spaces replaced by '_'.
inline std::string normalizeLemma(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (c == ' ') c = '_';
        out.push_back(c);
    }
    return out;
}

inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string toHex(std::uint64_t v);

/// Small deterministic PRNG (splitmix64). Used instead of <random> engines
/// where byte-reproducible output across standard libraries matters.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }
};

/// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per worker.
/// threads <= 1 degenerates to a direct call. Chunk boundaries are a pure
/// function of (n, threads), so writes to disjoint slots stay deterministic.
void parallelFor(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace taxalign
