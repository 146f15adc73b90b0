#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scm/vecmath.hpp"

namespace scm {

/// Immutable vocabulary of unit word vectors. Tokens are case-folded on
/// ingest and every stored vector is normalized to unit length, so cosine
/// arithmetic downstream is scale-free. Safe for concurrent reads.
class EmbeddingSpace {
public:
    /// Build from explicit (token, vector) entries. Vectors are normalized;
    /// zero-norm entries and tokens with internal whitespace are rejected.
    /// Duplicate tokens (after case folding) keep the first occurrence.
    static EmbeddingSpace build(std::size_t dim,
                                const std::vector<std::pair<std::string, Vector>>& entries,
                                std::string source_tag = "");

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return tokens_.size(); }
    const std::string& source_tag() const { return source_tag_; }
    const std::vector<std::string>& tokens() const { return tokens_; }

    bool contains(std::string_view token) const;

    /// Case-folds the token and returns its stored unit vector, or absent.
    /// Never synthesizes vectors for out-of-vocabulary tokens.
    std::optional<Vector> lookup(std::string_view token) const;

    /// Splits on whitespace and hyphens, averages the unit vectors of all
    /// in-vocabulary parts and renormalizes. Absent if no part is known or
    /// the parts cancel to a zero-norm mean.
    std::optional<Vector> phrase_vector(std::string_view phrase) const;

    /// lookup() with phrase_vector() as the fallback for multi-word terms.
    std::optional<Vector> resolve(std::string_view term) const;

    struct MeanResult {
        Vector mean;                           // not renormalized
        std::vector<std::string> unresolved;   // tokens that did not resolve
        std::size_t resolved_count = 0;
    };

    /// Arithmetic mean of the resolved vectors; duplicates in the input
    /// contribute once per occurrence. Throws scm::Error when nothing
    /// resolves.
    MeanResult mean_vector(const std::vector<std::string>& tokens) const;

private:
    std::size_t dim_ = 0;
    std::string source_tag_;
    std::vector<std::string> tokens_;           // insertion order
    std::vector<float> data_;                   // row-major, tokens_.size() x dim_
    std::unordered_map<std::string, std::size_t> index_;

    Vector row(std::size_t i) const;
    friend struct EmbeddingLoader;
};

struct LoadOptions {
    std::optional<std::size_t> limit;
    double bad_line_budget_fraction = 0.001;  // of scanned data lines
    std::string source_tag;                   // defaults to the file stem
};

struct LoadReport {
    std::size_t lines_scanned = 0;
    std::size_t loaded = 0;
    std::size_t malformed = 0;       // wrong field count / unparsable number
    std::size_t zero_norm = 0;       // skipped with warning
    std::size_t duplicates = 0;      // later occurrences dropped
    std::size_t bad_line_budget = 0;
    bool header_present = false;
};

struct LoadResult {
    EmbeddingSpace space;
    LoadReport report;
};

/// Load word2vec text format (header "V d") or headerless GloVe-style text,
/// auto-detected from the first line. Malformed lines are skipped and
/// counted; exceeding the bad-line budget is an error.
LoadResult load_embeddings(const std::string& path, const LoadOptions& options = {});

}  // namespace scm
