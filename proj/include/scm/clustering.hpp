#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scm/embedding.hpp"
#include "scm/polar.hpp"

namespace scm {

/// Case-insensitive exact-match removal; removed words are preserved for
/// the report. Order and multiplicity are kept.
std::pair<std::vector<std::string>, std::vector<std::string>> apply_stoplist(
    const std::vector<std::string>& words, const std::vector<std::string>& stoplist);

struct OutlierFilterResult {
    std::vector<std::string> kept;
    std::vector<std::string> discarded;
    std::vector<std::string> unresolved;
    bool degenerate_mean = false;  // zero-norm mean: everything kept, warning
};

/// Single-pass cosine-distance filter: the mean of all resolved vectors is
/// computed once, then words farther than `threshold` from it are dropped.
/// The mean is never recomputed during the pass.
OutlierFilterResult filter_outliers(const EmbeddingSpace& space,
                                    const std::vector<std::string>& words,
                                    double threshold = 0.6);

/// A target group's filtered word cluster with its polar placement.
/// kept ∪ discarded_outliers ∪ discarded_demographic ∪ unresolved
/// partitions the input multiset.
struct GroupCluster {
    std::string target;
    std::vector<std::pair<std::string, int>> kept_words;  // ranked by distance to mean
    std::vector<std::string> discarded_outliers;
    std::vector<std::string> discarded_demographic;
    std::vector<std::string> unresolved;
    Vector mean;                    // frequency-weighted, post-filter
    PolarPoint mean_point;
    Quadrant quadrant = Quadrant::HC_HW;
    std::string representative;     // kept word closest to the mean

    std::size_t kept_count() const;
};

/// resolve -> stoplist -> outlier filter -> mean -> project -> classify.
/// The representative is the kept word with minimal cosine distance to the
/// post-filter mean, ties broken lexicographically. Throws when every word
/// is filtered out.
GroupCluster summarize_group(const EmbeddingSpace& space, const PolarSubspace& sub,
                             const std::string& target, const std::vector<std::string>& words,
                             const std::vector<std::string>& stoplist, double threshold = 0.6);

}  // namespace scm
