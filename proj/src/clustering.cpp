#include "scm/clustering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scm/error.hpp"
#include "scm/text.hpp"

namespace scm {

std::pair<std::vector<std::string>, std::vector<std::string>> apply_stoplist(
    const std::vector<std::string>& words, const std::vector<std::string>& stoplist) {
    std::set<std::string> stop;
    for (const auto& s : stoplist) stop.insert(text::fold_case(text::trim(s)));
    std::vector<std::string> kept, removed;
    for (const auto& w : words) {
        if (stop.count(text::fold_case(w))) removed.push_back(w);
        else kept.push_back(w);
    }
    return {std::move(kept), std::move(removed)};
}

namespace {

struct ResolvedWord {
    std::string word;
    Vector vec;
};

// Resolve each word once; multiplicity tracked by repeating entries.
void resolve_words(const EmbeddingSpace& space, const std::vector<std::string>& words,
                   std::vector<ResolvedWord>& resolved, std::vector<std::string>& unresolved) {
    std::map<std::string, std::optional<Vector>> cache;
    for (const auto& w : words) {
        std::string folded = text::fold_case(text::trim(w));
        auto it = cache.find(folded);
        if (it == cache.end()) it = cache.emplace(folded, space.resolve(folded)).first;
        if (it->second) resolved.push_back({folded, *it->second});
        else unresolved.push_back(folded);
    }
}

Vector frequency_mean(const std::vector<ResolvedWord>& resolved, std::size_t dim) {
    Vector mean(dim, 0.0);
    for (const auto& r : resolved) vecmath::add_in_place(mean, r.vec);
    vecmath::scale_in_place(mean, 1.0 / static_cast<double>(resolved.size()));
    return mean;
}

double distance_to_mean(const Vector& v, const Vector& mean, double mean_norm) {
    if (mean_norm < 1e-12) return 1.0;  // degenerate mean: no preferred direction
    return 1.0 - vecmath::dot(v, mean) / (vecmath::norm(v) * mean_norm);
}

}  // namespace

OutlierFilterResult filter_outliers(const EmbeddingSpace& space,
                                    const std::vector<std::string>& words, double threshold) {
    OutlierFilterResult result;
    std::vector<ResolvedWord> resolved;
    resolve_words(space, words, resolved, result.unresolved);
    if (resolved.empty()) throw Error("filter_outliers: no resolvable word");

    Vector mean = frequency_mean(resolved, space.dim());
    double mean_norm = vecmath::norm(mean);
    if (mean_norm < 1e-12) {
        // Antipodal degenerate set: keep everything, flag it.
        result.degenerate_mean = true;
        for (const auto& r : resolved) result.kept.push_back(r.word);
        return result;
    }
    for (const auto& r : resolved) {
        double dist = distance_to_mean(r.vec, mean, mean_norm);
        if (dist > threshold) result.discarded.push_back(r.word);
        else result.kept.push_back(r.word);
    }
    return result;
}

std::size_t GroupCluster::kept_count() const {
    std::size_t n = 0;
    for (const auto& [word, count] : kept_words) n += static_cast<std::size_t>(count);
    return n;
}

GroupCluster summarize_group(const EmbeddingSpace& space, const PolarSubspace& sub,
                             const std::string& target, const std::vector<std::string>& words,
                             const std::vector<std::string>& stoplist, double threshold) {
    GroupCluster cluster;
    cluster.target = target;

    // resolve
    std::vector<ResolvedWord> resolved;
    resolve_words(space, words, resolved, cluster.unresolved);

    // stoplist
    std::vector<std::string> resolved_names;
    resolved_names.reserve(resolved.size());
    for (const auto& r : resolved) resolved_names.push_back(r.word);
    auto stop_result = apply_stoplist(resolved_names, stoplist);
    cluster.discarded_demographic = std::move(stop_result.second);

    std::vector<ResolvedWord> survivors;
    {
        std::set<std::string> stop(cluster.discarded_demographic.begin(),
                                   cluster.discarded_demographic.end());
        for (auto& r : resolved)
            if (!stop.count(r.word)) survivors.push_back(std::move(r));
    }
    if (survivors.empty()) throw Error("summarize_group('" + target + "'): no words survive filtering");

    // single-pass outlier filter
    Vector filter_mean = frequency_mean(survivors, space.dim());
    double filter_mean_norm = vecmath::norm(filter_mean);
    std::vector<ResolvedWord> kept;
    if (filter_mean_norm < 1e-12) {
        kept = std::move(survivors);
    } else {
        for (auto& r : survivors) {
            if (distance_to_mean(r.vec, filter_mean, filter_mean_norm) > threshold)
                cluster.discarded_outliers.push_back(r.word);
            else
                kept.push_back(std::move(r));
        }
    }
    if (kept.empty()) throw Error("summarize_group('" + target + "'): all words filtered out");

    // mean -> project -> classify (frequency-weighted post-filter mean)
    cluster.mean = frequency_mean(kept, space.dim());
    cluster.mean_point = sub.project(cluster.mean);
    cluster.quadrant = classify_point(cluster.mean_point).quadrant;

    // rank distinct kept words by distance to the post-filter mean
    double mean_norm = vecmath::norm(cluster.mean);
    std::map<std::string, int> counts;
    std::map<std::string, double> distance;
    for (const auto& r : kept) {
        if (!counts.count(r.word)) distance[r.word] = distance_to_mean(r.vec, cluster.mean, mean_norm);
        counts[r.word] += 1;
    }
    cluster.kept_words.assign(counts.begin(), counts.end());
    std::sort(cluster.kept_words.begin(), cluster.kept_words.end(),
              [&](const auto& a, const auto& b) {
                  double da = distance.at(a.first), db = distance.at(b.first);
                  if (da != db) return da < db;
                  return a.first < b.first;
              });
    cluster.representative = cluster.kept_words.front().first;
    return cluster;
}

}  // namespace scm
