#include <doctest.h>

#include <algorithm>
#include <random>

#include "scm/clustering.hpp"
#include "scm/error.hpp"
#include "test_support.hpp"

using namespace scm;

namespace {

// e1..e4 basis words plus antipodes for degenerate-mean cases.
EmbeddingSpace basis_space() {
    return EmbeddingSpace::build(4, {
                                        {"e1", {1, 0, 0, 0}},
                                        {"e2", {0, 1, 0, 0}},
                                        {"e3", {0, 0, 1, 0}},
                                        {"e4", {0, 0, 0, 1}},
                                        {"anti1", {-1, 0, 0, 0}},
                                    });
}

std::vector<std::string> all_words(const GroupCluster& c) {
    std::vector<std::string> out;
    for (const auto& [w, n] : c.kept_words)
        for (int i = 0; i < n; ++i) out.push_back(w);
    out.insert(out.end(), c.discarded_outliers.begin(), c.discarded_outliers.end());
    out.insert(out.end(), c.discarded_demographic.begin(), c.discarded_demographic.end());
    out.insert(out.end(), c.unresolved.begin(), c.unresolved.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("apply_stoplist removes case-insensitively and keeps the removals") {
    auto [kept, removed] = apply_stoplist({"black", "angry"}, {"black", "white"});
    CHECK(kept == std::vector<std::string>{"angry"});
    CHECK(removed == std::vector<std::string>{"black"});

    auto [kept2, removed2] = apply_stoplist({"black", "angry"}, {});
    CHECK(kept2 == std::vector<std::string>{"black", "angry"});
    CHECK(removed2.empty());

    auto [kept3, removed3] = apply_stoplist({"White"}, {"white"});
    CHECK(kept3.empty());
    CHECK(removed3 == std::vector<std::string>{"White"});
}

TEST_CASE("filter_outliers discards by cosine distance from a single mean") {
    // oracle by hand: mean of {e1,e1,e1,e4} = (.75,0,0,.25), |m| = sqrt(.625)
    // dist(e1) = 1 - .75/.7906 = .0513, dist(e4) = 1 - .25/.7906 = .6838
    auto space = basis_space();
    auto result = filter_outliers(space, {"e1", "e1", "e1", "e4"}, 0.6);
    CHECK(result.kept == std::vector<std::string>{"e1", "e1", "e1"});
    CHECK(result.discarded == std::vector<std::string>{"e4"});
    CHECK_FALSE(result.degenerate_mean);
}

TEST_CASE("identical words are all kept at distance zero") {
    auto space = basis_space();
    auto result = filter_outliers(space, {"e1", "e1"}, 0.6);
    CHECK(result.kept.size() == 2);
    CHECK(result.discarded.empty());
}

TEST_CASE("threshold 2 keeps everything") {
    auto space = basis_space();
    auto result = filter_outliers(space, {"e1", "anti1", "e2", "e3", "e4"}, 2.0);
    CHECK(result.kept.size() == 5);
    CHECK(result.discarded.empty());
}

TEST_CASE("an antipodal degenerate set keeps everything with a warning") {
    auto space = basis_space();
    auto result = filter_outliers(space, {"e1", "anti1"}, 0.6);
    CHECK(result.degenerate_mean);
    CHECK(result.kept.size() == 2);
    CHECK(result.discarded.empty());
}

TEST_CASE("unresolved words are split out") {
    auto space = basis_space();
    auto result = filter_outliers(space, {"e1", "mystery"}, 0.6);
    CHECK(result.kept == std::vector<std::string>{"e1"});
    CHECK(result.unresolved == std::vector<std::string>{"mystery"});
    CHECK_THROWS_AS(filter_outliers(space, {"mystery"}, 0.6), Error);
}

TEST_CASE("re-filtering the kept set against its original mean is idempotent") {
    auto space = basis_space();
    auto first = filter_outliers(space, {"e1", "e1", "e1", "e4"}, 0.6);
    // the kept set re-filtered: distances to ITS original mean can only be
    // asserted through the original call; single-pass means the pass itself
    // never re-evaluates, so kept words re-run with the same mean stay kept.
    auto again = filter_outliers(space, first.kept, 0.6);
    CHECK(again.kept.size() == first.kept.size());
    CHECK(again.discarded.empty());
}

TEST_CASE("summarize_group runs the full pipeline and partitions its input") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<std::string> words = {"big", "big", "hot", "down", "Side", "ghostword"};
    auto cluster = summarize_group(space, sub, "sample", words, {"side"}, 1.9);

    CHECK(cluster.discarded_demographic == std::vector<std::string>{"side"});
    CHECK(cluster.unresolved == std::vector<std::string>{"ghostword"});
    auto partition = all_words(cluster);
    std::vector<std::string> expected = {"big", "big", "down", "ghostword", "hot", "side"};
    CHECK(partition == expected);
}

TEST_CASE("a singleton cluster is its own representative and mean") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    auto cluster = summarize_group(space, sub, "solo", {"hot"}, {}, 0.6);
    CHECK(cluster.representative == "hot");
    CHECK(cluster.kept_words ==
          std::vector<std::pair<std::string, int>>{{"hot", 1}});
    CHECK(cluster.mean_point.warmth == doctest::Approx(0.5));
    CHECK(cluster.quadrant == Quadrant::LC_HW);
}

TEST_CASE("representative minimizes cosine distance, ties break lexicographically") {
    auto space = EmbeddingSpace::build(4, {
                                              {"kind", {1, 0, 0.1, 0}},
                                              {"nice", {1, 0, -0.1, 0}},
                                              {"hot", {1, 0, 0, 0}},
                                              {"cold", {-1, 0, 0, 0}},
                                              {"up", {0, 1, 0, 0}},
                                              {"down", {0, -1, 0, 0}},
                                          });
    SeedSets seeds = scm_test::toy_seeds();
    auto sub = PolarSubspace::build(space, seeds);
    // kind and nice are mirror images around the mean -> equidistant
    auto cluster = summarize_group(space, sub, "tie", {"kind", "nice"}, {}, 1.9);
    CHECK(cluster.representative == "kind");

    // exhaustive check: representative distance is minimal over kept words
    double mean_norm = vecmath::norm(cluster.mean);
    auto dist = [&](const std::string& w) {
        auto v = space.resolve(w);
        REQUIRE(v);
        return 1.0 - vecmath::dot(*v, cluster.mean) / (vecmath::norm(*v) * mean_norm);
    };
    double rep = dist(cluster.representative);
    for (const auto& [w, n] : cluster.kept_words) CHECK(rep <= dist(w) + 1e-12);
}

TEST_CASE("output does not depend on input order") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<std::string> words = {"big", "hot", "up", "side", "big"};
    auto base = summarize_group(space, sub, "order", words, {}, 1.9);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(words.begin(), words.end(), rng);
        auto shuffled = summarize_group(space, sub, "order", words, {}, 1.9);
        CHECK(shuffled.representative == base.representative);
        CHECK(shuffled.kept_words == base.kept_words);
        CHECK(shuffled.mean_point.warmth == doctest::Approx(base.mean_point.warmth));
        CHECK(shuffled.quadrant == base.quadrant);
    }
}

TEST_CASE("all words filtered out is an error") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    CHECK_THROWS_AS(summarize_group(space, sub, "gone", {"hot"}, {"hot"}, 0.6), Error);
    CHECK_THROWS_AS(summarize_group(space, sub, "gone", {"zzz"}, {}, 0.6), Error);
}

TEST_CASE("quadrant fixture: a poor/uneducated style cluster lands in LC-LW") {
    // fixture geometry: words placed deep in the low-warmth/low-competence
    // region, verified through the projection itself
    auto space = EmbeddingSpace::build(4, {
                                              {"hot", {1, 0, 0, 0}},
                                              {"cold", {-1, 0, 0, 0}},
                                              {"up", {0, 1, 0, 0}},
                                              {"down", {0, -1, 0, 0}},
                                              {"poor", {-0.6, -0.7, 0.1, 0}},
                                              {"uneducated", {-0.5, -0.8, -0.1, 0}},
                                          });
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    auto cluster =
        summarize_group(space, sub, "african", {"poor", "poor", "poor", "uneducated"}, {}, 0.6);
    CHECK(cluster.quadrant == Quadrant::LC_LW);
    CHECK(cluster.representative == "poor");
    CHECK(cluster.mean_point.warmth < 0.0);
    CHECK(cluster.mean_point.competence < 0.0);
}
