#include <doctest.h>

#include <algorithm>
#include <random>

#include "scm/error.hpp"
#include "scm/validation.hpp"
#include "test_support.hpp"

using namespace scm;

namespace {

LexiconEntry entry(const std::string& word, Dimension dim, Polarity pol) {
    Facet facet = dim == Dimension::Warmth ? Facet::Sociability : Facet::Ability;
    return {word, dim, facet, pol, Tier::Extended};
}

}  // namespace

TEST_CASE("predict_polarity reads the sign of the projected coordinate") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());

    CHECK(predict_polarity(sub, space, entry("hot", Dimension::Warmth, Polarity::Positive)) ==
          Polarity::Positive);
    CHECK(predict_polarity(sub, space, entry("cold", Dimension::Warmth, Polarity::Negative)) ==
          Polarity::Negative);
    // warmth coordinate is exactly zero -> negative by the zero rule
    CHECK(predict_polarity(sub, space, entry("up", Dimension::Warmth, Polarity::Positive)) ==
          Polarity::Negative);
    CHECK_THROWS_AS(predict_polarity(sub, space, entry("zzz", Dimension::Warmth, Polarity::Positive)),
                    Error);
}

TEST_CASE("perfectly separated fixture scores 100 in both dimensions") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<LexiconEntry> entries = {
        entry("hot", Dimension::Warmth, Polarity::Positive),
        entry("cold", Dimension::Warmth, Polarity::Negative),
        entry("up", Dimension::Competence, Polarity::Positive),
        entry("down", Dimension::Competence, Polarity::Negative),
    };
    auto report = evaluate_lexicon(sub, space, entries);
    CHECK(report.warmth_accuracy == doctest::Approx(100.0));
    CHECK(report.competence_accuracy == doctest::Approx(100.0));
    CHECK(report.warmth_n == 2);
    CHECK(report.competence_n == 2);
    CHECK(report.skipped == 0);
}

TEST_CASE("half-right warmth partition scores 50") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<LexiconEntry> entries = {
        entry("hot", Dimension::Warmth, Polarity::Positive),   // correct
        entry("cold", Dimension::Warmth, Polarity::Positive),  // wrong
        entry("big", Dimension::Warmth, Polarity::Positive),   // correct (warmth 0.3)
        entry("side", Dimension::Warmth, Polarity::Positive),  // wrong (zero -> negative)
        entry("up", Dimension::Competence, Polarity::Positive),
    };
    auto report = evaluate_lexicon(sub, space, entries);
    CHECK(report.warmth_accuracy == doctest::Approx(50.0));
    CHECK(report.warmth_n == 4);
}

TEST_CASE("flipping every gold polarity maps accuracy to its complement") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<LexiconEntry> entries = {
        entry("hot", Dimension::Warmth, Polarity::Positive),
        entry("cold", Dimension::Warmth, Polarity::Positive),
        entry("big", Dimension::Warmth, Polarity::Positive),
        entry("up", Dimension::Competence, Polarity::Positive),
        entry("down", Dimension::Competence, Polarity::Positive),
    };
    auto base = evaluate_lexicon(sub, space, entries);
    for (auto& e : entries)
        e.polarity = e.polarity == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
    auto flipped = evaluate_lexicon(sub, space, entries);
    CHECK(flipped.warmth_accuracy == doctest::Approx(100.0 - base.warmth_accuracy).epsilon(1e-9));
    CHECK(flipped.competence_accuracy ==
          doctest::Approx(100.0 - base.competence_accuracy).epsilon(1e-9));
}

TEST_CASE("accuracy is invariant under shuffling") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<LexiconEntry> entries = {
        entry("hot", Dimension::Warmth, Polarity::Positive),
        entry("cold", Dimension::Warmth, Polarity::Negative),
        entry("big", Dimension::Warmth, Polarity::Positive),
        entry("up", Dimension::Competence, Polarity::Positive),
        entry("down", Dimension::Competence, Polarity::Negative),
        entry("side", Dimension::Competence, Polarity::Negative),
    };
    auto base = evaluate_lexicon(sub, space, entries);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(entries.begin(), entries.end(), rng);
        auto shuffled = evaluate_lexicon(sub, space, entries);
        CHECK(shuffled.warmth_accuracy == doctest::Approx(base.warmth_accuracy));
        CHECK(shuffled.competence_accuracy == doctest::Approx(base.competence_accuracy));
    }
}

TEST_CASE("skipped plus evaluated covers the input") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<LexiconEntry> entries = {
        entry("hot", Dimension::Warmth, Polarity::Positive),
        entry("ghost", Dimension::Warmth, Polarity::Positive),  // OOV -> skipped
        entry("up", Dimension::Competence, Polarity::Positive),
    };
    auto report = evaluate_lexicon(sub, space, entries);
    CHECK(report.warmth_n + report.competence_n + report.skipped == entries.size());
    CHECK(report.skipped == 1);
}

TEST_CASE("per-facet breakdown is reported") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<LexiconEntry> entries = {
        {"hot", Dimension::Warmth, Facet::Sociability, Polarity::Positive, Tier::Extended},
        {"cold", Dimension::Warmth, Facet::Morality, Polarity::Positive, Tier::Extended},
        {"up", Dimension::Competence, Facet::Ability, Polarity::Positive, Tier::Extended},
    };
    auto report = evaluate_lexicon(sub, space, entries);
    CHECK(report.per_facet.at("sociability") == doctest::Approx(100.0));
    CHECK(report.per_facet.at("morality") == doctest::Approx(0.0));
    CHECK(report.per_facet.at("ability") == doctest::Approx(100.0));
}

TEST_CASE("an empty dimension partition is an error") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    std::vector<LexiconEntry> entries = {entry("hot", Dimension::Warmth, Polarity::Positive)};
    CHECK_THROWS_AS(evaluate_lexicon(sub, space, entries), Error);
}
