#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scm/antonymy.hpp"
#include "scm/clustering.hpp"
#include "scm/embedding.hpp"
#include "scm/polar.hpp"

namespace scm {

/// The five mutually exclusive anti-stereotype strategies, in table order.
enum class StrategyLabel {
    DirectAntonym = 0,
    OppositeQuadrant = 1,
    FlipWarmth = 2,
    FlipCompetence = 3,
    SameQuadrant = 4,
};
inline constexpr std::size_t kStrategyCount = 5;

std::string to_string(StrategyLabel s);

/// Geometric label for a (stereotype, anti-stereotype) point pair. The four
/// sign relations partition the plane pair-space, so the result is always
/// exactly one of the non-antonym labels.
StrategyLabel quadrant_strategy(const PolarPoint& stereo, const PolarPoint& anti);

/// Full decision: an antonym match takes priority over geometry.
StrategyLabel classify_strategy(const AntonymResource& res, std::string_view stereotype,
                                std::string_view antistereotype, const PolarPoint& stereo_point,
                                const PolarPoint& anti_point);

struct ClassifiedPair {
    std::string stereotype;
    std::string antistereotype;
    StrategyLabel label;
    PolarPoint stereo_point;
    PolarPoint anti_point;
};

/// Resolve and project both words, then classify. Absent when either word
/// has no representation (callers exclude and count such pairs).
std::optional<ClassifiedPair> classify_pair(const AntonymResource& res,
                                            const EmbeddingSpace& space, const PolarSubspace& sub,
                                            std::string_view stereotype,
                                            std::string_view antistereotype);

/// One tally column: counts per strategy label.
struct StrategyCell {
    std::array<std::size_t, kStrategyCount> counts{};

    std::size_t n() const;
    /// Percentage for one label; absent when the column is empty.
    std::optional<double> percent(StrategyLabel label) const;
};

/// Strategy distribution overall, per stereotype quadrant, and per salient
/// dimension of the stereotype point (salience ties count under warmth).
struct StrategyTable {
    StrategyCell overall;
    std::array<StrategyCell, 4> by_quadrant;   // indexed by Quadrant
    std::array<StrategyCell, 2> by_salience;   // [competence-salient, warmth-salient]
    std::size_t excluded = 0;                  // unresolvable pairs

    static constexpr std::size_t kCompSalient = 0;
    static constexpr std::size_t kWarmthSalient = 1;
};

StrategyTable pairwise_table(const std::vector<ClassifiedPair>& pairs);

/// Group-level classification: the antonym test runs on the two cluster
/// representatives, the geometry on the two cluster means.
struct GroupStrategy {
    std::string target;
    StrategyLabel label;
    PolarPoint stereo_point;   // stereotype cluster mean
    PolarPoint anti_point;     // anti-stereotype cluster mean
    std::string stereo_representative;
    std::string anti_representative;
};

struct GroupLevelResult {
    std::vector<GroupStrategy> groups;
    StrategyTable table;
};

GroupLevelResult group_level_table(const AntonymResource& res,
                                   const std::vector<std::pair<GroupCluster, GroupCluster>>& sides);

}  // namespace scm
