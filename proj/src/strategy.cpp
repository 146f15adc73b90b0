#include "scm/strategy.hpp"

#include "scm/error.hpp"

namespace scm {

std::string to_string(StrategyLabel s) {
    switch (s) {
        case StrategyLabel::DirectAntonym: return "direct-antonym";
        case StrategyLabel::OppositeQuadrant: return "opposite-quadrant";
        case StrategyLabel::FlipWarmth: return "flip-warmth";
        case StrategyLabel::FlipCompetence: return "flip-competence";
        case StrategyLabel::SameQuadrant: return "same-quadrant";
    }
    return {};
}

StrategyLabel quadrant_strategy(const PolarPoint& stereo, const PolarPoint& anti) {
    bool warmth_differs = (stereo.warmth > 0.0) != (anti.warmth > 0.0);
    bool comp_differs = (stereo.competence > 0.0) != (anti.competence > 0.0);
    if (warmth_differs && comp_differs) return StrategyLabel::OppositeQuadrant;
    if (warmth_differs) return StrategyLabel::FlipWarmth;
    if (comp_differs) return StrategyLabel::FlipCompetence;
    return StrategyLabel::SameQuadrant;
}

StrategyLabel classify_strategy(const AntonymResource& res, std::string_view stereotype,
                                std::string_view antistereotype, const PolarPoint& stereo_point,
                                const PolarPoint& anti_point) {
    if (res.is_antonym_match(stereotype, antistereotype)) return StrategyLabel::DirectAntonym;
    return quadrant_strategy(stereo_point, anti_point);
}

std::optional<ClassifiedPair> classify_pair(const AntonymResource& res,
                                            const EmbeddingSpace& space, const PolarSubspace& sub,
                                            std::string_view stereotype,
                                            std::string_view antistereotype) {
    auto sv = space.resolve(stereotype);
    auto av = space.resolve(antistereotype);
    if (!sv || !av) return std::nullopt;
    ClassifiedPair out;
    out.stereotype = std::string(stereotype);
    out.antistereotype = std::string(antistereotype);
    out.stereo_point = sub.project(*sv);
    out.anti_point = sub.project(*av);
    out.label = classify_strategy(res, stereotype, antistereotype, out.stereo_point, out.anti_point);
    return out;
}

std::size_t StrategyCell::n() const {
    std::size_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::optional<double> StrategyCell::percent(StrategyLabel label) const {
    std::size_t total = n();
    if (total == 0) return std::nullopt;
    return 100.0 * static_cast<double>(counts[static_cast<std::size_t>(label)]) /
           static_cast<double>(total);
}

namespace {

void tally(StrategyTable& table, StrategyLabel label, const PolarPoint& stereo_point) {
    auto idx = static_cast<std::size_t>(label);
    PointClass pc = classify_point(stereo_point);
    table.overall.counts[idx] += 1;
    table.by_quadrant[static_cast<std::size_t>(pc.quadrant)].counts[idx] += 1;
    std::size_t column = pc.salient == Dimension::Competence ? StrategyTable::kCompSalient
                                                             : StrategyTable::kWarmthSalient;
    table.by_salience[column].counts[idx] += 1;
}

}  // namespace

StrategyTable pairwise_table(const std::vector<ClassifiedPair>& pairs) {
    StrategyTable table;
    for (const auto& pair : pairs) tally(table, pair.label, pair.stereo_point);
    return table;
}

GroupLevelResult group_level_table(
    const AntonymResource& res,
    const std::vector<std::pair<GroupCluster, GroupCluster>>& sides) {
    GroupLevelResult result;
    for (const auto& [stereo_cluster, anti_cluster] : sides) {
        GroupStrategy g;
        g.target = stereo_cluster.target;
        g.stereo_point = stereo_cluster.mean_point;
        g.anti_point = anti_cluster.mean_point;
        g.stereo_representative = stereo_cluster.representative;
        g.anti_representative = anti_cluster.representative;
        g.label = classify_strategy(res, g.stereo_representative, g.anti_representative,
                                    g.stereo_point, g.anti_point);
        tally(result.table, g.label, g.stereo_point);
        result.groups.push_back(std::move(g));
    }
    return result;
}

}  // namespace scm
