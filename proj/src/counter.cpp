#include "scm/counter.hpp"

#include <cmath>
#include <map>

#include "scm/error.hpp"

namespace scm {

namespace {

double axis_coord(const PolarPoint& p, Dimension axis) {
    return axis == Dimension::Warmth ? p.warmth : p.competence;
}

}  // namespace

XButYSelection select_x_but_y(const PolarSubspace& sub, const EmbeddingSpace& space,
                              const GroupCluster& cluster) {
    if (cluster.kept_words.empty()) throw Error("select_x_but_y: empty cluster");

    // Project each distinct kept word.
    std::map<std::string, PolarPoint> points;
    for (const auto& [word, count] : cluster.kept_words) {
        auto v = space.resolve(word);
        if (!v) throw Error("select_x_but_y: kept word '" + word + "' no longer resolves");
        points.emplace(word, sub.project(*v));
    }

    XButYSelection sel;
    switch (cluster.quadrant) {
        case Quadrant::LC_HW:
            sel.ambivalent = true;
            sel.positive_axis = Dimension::Warmth;
            sel.deficient_axis = Dimension::Competence;
            break;
        case Quadrant::HC_LW:
            sel.ambivalent = true;
            sel.positive_axis = Dimension::Competence;
            sel.deficient_axis = Dimension::Warmth;
            break;
        case Quadrant::HC_HW:
        case Quadrant::LC_LW: {
            // Uniform quadrant: use the mean's larger-magnitude axis.
            sel.ambivalent = false;
            bool warmth_salient =
                std::abs(cluster.mean_point.warmth) >= std::abs(cluster.mean_point.competence);
            sel.positive_axis = warmth_salient ? Dimension::Warmth : Dimension::Competence;
            sel.deficient_axis = warmth_salient ? Dimension::Competence : Dimension::Warmth;
            break;
        }
    }

    // X maximizes the positive axis, Y minimizes the other; lexicographic
    // tie-breaks keep the output deterministic.
    for (const auto& [word, p] : points) {
        double px = axis_coord(p, sel.positive_axis);
        double py = axis_coord(p, sel.deficient_axis);
        if (sel.x_word.empty() || px > axis_coord(points.at(sel.x_word), sel.positive_axis))
            sel.x_word = word;
        if (sel.y_word.empty() || py < axis_coord(points.at(sel.y_word), sel.deficient_axis))
            sel.y_word = word;
    }
    sel.degenerate = sel.x_word == sel.y_word;
    return sel;
}

std::string CounterStereotype::status_string() const {
    std::string base;
    switch (status) {
        case CounterStatus::Ok: base = "ok"; break;
        case CounterStatus::NoAntonym: base = "no-antonym"; break;
        case CounterStatus::Degenerate: base = "degenerate"; break;
    }
    if (fallback_antonym) base += "+fallback-antonym";
    if (!ambivalent && status != CounterStatus::Degenerate) base += "+non-ambivalent";
    return base;
}

CounterStereotype generate_counter(const AntonymResource& res, const EmbeddingSpace& space,
                                   const PolarSubspace& sub, const GroupCluster& cluster,
                                   const XButYSelection& selection) {
    CounterStereotype out;
    out.target = cluster.target;
    out.x_word = selection.x_word;
    out.y_word = selection.y_word;
    out.ambivalent = selection.ambivalent;
    out.x_but_y = selection.x_word + " but " + selection.y_word;

    if (selection.degenerate) {
        out.status = CounterStatus::Degenerate;
        return out;
    }

    auto antonyms = res.antonym_set(selection.y_word);
    // Synonym expansion can route back to the word itself; never counter a
    // word with itself.
    antonyms.erase(selection.y_word);
    if (antonyms.empty()) {
        out.status = CounterStatus::NoAntonym;
        return out;
    }

    // Prefer antonyms that actually land on the positive side of the
    // deficient axis; sets iterate in order, so the first hit is the
    // lexicographically smallest.
    for (const auto& candidate : antonyms) {
        auto v = space.resolve(candidate);
        if (!v) continue;
        PolarPoint p = sub.project(*v);
        double coord = selection.deficient_axis == Dimension::Warmth ? p.warmth : p.competence;
        if (coord > 0.0) {
            out.neg_antonym = candidate;
            break;
        }
    }
    if (out.neg_antonym.empty()) {
        out.neg_antonym = *antonyms.begin();
        out.fallback_antonym = true;
    }
    out.counter = selection.x_word + " and " + out.neg_antonym;
    out.status = CounterStatus::Ok;
    return out;
}

}  // namespace scm
