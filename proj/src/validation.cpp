#include "scm/validation.hpp"

#include "scm/error.hpp"

namespace scm {

Polarity predict_polarity(const PolarSubspace& sub, const EmbeddingSpace& space,
                          const LexiconEntry& entry) {
    auto v = space.resolve(entry.word);
    if (!v) throw Error("predict_polarity: '" + entry.word + "' is not in the vocabulary");
    PolarPoint p = sub.project(*v);
    double coord = entry.dimension == Dimension::Warmth ? p.warmth : p.competence;
    return coord > 0.0 ? Polarity::Positive : Polarity::Negative;
}

AccuracyReport evaluate_lexicon(const PolarSubspace& sub, const EmbeddingSpace& space,
                                const std::vector<LexiconEntry>& validation_entries) {
    AccuracyReport report;
    std::size_t warmth_correct = 0, comp_correct = 0;
    std::map<std::string, std::size_t> facet_correct;

    for (const auto& entry : validation_entries) {
        auto v = space.resolve(entry.word);
        if (!v) {
            ++report.skipped;
            continue;
        }
        PolarPoint p = sub.project(*v);
        double coord = entry.dimension == Dimension::Warmth ? p.warmth : p.competence;
        Polarity predicted = coord > 0.0 ? Polarity::Positive : Polarity::Negative;
        bool correct = predicted == entry.polarity;

        std::string facet = to_string(entry.facet);
        ++report.facet_n[facet];
        if (correct) ++facet_correct[facet];

        if (entry.dimension == Dimension::Warmth) {
            ++report.warmth_n;
            if (correct) ++warmth_correct;
        } else {
            ++report.competence_n;
            if (correct) ++comp_correct;
        }
    }

    if (report.warmth_n == 0) throw Error("evaluate_lexicon: no warmth-dimension entries");
    if (report.competence_n == 0) throw Error("evaluate_lexicon: no competence-dimension entries");

    report.warmth_accuracy = 100.0 * static_cast<double>(warmth_correct) /
                             static_cast<double>(report.warmth_n);
    report.competence_accuracy = 100.0 * static_cast<double>(comp_correct) /
                                 static_cast<double>(report.competence_n);
    for (const auto& [facet, n] : report.facet_n)
        report.per_facet[facet] = 100.0 * static_cast<double>(facet_correct[facet]) /
                                  static_cast<double>(n);
    return report;
}

}  // namespace scm
