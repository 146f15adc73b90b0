#pragma once

#include <map>
#include <string>
#include <vector>

#include "scm/embedding.hpp"
#include "scm/lexicon.hpp"
#include "scm/polar.hpp"

namespace scm {

/// Per-dimension accuracy of sign prediction against the labeled lexicon.
struct AccuracyReport {
    double warmth_accuracy = 0.0;       // percent
    double competence_accuracy = 0.0;   // percent
    std::size_t warmth_n = 0;
    std::size_t competence_n = 0;
    std::map<std::string, double> per_facet;       // facet name -> percent
    std::map<std::string, std::size_t> facet_n;
    std::size_t skipped = 0;            // entries with no representation
};

/// Projects the entry's word and reads the sign of the coordinate for the
/// entry's dimension (> 0 is positive; 0 classifies as negative). Throws on
/// an out-of-vocabulary word.
Polarity predict_polarity(const PolarSubspace& sub, const EmbeddingSpace& space,
                          const LexiconEntry& entry);

/// Accuracy over warmth- and competence-dimension entries, evaluated
/// separately, with a per-facet breakdown. Entries that fail to resolve are
/// skipped and counted. Throws if either dimension partition is empty.
AccuracyReport evaluate_lexicon(const PolarSubspace& sub, const EmbeddingSpace& space,
                                const std::vector<LexiconEntry>& validation_entries);

}  // namespace scm
