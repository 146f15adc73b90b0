#pragma once

#include <string>

#include "scm/antonymy.hpp"
#include "scm/clustering.hpp"
#include "scm/embedding.hpp"
#include "scm/polar.hpp"

namespace scm {

/// The X-but-Y selection over a cluster: X is the kept word extremal on the
/// cluster's positive axis, Y the kept word extremal (minimal) on the other
/// axis.
struct XButYSelection {
    std::string x_word;
    std::string y_word;
    bool ambivalent = false;        // cluster mean in LC-HW or HC-LW
    bool degenerate = false;        // x and y collapse to the same word
    Dimension positive_axis = Dimension::Warmth;   // axis X maximizes
    Dimension deficient_axis = Dimension::Competence;  // axis Y minimizes
};

/// Project each kept word and pick the extremal pair for the cluster's
/// quadrant. Ambivalent quadrants fix the axes (LC-HW: max warmth / min
/// competence; HC-LW: max competence / min warmth); for the uniform
/// quadrants the salient axis of the mean is used and the result is flagged
/// non-ambivalent. Ties break lexicographically. Throws on an empty cluster.
XButYSelection select_x_but_y(const PolarSubspace& sub, const EmbeddingSpace& space,
                              const GroupCluster& cluster);

enum class CounterStatus { Ok, NoAntonym, Degenerate };

/// A rendered counter-stereotype for one target group.
struct CounterStereotype {
    std::string target;
    std::string x_word;
    std::string y_word;
    std::string x_but_y;       // "X but Y"
    std::string neg_antonym;   // chosen antonym of the negative aspect
    std::string counter;       // "X and <neg_antonym>"; empty unless status == Ok
    bool ambivalent = false;
    bool fallback_antonym = false;  // no candidate passed the positivity check
    CounterStatus status = CounterStatus::Ok;

    /// CSV status token: base status plus "+fallback-antonym" /
    /// "+non-ambivalent" qualifiers.
    std::string status_string() const;
};

/// Choose the antonym of the negative aspect: the lexicographically
/// smallest member of antonym_set(y_word) whose own projection lies on the
/// positive side of the deficient axis; falls back to the smallest antonym
/// overall (flagged) when none passes. No antonym at all leaves the counter
/// unrendered.
CounterStereotype generate_counter(const AntonymResource& res, const EmbeddingSpace& space,
                                   const PolarSubspace& sub, const GroupCluster& cluster,
                                   const XButYSelection& selection);

}  // namespace scm
