#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "scm/embedding.hpp"

namespace scm {

enum class Dimension { Warmth, Competence };
enum class Facet { Sociability, Morality, Agency, Ability };
enum class Polarity { Positive, Negative };
enum class Tier { Seed, Extended };

std::string to_string(Dimension d);
std::string to_string(Facet f);
std::string to_string(Polarity p);
std::string to_string(Tier t);

/// The dimension a facet belongs to: sociability/morality sit under warmth,
/// agency/ability under competence.
Dimension facet_dimension(Facet f);

struct LexiconEntry {
    std::string word;  // case-folded
    Dimension dimension;
    Facet facet;
    Polarity polarity;
    Tier tier;

    bool operator==(const LexiconEntry&) const = default;
};

struct ParsedLexicon {
    std::vector<LexiconEntry> entries;   // first-occurrence order
    std::size_t duplicates_collapsed = 0;  // extra rows merged by majority vote
    std::size_t ties_dropped = 0;          // (word, dimension) groups with tied polarity
};

/// Parse the lexicon CSV (`word,dimension,facet,polarity,tier`). Duplicate
/// (word, dimension) rows collapse by majority polarity; exact ties are
/// dropped with a warning count.
ParsedLexicon parse_lexicon(const std::string& path);
ParsedLexicon parse_lexicon_stream(std::istream& in, const std::string& origin);

/// Canonical CSV form; parse(serialize(x)) == x for canonical entries.
void write_lexicon(std::ostream& out, const std::vector<LexiconEntry>& entries);

/// The four seed pools that define the polar axes. Facets are pooled per
/// (dimension, polarity) cell. Lists keep first-occurrence order and are
/// pairwise disjoint.
struct SeedSets {
    std::vector<std::string> warm_pos;
    std::vector<std::string> warm_neg;
    std::vector<std::string> comp_pos;
    std::vector<std::string> comp_neg;

    const std::vector<std::string>& cell(Dimension d, Polarity p) const;
};

SeedSets build_seed_sets(const std::vector<LexiconEntry>& entries);

struct ValidationSet {
    std::vector<LexiconEntry> entries;
    std::size_t removed_seed_overlap = 0;
    std::size_t removed_oov = 0;
};

/// Extended-tier entries minus seed-set overlaps minus words with no
/// representation in the space.
ValidationSet validation_set(const std::vector<LexiconEntry>& entries, const SeedSets& seeds,
                             const EmbeddingSpace& space);

}  // namespace scm
