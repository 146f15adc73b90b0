#include "scm/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "scm/error.hpp"
#include "scm/text.hpp"

namespace scm {

std::string to_string(Dimension d) { return d == Dimension::Warmth ? "warmth" : "competence"; }

std::string to_string(Facet f) {
    switch (f) {
        case Facet::Sociability: return "sociability";
        case Facet::Morality: return "morality";
        case Facet::Agency: return "agency";
        case Facet::Ability: return "ability";
    }
    return {};
}

std::string to_string(Polarity p) { return p == Polarity::Positive ? "+1" : "-1"; }

std::string to_string(Tier t) { return t == Tier::Seed ? "seed" : "extended"; }

Dimension facet_dimension(Facet f) {
    return (f == Facet::Sociability || f == Facet::Morality) ? Dimension::Warmth
                                                             : Dimension::Competence;
}

namespace {

// Minimal CSV field splitter with RFC-4180 quoting.
std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

Dimension parse_dimension(const std::string& s, size_t row) {
    std::string v = text::fold_case(text::trim(s));
    if (v == "warmth") return Dimension::Warmth;
    if (v == "competence") return Dimension::Competence;
    throw ParseError("lexicon row " + std::to_string(row) + ": unknown dimension '" + s + "'");
}

Facet parse_facet(const std::string& s, size_t row) {
    std::string v = text::fold_case(text::trim(s));
    if (v == "sociability") return Facet::Sociability;
    if (v == "morality") return Facet::Morality;
    if (v == "agency") return Facet::Agency;
    if (v == "ability") return Facet::Ability;
    throw ParseError("lexicon row " + std::to_string(row) + ": unknown facet '" + s + "'");
}

Polarity parse_polarity(const std::string& s, size_t row) {
    std::string v = text::fold_case(text::trim(s));
    if (v == "+1" || v == "pos") return Polarity::Positive;
    if (v == "-1" || v == "neg") return Polarity::Negative;
    throw ParseError("lexicon row " + std::to_string(row) + ": unknown polarity '" + s + "'");
}

Tier parse_tier(const std::string& s, size_t row) {
    std::string v = text::fold_case(text::trim(s));
    if (v == "seed") return Tier::Seed;
    if (v == "extended") return Tier::Extended;
    throw ParseError("lexicon row " + std::to_string(row) + ": unknown tier '" + s + "'");
}

}  // namespace

ParsedLexicon parse_lexicon_stream(std::istream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("lexicon is empty: " + origin);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto header = split_csv_row(line);
    const std::array<std::string, 5> expected = {"word", "dimension", "facet", "polarity", "tier"};
    bool header_ok = header.size() == expected.size();
    for (size_t i = 0; header_ok && i < expected.size(); ++i)
        header_ok = text::fold_case(text::trim(header[i])) == expected[i];
    if (!header_ok)
        throw ParseError("lexicon " + origin +
                         ": missing or malformed header (expected word,dimension,facet,polarity,tier)");

    struct Group {
        LexiconEntry first;
        int positive = 0;
        int negative = 0;
        size_t rows = 0;
    };
    std::map<std::pair<std::string, Dimension>, Group> groups;
    std::vector<std::pair<std::string, Dimension>> order;

    size_t row = 1;
    bool any_row = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty()) continue;
        auto fields = split_csv_row(line);
        if (fields.size() != 5)
            throw ParseError("lexicon row " + std::to_string(row) + ": expected 5 fields, got " +
                             std::to_string(fields.size()));
        any_row = true;

        LexiconEntry entry;
        entry.word = text::fold_case(text::trim(fields[0]));
        if (entry.word.empty())
            throw ParseError("lexicon row " + std::to_string(row) + ": empty word");
        entry.dimension = parse_dimension(fields[1], row);
        entry.facet = parse_facet(fields[2], row);
        entry.polarity = parse_polarity(fields[3], row);
        entry.tier = parse_tier(fields[4], row);
        if (facet_dimension(entry.facet) != entry.dimension)
            throw ParseError("lexicon row " + std::to_string(row) + ": facet '" +
                             to_string(entry.facet) + "' does not belong to dimension '" +
                             to_string(entry.dimension) + "'");

        auto key = std::make_pair(entry.word, entry.dimension);
        auto it = groups.find(key);
        if (it == groups.end()) {
            it = groups.emplace(key, Group{entry, 0, 0, 0}).first;
            order.push_back(key);
        }
        it->second.rows += 1;
        (entry.polarity == Polarity::Positive ? it->second.positive : it->second.negative) += 1;
    }
    if (!any_row) throw ParseError("lexicon has no data rows: " + origin);

    ParsedLexicon out;
    for (const auto& key : order) {
        const Group& g = groups.at(key);
        if (g.rows > 1) out.duplicates_collapsed += g.rows - 1;
        if (g.positive == g.negative) {
            ++out.ties_dropped;
            continue;
        }
        LexiconEntry entry = g.first;
        entry.polarity = g.positive > g.negative ? Polarity::Positive : Polarity::Negative;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

ParsedLexicon parse_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open lexicon file: " + path);
    return parse_lexicon_stream(in, path);
}

void write_lexicon(std::ostream& out, const std::vector<LexiconEntry>& entries) {
    out << "word,dimension,facet,polarity,tier\n";
    for (const auto& e : entries) {
        out << e.word << ',' << to_string(e.dimension) << ',' << to_string(e.facet) << ','
            << to_string(e.polarity) << ',' << to_string(e.tier) << '\n';
    }
}

const std::vector<std::string>& SeedSets::cell(Dimension d, Polarity p) const {
    if (d == Dimension::Warmth) return p == Polarity::Positive ? warm_pos : warm_neg;
    return p == Polarity::Positive ? comp_pos : comp_neg;
}

SeedSets build_seed_sets(const std::vector<LexiconEntry>& entries) {
    SeedSets seeds;
    for (const auto& e : entries) {
        if (e.tier != Tier::Seed) continue;
        auto& cell = e.dimension == Dimension::Warmth
                         ? (e.polarity == Polarity::Positive ? seeds.warm_pos : seeds.warm_neg)
                         : (e.polarity == Polarity::Positive ? seeds.comp_pos : seeds.comp_neg);
        cell.push_back(e.word);
    }
    auto require = [](const std::vector<std::string>& cell, const char* name) {
        if (cell.empty()) throw Error(std::string("empty ") + name + " seed cell");
    };
    require(seeds.warm_pos, "warmth-positive");
    require(seeds.warm_neg, "warmth-negative");
    require(seeds.comp_pos, "competence-positive");
    require(seeds.comp_neg, "competence-negative");

    // Cells must be pairwise disjoint; the per-dimension duplicate collapse
    // in parse_lexicon leaves only cross-dimension overlap to check.
    std::set<std::string> seen;
    for (const auto* cell : {&seeds.warm_pos, &seeds.warm_neg, &seeds.comp_pos, &seeds.comp_neg}) {
        for (const auto& w : *cell) {
            if (!seen.insert(w).second)
                throw Error("seed word '" + w + "' appears in more than one seed cell");
        }
    }
    return seeds;
}

ValidationSet validation_set(const std::vector<LexiconEntry>& entries, const SeedSets& seeds,
                             const EmbeddingSpace& space) {
    std::set<std::string> seed_words;
    for (const auto* cell : {&seeds.warm_pos, &seeds.warm_neg, &seeds.comp_pos, &seeds.comp_neg})
        seed_words.insert(cell->begin(), cell->end());

    ValidationSet out;
    for (const auto& e : entries) {
        if (e.tier != Tier::Extended) continue;
        if (seed_words.count(e.word)) {
            ++out.removed_seed_overlap;
            continue;
        }
        if (!space.resolve(e.word)) {
            ++out.removed_oov;
            continue;
        }
        out.entries.push_back(e);
    }
    return out;
}

}  // namespace scm
