#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scm {

enum class Domain { Gender, Race, Profession, Religion };

std::string to_string(Domain d);
std::optional<Domain> parse_domain(std::string_view bias_type);

/// One intra-sentence record: a BLANK context plus the candidate sentences.
/// The unrelated candidate is retained for completeness but never analyzed.
struct RawRecord {
    std::string id;
    std::string target;
    Domain domain;
    std::string context;                 // contains the literal token BLANK
    std::string stereotype_sentence;
    std::string antistereotype_sentence;
    std::string unrelated_sentence;
};

struct IngestReport {
    std::size_t records = 0;
    std::size_t skipped_no_blank = 0;       // context without a BLANK token
    std::size_t skipped_incomplete = 0;     // missing candidate / unknown domain
    bool intersentence_only = false;
    bool from_stereoset = false;            // raw StereoSet JSON vs normalized JSONL
};

struct IngestResult {
    std::vector<RawRecord> records;
    IngestReport report;
};

/// Parse a StereoSet-style JSON file, keeping the intra-sentence records
/// only. Throws scm::ParseError on malformed JSON.
IngestResult parse_stereoset(const std::string& path);
IngestResult parse_stereoset_stream(std::istream& in, const std::string& origin);

/// Align the context's prefix/suffix around BLANK against the candidate
/// sentence and return the spanned fill (lowercased, edge punctuation
/// stripped, multi-token fills joined by spaces). Alignment tolerates case
/// and terminal-punctuation differences only; absent on failure.
std::optional<std::string> extract_fill_word(const std::string& context,
                                             const std::string& sentence);

/// A stereotype / anti-stereotype word pair from one annotator.
struct WordPair {
    std::string stereotype;
    std::string antistereotype;
    std::string annotator_id;  // optional provenance

    bool operator==(const WordPair&) const = default;
};

struct TargetGroup {
    std::string name;
    Domain domain;
    std::vector<WordPair> pairs;
};

/// Flat pair record; the normalized corpus format is one JSON object per
/// line with these fields.
struct PairRecord {
    std::string target;
    Domain domain;
    std::string stereotype;
    std::string antistereotype;
    std::string annotator_id;
};

struct AssembleReport {
    std::size_t extraction_failures = 0;  // records whose fills did not align
    std::size_t excluded_targets = 0;     // distinct targets dropped by the filter
    std::size_t group_count = 0;
    double mean_pairs_per_group = 0.0;
};

struct AssembleResult {
    std::vector<TargetGroup> groups;  // sorted by case-folded name
    AssembleReport report;
};

/// Extract fill-word pairs from raw records, drop excluded targets
/// (case-insensitive match), and group by target name.
AssembleResult assemble_groups(const std::vector<RawRecord>& records,
                               const std::vector<std::string>& excluded_targets);

/// Group already-extracted pairs (the normalized-corpus path).
AssembleResult group_pairs(const std::vector<PairRecord>& pairs,
                           const std::vector<std::string>& excluded_targets);

/// Normalized corpus JSON lines: {"target", "domain", "stereotype",
/// "antistereotype"} per pair, groups ordered by name.
void write_normalized_corpus(std::ostream& out, const std::vector<TargetGroup>& groups);
std::vector<PairRecord> read_normalized_corpus(std::istream& in, const std::string& origin);

/// Load either input flavor: a StereoSet JSON file or an already-normalized
/// JSONL corpus, auto-detected from the first line.
AssembleResult load_corpus(const std::string& path,
                           const std::vector<std::string>& excluded_targets,
                           IngestReport* ingest_report = nullptr);

}  // namespace scm
