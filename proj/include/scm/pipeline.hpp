#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scm::pipeline {

enum class Subcommand { Validate, Project, Cluster, Strategies, Counter };

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string to_string(Subcommand cmd);

/// File-based run configuration shared by every subcommand. Paths are
/// validated before any heavy load.
struct RunConfig {
    std::string embeddings_path;
    std::optional<std::size_t> limit;   // max vocabulary entries to load
    std::string source_tag;             // model identifier; file stem if empty
    std::string lexicon_path;
    std::string corpus_path;
    std::string antonym_path;
    std::string synonym_path;
    std::string lemma_path;
    std::string stoplist_path;
    std::string exclusion_path;
    double outlier_threshold = 0.6;
    bool normalize_axes = false;
    std::string output_dir = ".";
    std::set<std::string> formats = {"csv", "json", "svg"};
};

struct RunResult {
    std::vector<std::string> artifacts;  // files written, relative to output_dir
};

/// Execute one subcommand end to end. The `project` subcommand reads words
/// from `project_input` (one per line) and writes its CSV to
/// `project_output`; both default to std::cin/std::cout. Progress notes go
/// to `log` (defaults to std::cerr, pass nullptr to silence). Throws
/// scm::ConfigError for configuration problems and scm::Error for pipeline
/// failures.
RunResult run(Subcommand cmd, const RunConfig& config, std::istream* project_input = nullptr,
              std::ostream* project_output = nullptr, std::ostream* log = nullptr);

/// Exception-to-exit-code wrapper used by the CLI binary: 0 success,
/// 1 pipeline error, 2 configuration error. Errors are printed to `err`
/// as one structured JSON line.
int run_cli(Subcommand cmd, const RunConfig& config, std::istream& project_input,
            std::ostream& project_output, std::ostream& err);

/// Plain word list file: one entry per line, '#' comments and blank lines
/// ignored.
std::vector<std::string> read_word_list(const std::string& path);

}  // namespace scm::pipeline
