// Command-line front end for the warmth-competence analysis pipeline.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scm/pipeline.hpp"
#include "scm/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Map words and stereotype corpora onto warmth-competence axes"};
    app.set_version_flag("--version", std::string(scm::kToolVersion));
    app.require_subcommand(1);

    scm::pipeline::RunConfig config;
    std::vector<std::string> formats;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--embeddings", config.embeddings_path,
                         "word2vec text or GloVe-style embeddings file")
            ->required();
        sub->add_option("--limit", config.limit, "max vocabulary entries to load");
        sub->add_option("--model-tag", config.source_tag,
                         "model identifier recorded in reports (default: file stem)");
        sub->add_option("--lexicon", config.lexicon_path, "warmth/competence lexicon CSV")
            ->required();
        sub->add_flag("--normalize-axes", config.normalize_axes,
                      "normalize the polar axes to unit length");
        sub->add_option("--output-dir", config.output_dir, "artifact directory (default: .)");
        sub->add_option("--format", formats, "output formats: csv, json, svg (default: all)");
    };
    auto add_corpus = [&](CLI::App* sub) {
        sub->add_option("--corpus", config.corpus_path,
                         "StereoSet JSON or normalized JSONL corpus")
            ->required();
        sub->add_option("--stoplist", config.stoplist_path, "demographic stoplist file");
        sub->add_option("--exclusions", config.exclusion_path, "excluded target list file");
        sub->add_option("--threshold", config.outlier_threshold,
                         "cosine-distance outlier threshold (default 0.6)");
    };
    auto add_antonyms = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--antonyms", config.antonym_path, "antonym TSV resource");
        if (required) opt->required();
        sub->add_option("--synonyms", config.synonym_path, "synonym TSV resource");
        sub->add_option("--lemmas", config.lemma_path, "lemma TSV resource");
    };

    CLI::App* validate = app.add_subcommand("validate", "lexicon sign-prediction accuracy");
    add_common(validate);

    CLI::App* project = app.add_subcommand("project", "project stdin words onto the plane");
    add_common(project);

    CLI::App* cluster = app.add_subcommand("cluster", "per-group stereotype clusters");
    add_common(cluster);
    add_corpus(cluster);

    CLI::App* strategies = app.add_subcommand("strategies", "anti-stereotype strategy tables");
    add_common(strategies);
    add_corpus(strategies);
    add_antonyms(strategies, true);

    CLI::App* counter = app.add_subcommand("counter", "positive counter-stereotypes");
    add_common(counter);
    add_corpus(counter);
    add_antonyms(counter, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 returns 0 for --help/--version; anything else is a config error.
        return code == 0 ? 0 : 2;
    }

    if (!formats.empty()) config.formats = std::set<std::string>(formats.begin(), formats.end());

    auto cmd = scm::pipeline::parse_subcommand(app.get_subcommands().front()->get_name());
    if (!cmd) return 2;
    return scm::pipeline::run_cli(*cmd, config, std::cin, std::cout, std::cerr);
}
