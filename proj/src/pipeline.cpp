#include "scm/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "scm/antonymy.hpp"
#include "scm/clustering.hpp"
#include "scm/counter.hpp"
#include "scm/embedding.hpp"
#include "scm/error.hpp"
#include "scm/format.hpp"
#include "scm/lexicon.hpp"
#include "scm/polar.hpp"
#include "scm/stereoset.hpp"
#include "scm/strategy.hpp"
#include "scm/svg.hpp"
#include "scm/text.hpp"
#include "scm/validation.hpp"
#include "scm/version.hpp"

namespace scm::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

std::optional<Subcommand> parse_subcommand(std::string_view name) {
    std::string v = text::fold_case(text::trim(name));
    if (v == "validate") return Subcommand::Validate;
    if (v == "project") return Subcommand::Project;
    if (v == "cluster") return Subcommand::Cluster;
    if (v == "strategies") return Subcommand::Strategies;
    if (v == "counter") return Subcommand::Counter;
    return std::nullopt;
}

std::string to_string(Subcommand cmd) {
    switch (cmd) {
        case Subcommand::Validate: return "validate";
        case Subcommand::Project: return "project";
        case Subcommand::Cluster: return "cluster";
        case Subcommand::Strategies: return "strategies";
        case Subcommand::Counter: return "counter";
    }
    return {};
}

std::vector<std::string> read_word_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open word list: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto trimmed = text::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        out.emplace_back(trimmed);
    }
    return out;
}

namespace {

std::string file_checksum_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for checksum: " + path);
    format::Fnv1a64 acc;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        acc.update(std::string_view(buf, static_cast<std::size_t>(in.gcount())));
        if (!in) break;
    }
    return format::hex16(acc.state);
}

json config_json(const RunConfig& c) {
    json j;
    j["embeddings_path"] = c.embeddings_path;
    if (c.limit) j["limit"] = *c.limit;
    j["source_tag"] = c.source_tag;
    j["lexicon_path"] = c.lexicon_path;
    j["corpus_path"] = c.corpus_path;
    j["antonym_path"] = c.antonym_path;
    j["synonym_path"] = c.synonym_path;
    j["lemma_path"] = c.lemma_path;
    j["stoplist_path"] = c.stoplist_path;
    j["exclusion_path"] = c.exclusion_path;
    j["outlier_threshold"] = c.outlier_threshold;
    j["normalize_axes"] = c.normalize_axes;
    j["output_dir"] = c.output_dir;
    j["formats"] = c.formats;
    return j;
}

void require_file(const std::string& path, const char* what) {
    if (path.empty()) throw ConfigError(std::string(what) + " is required for this subcommand");
    if (!fs::exists(path)) throw ConfigError(std::string(what) + " not found: " + path);
}

void validate_config(Subcommand cmd, const RunConfig& c) {
    if (!(c.outlier_threshold > 0.0) || c.outlier_threshold > 2.0)
        throw ConfigError("outlier threshold must lie in (0, 2]");
    if (c.limit && *c.limit == 0) throw ConfigError("limit must be a positive integer");
    for (const auto& f : c.formats)
        if (f != "csv" && f != "json" && f != "svg")
            throw ConfigError("unknown output format: " + f);
    if (c.output_dir.empty()) throw ConfigError("output directory must not be empty");

    require_file(c.embeddings_path, "embeddings file");
    require_file(c.lexicon_path, "lexicon file");
    bool needs_corpus = cmd == Subcommand::Cluster || cmd == Subcommand::Strategies ||
                        cmd == Subcommand::Counter;
    bool needs_antonyms = cmd == Subcommand::Strategies || cmd == Subcommand::Counter;
    if (needs_corpus) require_file(c.corpus_path, "corpus file");
    if (needs_antonyms) require_file(c.antonym_path, "antonym file");

    // Optional paths must exist when given.
    for (const auto* p : {&c.corpus_path, &c.antonym_path, &c.synonym_path, &c.lemma_path,
                          &c.stoplist_path, &c.exclusion_path}) {
        if (!p->empty() && !fs::exists(*p)) throw ConfigError("input not found: " + *p);
    }
}

struct ArtifactWriter {
    fs::path dir;
    std::set<std::string> formats;
    std::vector<std::string> written;

    bool wants(const std::string& fmt) const { return formats.count(fmt) != 0; }

    void write(const std::string& name, const std::string& content) {
        fs::create_directories(dir);
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw Error("cannot write artifact: " + (dir / name).string());
        out << content;
        written.push_back(name);
    }
};

// Everything the subcommands share: space, axes, lexicon.
struct Workbench {
    LoadResult embeddings;
    ParsedLexicon lexicon;
    SeedSets seeds;
    AxisReport axis_report;
    PolarSubspace subspace;
    std::map<std::string, std::uint64_t> counts;

    const EmbeddingSpace& space() const { return embeddings.space; }
};

Workbench prepare(const RunConfig& config, std::ostream* log) {
    Workbench bench;

    LoadOptions options;
    options.limit = config.limit;
    options.source_tag = config.source_tag;
    bench.embeddings = load_embeddings(config.embeddings_path, options);
    const LoadReport& lr = bench.embeddings.report;
    if (log)
        *log << "loaded " << lr.loaded << " vectors (dim " << bench.space().dim() << ", "
             << lr.malformed << " malformed, " << lr.zero_norm << " zero-norm, " << lr.duplicates
             << " duplicate lines)\n";

    bench.lexicon = parse_lexicon(config.lexicon_path);
    bench.seeds = build_seed_sets(bench.lexicon.entries);
    bench.subspace = PolarSubspace::build(bench.space(), bench.seeds, config.normalize_axes,
                                          &bench.axis_report);

    auto& counts = bench.counts;
    counts["embedding_entries"] = lr.loaded;
    counts["embedding_lines_scanned"] = lr.lines_scanned;
    counts["embedding_malformed"] = lr.malformed;
    counts["embedding_zero_norm"] = lr.zero_norm;
    counts["embedding_duplicates"] = lr.duplicates;
    counts["lexicon_entries"] = bench.lexicon.entries.size();
    counts["lexicon_duplicates_collapsed"] = bench.lexicon.duplicates_collapsed;
    counts["lexicon_ties_dropped"] = bench.lexicon.ties_dropped;
    counts["seed_oov"] = bench.axis_report.oov_warm_pos.size() +
                         bench.axis_report.oov_warm_neg.size() +
                         bench.axis_report.oov_comp_pos.size() +
                         bench.axis_report.oov_comp_neg.size();
    return bench;
}

void write_manifest(ArtifactWriter& writer, Subcommand cmd, const RunConfig& config,
                    const std::map<std::string, std::uint64_t>& counts) {
    json manifest;
    manifest["tool"] = {{"name", std::string(kToolName)}, {"version", std::string(kToolVersion)}};
    manifest["subcommand"] = to_string(cmd);
    json cfg = config_json(config);
    manifest["config"] = cfg;
    manifest["config_hash"] = "fnv1a64:" + format::fnv1a64_hex(cfg.dump());

    json inputs = json::array();
    for (const auto* p : {&config.embeddings_path, &config.lexicon_path, &config.corpus_path,
                          &config.antonym_path, &config.synonym_path, &config.lemma_path,
                          &config.stoplist_path, &config.exclusion_path}) {
        if (p->empty()) continue;
        inputs.push_back({{"path", *p}, {"checksum", "fnv1a64:" + file_checksum_hex(*p)}});
    }
    manifest["inputs"] = inputs;
    manifest["counts"] = counts;
    writer.write("manifest.json", manifest.dump(2) + "\n");
}

// ---------------------------------------------------------------- validate

void run_validate(Workbench& bench, ArtifactWriter& writer, std::ostream* log) {
    ValidationSet vset = validation_set(bench.lexicon.entries, bench.seeds, bench.space());
    AccuracyReport report = evaluate_lexicon(bench.subspace, bench.space(), vset.entries);

    bench.counts["validation_entries"] = vset.entries.size();
    bench.counts["removed_seed_overlap"] = vset.removed_seed_overlap;
    bench.counts["removed_oov"] = vset.removed_oov;
    bench.counts["evaluated_warmth"] = report.warmth_n;
    bench.counts["evaluated_competence"] = report.competence_n;
    bench.counts["skipped"] = report.skipped;

    if (writer.wants("json")) {
        json j;
        j["model"] = bench.space().source_tag();
        j["dim"] = bench.space().dim();
        j["entries"] = bench.space().size();
        j["warmth_accuracy"] = report.warmth_accuracy;
        j["competence_accuracy"] = report.competence_accuracy;
        j["warmth_n"] = report.warmth_n;
        j["competence_n"] = report.competence_n;
        j["per_facet"] = report.per_facet;
        j["facet_n"] = report.facet_n;
        j["skipped"] = report.skipped;
        j["removed_seed_overlap"] = vset.removed_seed_overlap;
        j["removed_oov"] = vset.removed_oov;
        writer.write("validate_report.json", j.dump(2) + "\n");
    }
    if (writer.wants("csv")) {
        std::ostringstream csv;
        csv << "model,dim,entries,warmth_accuracy,competence_accuracy,warmth_n,competence_n,skipped\n";
        csv << format::csv_field(bench.space().source_tag()) << ',' << bench.space().dim() << ','
            << bench.space().size() << ',' << format::number(report.warmth_accuracy) << ','
            << format::number(report.competence_accuracy) << ',' << report.warmth_n << ','
            << report.competence_n << ',' << report.skipped << '\n';
        writer.write("validate.csv", csv.str());
    }
    if (log)
        *log << "validate: warmth " << format::number(report.warmth_accuracy) << " / competence "
             << format::number(report.competence_accuracy) << " over " << report.warmth_n << "+"
             << report.competence_n << " words\n";
}

// ----------------------------------------------------------------- project

void run_project(Workbench& bench, std::istream& in, std::ostream& out) {
    out << "word,warmth,competence\n";
    std::uint64_t projected = 0, oov = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string word(text::trim(line));
        if (word.empty()) continue;
        if (auto v = bench.space().resolve(word)) {
            PolarPoint p = bench.subspace.project(*v);
            out << format::csv_field(text::fold_case(word)) << ',' << format::number(p.warmth)
                << ',' << format::number(p.competence) << '\n';
            ++projected;
        } else {
            out << format::csv_field(text::fold_case(word)) << ",,\n";
            ++oov;
        }
    }
    bench.counts["words_projected"] = projected;
    bench.counts["words_oov"] = oov;
}

// ------------------------------------------------------- corpus subcommands

struct Corpus {
    AssembleResult assembled;
    IngestReport ingest;
    std::vector<std::string> stoplist;
};

Corpus load_corpus_inputs(const RunConfig& config, Workbench& bench, ArtifactWriter& writer,
                          std::ostream* log) {
    Corpus corpus;
    std::vector<std::string> exclusions;
    if (!config.exclusion_path.empty()) exclusions = read_word_list(config.exclusion_path);
    if (!config.stoplist_path.empty()) corpus.stoplist = read_word_list(config.stoplist_path);

    corpus.assembled = load_corpus(config.corpus_path, exclusions, &corpus.ingest);

    // When the input was a raw StereoSet file, persist the normalized pair
    // corpus so downstream runs can bypass alignment.
    if (corpus.ingest.from_stereoset && writer.wants("json")) {
        std::ostringstream normalized;
        write_normalized_corpus(normalized, corpus.assembled.groups);
        writer.write("corpus_normalized.jsonl", normalized.str());
    }

    std::uint64_t pair_total = 0;
    for (const auto& g : corpus.assembled.groups) pair_total += g.pairs.size();
    bench.counts["groups"] = corpus.assembled.report.group_count;
    bench.counts["pairs_total"] = pair_total;
    bench.counts["excluded_targets"] = corpus.assembled.report.excluded_targets;
    bench.counts["extraction_failures"] = corpus.assembled.report.extraction_failures;
    bench.counts["corpus_records"] = corpus.ingest.records;
    bench.counts["corpus_skipped_no_blank"] = corpus.ingest.skipped_no_blank;
    bench.counts["corpus_skipped_incomplete"] = corpus.ingest.skipped_incomplete;
    if (log)
        *log << "corpus: " << corpus.assembled.report.group_count << " groups, " << pair_total
             << " pairs\n";
    return corpus;
}

std::vector<std::string> side_words(const TargetGroup& group, bool stereotype_side) {
    std::vector<std::string> words;
    words.reserve(group.pairs.size());
    for (const auto& p : group.pairs)
        words.push_back(stereotype_side ? p.stereotype : p.antistereotype);
    return words;
}

json cluster_json(const GroupCluster& c, Domain domain) {
    json j;
    j["target"] = c.target;
    j["domain"] = scm::to_string(domain);
    j["warmth"] = c.mean_point.warmth;
    j["competence"] = c.mean_point.competence;
    j["quadrant"] = scm::to_string(c.quadrant);
    j["representative"] = c.representative;
    json kept = json::array();
    for (const auto& [word, count] : c.kept_words) kept.push_back({{"word", word}, {"count", count}});
    j["kept"] = kept;
    j["discarded_outliers"] = c.discarded_outliers;
    j["discarded_demographic"] = c.discarded_demographic;
    j["unresolved"] = c.unresolved;
    return j;
}

void run_cluster(const RunConfig& config, Workbench& bench, ArtifactWriter& writer,
                 std::ostream* log) {
    Corpus corpus = load_corpus_inputs(config, bench, writer, log);

    std::vector<std::pair<GroupCluster, Domain>> clusters;
    std::vector<std::string> skipped;
    for (const auto& group : corpus.assembled.groups) {
        try {
            clusters.emplace_back(summarize_group(bench.space(), bench.subspace, group.name,
                                                  side_words(group, true), corpus.stoplist,
                                                  config.outlier_threshold),
                                  group.domain);
        } catch (const Error&) {
            skipped.push_back(group.name);
        }
    }
    bench.counts["groups_clustered"] = clusters.size();
    bench.counts["groups_skipped"] = skipped.size();

    if (writer.wants("csv")) {
        std::ostringstream csv;
        csv << "target,warmth,competence,quadrant,representative,n_kept,n_discarded\n";
        for (const auto& [c, domain] : clusters) {
            std::size_t discarded = c.discarded_outliers.size() + c.discarded_demographic.size();
            csv << format::csv_field(c.target) << ',' << format::number(c.mean_point.warmth) << ','
                << format::number(c.mean_point.competence) << ',' << scm::to_string(c.quadrant)
                << ',' << format::csv_field(c.representative) << ',' << c.kept_count() << ','
                << discarded << '\n';
        }
        writer.write("clusters.csv", csv.str());
    }
    if (writer.wants("json")) {
        json j;
        json groups = json::array();
        for (const auto& [c, domain] : clusters) groups.push_back(cluster_json(c, domain));
        j["groups"] = groups;
        j["skipped"] = skipped;
        writer.write("clusters.json", j.dump(2) + "\n");
    }
    if (writer.wants("svg")) {
        std::vector<std::pair<std::string, PolarPoint>> points;
        for (const auto& [c, domain] : clusters) points.emplace_back(c.target, c.mean_point);
        writer.write("clusters.svg", svg::render_scatter(points));
    }
}

std::string strategy_table_csv(const StrategyTable& table) {
    static const char* kColumns[] = {"overall", "HC-HW", "LC-HW", "LC-LW", "HC-LW",
                                     "comp-salient", "warmth-salient"};
    auto cell = [&](std::size_t col) -> const StrategyCell& {
        if (col == 0) return table.overall;
        if (col <= 4) return table.by_quadrant[col - 1];
        return table.by_salience[col - 5];
    };
    std::ostringstream csv;
    csv << "strategy";
    for (const char* c : kColumns) csv << ',' << c;
    csv << '\n';
    for (std::size_t s = 0; s < kStrategyCount; ++s) {
        csv << scm::to_string(static_cast<StrategyLabel>(s));
        for (std::size_t col = 0; col < 7; ++col) {
            auto pct = cell(col).percent(static_cast<StrategyLabel>(s));
            csv << ',' << (pct ? format::number(*pct) : std::string("—"));
        }
        csv << '\n';
    }
    csv << "n";
    for (std::size_t col = 0; col < 7; ++col) csv << ',' << cell(col).n();
    csv << '\n';
    return csv.str();
}

json strategy_cell_json(const StrategyCell& cell) {
    json counts;
    for (std::size_t s = 0; s < kStrategyCount; ++s)
        counts[scm::to_string(static_cast<StrategyLabel>(s))] = cell.counts[s];
    json j;
    j["counts"] = counts;
    j["n"] = cell.n();
    json pct;
    for (std::size_t s = 0; s < kStrategyCount; ++s) {
        auto label = static_cast<StrategyLabel>(s);
        auto p = cell.percent(label);
        pct[scm::to_string(label)] = p ? json(*p) : json(nullptr);
    }
    j["percent"] = pct;
    return j;
}

json strategy_table_json(const StrategyTable& table) {
    json j;
    j["overall"] = strategy_cell_json(table.overall);
    json quadrants;
    for (std::size_t q = 0; q < 4; ++q)
        quadrants[scm::to_string(static_cast<Quadrant>(q))] = strategy_cell_json(table.by_quadrant[q]);
    j["by_quadrant"] = quadrants;
    json salience;
    salience["comp-salient"] = strategy_cell_json(table.by_salience[StrategyTable::kCompSalient]);
    salience["warmth-salient"] =
        strategy_cell_json(table.by_salience[StrategyTable::kWarmthSalient]);
    j["by_salience"] = salience;
    j["excluded"] = table.excluded;
    return j;
}

void run_strategies(const RunConfig& config, Workbench& bench, ArtifactWriter& writer,
                    std::ostream* log) {
    Corpus corpus = load_corpus_inputs(config, bench, writer, log);
    AntonymResource::LoadStats stats;
    AntonymResource resource = AntonymResource::load(config.antonym_path, config.synonym_path,
                                                     config.lemma_path, &stats);
    bench.counts["antonym_rows"] = stats.antonym_rows;
    bench.counts["self_reference_warnings"] = stats.self_reference_warnings;

    // Pairwise: raw annotator pairs, no filtering beyond resolvability.
    std::vector<ClassifiedPair> classified;
    std::size_t excluded = 0;
    for (const auto& group : corpus.assembled.groups) {
        for (const auto& pair : group.pairs) {
            auto c = classify_pair(resource, bench.space(), bench.subspace, pair.stereotype,
                                   pair.antistereotype);
            if (c) classified.push_back(std::move(*c));
            else ++excluded;
        }
    }
    StrategyTable pairwise = pairwise_table(classified);
    pairwise.excluded = excluded;
    bench.counts["pairs_classified"] = classified.size();
    bench.counts["pairs_excluded"] = excluded;

    // Group level: clusters on both sides.
    std::vector<std::pair<GroupCluster, GroupCluster>> sides;
    std::vector<std::string> group_skipped;
    for (const auto& group : corpus.assembled.groups) {
        try {
            GroupCluster stereo = summarize_group(bench.space(), bench.subspace, group.name,
                                                  side_words(group, true), corpus.stoplist,
                                                  config.outlier_threshold);
            GroupCluster anti = summarize_group(bench.space(), bench.subspace, group.name,
                                                side_words(group, false), corpus.stoplist,
                                                config.outlier_threshold);
            sides.emplace_back(std::move(stereo), std::move(anti));
        } catch (const Error&) {
            group_skipped.push_back(group.name);
        }
    }
    GroupLevelResult group_level = group_level_table(resource, sides);
    group_level.table.excluded = group_skipped.size();
    bench.counts["group_level_groups"] = group_level.groups.size();
    bench.counts["group_level_skipped"] = group_skipped.size();

    if (writer.wants("csv")) {
        writer.write("strategies_pairwise.csv", strategy_table_csv(pairwise));
        writer.write("strategies_groups.csv", strategy_table_csv(group_level.table));
    }
    if (writer.wants("json")) {
        json j;
        j["pairwise"] = strategy_table_json(pairwise);
        j["group_level"] = strategy_table_json(group_level.table);
        json groups = json::array();
        for (const auto& g : group_level.groups) {
            groups.push_back({{"target", g.target},
                              {"strategy", scm::to_string(g.label)},
                              {"stereo_representative", g.stereo_representative},
                              {"anti_representative", g.anti_representative},
                              {"stereo_warmth", g.stereo_point.warmth},
                              {"stereo_competence", g.stereo_point.competence},
                              {"anti_warmth", g.anti_point.warmth},
                              {"anti_competence", g.anti_point.competence}});
        }
        j["groups"] = groups;
        j["group_level_skipped"] = group_skipped;
        writer.write("strategies.json", j.dump(2) + "\n");
    }
    if (log)
        *log << "strategies: " << classified.size() << " pairs classified, " << excluded
             << " excluded\n";
}

void run_counter(const RunConfig& config, Workbench& bench, ArtifactWriter& writer,
                 std::ostream* log) {
    Corpus corpus = load_corpus_inputs(config, bench, writer, log);
    AntonymResource resource =
        AntonymResource::load(config.antonym_path, config.synonym_path, config.lemma_path);

    struct Row {
        CounterStereotype counter;
        std::string representative;
    };
    std::vector<Row> rows;
    std::vector<std::string> skipped;
    for (const auto& group : corpus.assembled.groups) {
        try {
            GroupCluster cluster = summarize_group(bench.space(), bench.subspace, group.name,
                                                   side_words(group, true), corpus.stoplist,
                                                   config.outlier_threshold);
            XButYSelection selection = select_x_but_y(bench.subspace, bench.space(), cluster);
            CounterStereotype counter =
                generate_counter(resource, bench.space(), bench.subspace, cluster, selection);
            rows.push_back({std::move(counter), cluster.representative});
        } catch (const Error&) {
            skipped.push_back(group.name);
        }
    }
    bench.counts["counters_emitted"] = rows.size();
    bench.counts["groups_skipped"] = skipped.size();

    if (writer.wants("csv")) {
        std::ostringstream csv;
        csv << "target,representative,x_but_y,counter,status\n";
        for (const auto& row : rows) {
            csv << format::csv_field(row.counter.target) << ','
                << format::csv_field(row.representative) << ','
                << format::csv_field(row.counter.x_but_y) << ','
                << format::csv_field(row.counter.counter) << ',' << row.counter.status_string()
                << '\n';
        }
        writer.write("counter.csv", csv.str());
    }
    if (writer.wants("json")) {
        json j;
        json counters = json::array();
        for (const auto& row : rows) {
            counters.push_back({{"target", row.counter.target},
                                {"representative", row.representative},
                                {"x_word", row.counter.x_word},
                                {"y_word", row.counter.y_word},
                                {"x_but_y", row.counter.x_but_y},
                                {"neg_antonym", row.counter.neg_antonym},
                                {"counter", row.counter.counter},
                                {"ambivalent", row.counter.ambivalent},
                                {"fallback_antonym", row.counter.fallback_antonym},
                                {"status", row.counter.status_string()}});
        }
        j["counters"] = counters;
        j["skipped"] = skipped;
        writer.write("counter.json", j.dump(2) + "\n");
    }
    if (log) *log << "counter: " << rows.size() << " groups processed\n";
}

}  // namespace

RunResult run(Subcommand cmd, const RunConfig& config, std::istream* project_input,
              std::ostream* project_output, std::ostream* log) {
    validate_config(cmd, config);
    Workbench bench = prepare(config, log);
    ArtifactWriter writer{fs::path(config.output_dir), config.formats, {}};

    switch (cmd) {
        case Subcommand::Validate:
            run_validate(bench, writer, log);
            break;
        case Subcommand::Project:
            run_project(bench, project_input ? *project_input : std::cin,
                        project_output ? *project_output : std::cout);
            break;
        case Subcommand::Cluster:
            run_cluster(config, bench, writer, log);
            break;
        case Subcommand::Strategies:
            run_strategies(config, bench, writer, log);
            break;
        case Subcommand::Counter:
            run_counter(config, bench, writer, log);
            break;
    }
    write_manifest(writer, cmd, config, bench.counts);
    return RunResult{std::move(writer.written)};
}

int run_cli(Subcommand cmd, const RunConfig& config, std::istream& project_input,
            std::ostream& project_output, std::ostream& err) {
    try {
        run(cmd, config, &project_input, &project_output, &err);
        return 0;
    } catch (const ConfigError& e) {
        err << json({{"error", {{"type", "config"}, {"message", e.what()}}}}).dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << json({{"error", {{"type", "runtime"}, {"message", e.what()}}}}).dump() << '\n';
        return 1;
    }
}

}  // namespace scm::pipeline
