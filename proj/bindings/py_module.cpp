// Python bindings for the warmth-competence analysis core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "scm/antonymy.hpp"
#include "scm/clustering.hpp"
#include "scm/counter.hpp"
#include "scm/embedding.hpp"
#include "scm/error.hpp"
#include "scm/lexicon.hpp"
#include "scm/pipeline.hpp"
#include "scm/polar.hpp"
#include "scm/stereoset.hpp"
#include "scm/strategy.hpp"
#include "scm/svg.hpp"
#include "scm/validation.hpp"
#include "scm/version.hpp"

namespace py = pybind11;
using namespace scm;

PYBIND11_MODULE(_scmpolar, m) {
    m.doc() = "Warmth-competence axes for word embeddings: projection, lexicon "
              "validation, stereotype clustering, and counter-stereotype generation";
    m.attr("__version__") = std::string(kToolVersion);

    py::register_exception<Error>(m, "ScmError");

    py::enum_<Dimension>(m, "Dimension")
        .value("Warmth", Dimension::Warmth)
        .value("Competence", Dimension::Competence);
    py::enum_<Facet>(m, "Facet")
        .value("Sociability", Facet::Sociability)
        .value("Morality", Facet::Morality)
        .value("Agency", Facet::Agency)
        .value("Ability", Facet::Ability);
    py::enum_<Polarity>(m, "Polarity")
        .value("Positive", Polarity::Positive)
        .value("Negative", Polarity::Negative);
    py::enum_<Tier>(m, "Tier").value("Seed", Tier::Seed).value("Extended", Tier::Extended);
    py::enum_<Quadrant>(m, "Quadrant")
        .value("HC_HW", Quadrant::HC_HW)
        .value("LC_HW", Quadrant::LC_HW)
        .value("LC_LW", Quadrant::LC_LW)
        .value("HC_LW", Quadrant::HC_LW);
    py::enum_<Domain>(m, "Domain")
        .value("Gender", Domain::Gender)
        .value("Race", Domain::Race)
        .value("Profession", Domain::Profession)
        .value("Religion", Domain::Religion);
    py::enum_<StrategyLabel>(m, "StrategyLabel")
        .value("DirectAntonym", StrategyLabel::DirectAntonym)
        .value("OppositeQuadrant", StrategyLabel::OppositeQuadrant)
        .value("FlipWarmth", StrategyLabel::FlipWarmth)
        .value("FlipCompetence", StrategyLabel::FlipCompetence)
        .value("SameQuadrant", StrategyLabel::SameQuadrant);
    py::enum_<CounterStatus>(m, "CounterStatus")
        .value("Ok", CounterStatus::Ok)
        .value("NoAntonym", CounterStatus::NoAntonym)
        .value("Degenerate", CounterStatus::Degenerate);

    py::class_<PolarPoint>(m, "PolarPoint")
        .def(py::init<double, double>(), py::arg("warmth") = 0.0, py::arg("competence") = 0.0)
        .def_readwrite("warmth", &PolarPoint::warmth)
        .def_readwrite("competence", &PolarPoint::competence)
        .def("__repr__", [](const PolarPoint& p) {
            std::ostringstream out;
            out << "PolarPoint(warmth=" << p.warmth << ", competence=" << p.competence << ")";
            return out.str();
        });

    py::class_<PointClass>(m, "PointClass")
        .def_readonly("quadrant", &PointClass::quadrant)
        .def_readonly("salient", &PointClass::salient)
        .def_readonly("salience_tie", &PointClass::salience_tie);
    m.def("classify_point", &classify_point, py::arg("point"));
    m.def("quadrant_name", [](Quadrant q) { return to_string(q); });

    py::class_<EmbeddingSpace>(m, "EmbeddingSpace")
        .def_static(
            "build",
            [](std::size_t dim, const std::vector<std::pair<std::string, Vector>>& entries,
               const std::string& tag) { return EmbeddingSpace::build(dim, entries, tag); },
            py::arg("dim"), py::arg("entries"), py::arg("source_tag") = "")
        .def_property_readonly("dim", &EmbeddingSpace::dim)
        .def_property_readonly("source_tag", &EmbeddingSpace::source_tag)
        .def("__len__", &EmbeddingSpace::size)
        .def("__contains__", &EmbeddingSpace::contains)
        .def("tokens", &EmbeddingSpace::tokens)
        .def("lookup", &EmbeddingSpace::lookup, py::arg("token"))
        .def("phrase_vector", &EmbeddingSpace::phrase_vector, py::arg("phrase"))
        .def("resolve", &EmbeddingSpace::resolve, py::arg("term"))
        .def(
            "mean_vector",
            [](const EmbeddingSpace& space, const std::vector<std::string>& tokens) {
                auto result = space.mean_vector(tokens);
                return py::make_tuple(result.mean, result.unresolved);
            },
            py::arg("tokens"), "Returns (mean, unresolved_tokens).");

    py::class_<LoadReport>(m, "LoadReport")
        .def_readonly("lines_scanned", &LoadReport::lines_scanned)
        .def_readonly("loaded", &LoadReport::loaded)
        .def_readonly("malformed", &LoadReport::malformed)
        .def_readonly("zero_norm", &LoadReport::zero_norm)
        .def_readonly("duplicates", &LoadReport::duplicates)
        .def_readonly("header_present", &LoadReport::header_present);

    m.def(
        "load_embeddings",
        [](const std::string& path, std::optional<std::size_t> limit, const std::string& tag) {
            LoadOptions options;
            options.limit = limit;
            options.source_tag = tag;
            auto result = load_embeddings(path, options);
            return py::make_tuple(std::move(result.space), result.report);
        },
        py::arg("path"), py::arg("limit") = std::nullopt, py::arg("source_tag") = "",
        "Load word2vec/GloVe text vectors; returns (space, report).");

    py::class_<LexiconEntry>(m, "LexiconEntry")
        .def(py::init([](const std::string& word, Dimension dim, Facet facet, Polarity pol,
                         Tier tier) {
                 return LexiconEntry{word, dim, facet, pol, tier};
             }),
             py::arg("word"), py::arg("dimension"), py::arg("facet"), py::arg("polarity"),
             py::arg("tier"))
        .def_readwrite("word", &LexiconEntry::word)
        .def_readwrite("dimension", &LexiconEntry::dimension)
        .def_readwrite("facet", &LexiconEntry::facet)
        .def_readwrite("polarity", &LexiconEntry::polarity)
        .def_readwrite("tier", &LexiconEntry::tier);

    m.def(
        "parse_lexicon",
        [](const std::string& path) {
            auto parsed = parse_lexicon(path);
            return py::make_tuple(parsed.entries, parsed.duplicates_collapsed,
                                  parsed.ties_dropped);
        },
        py::arg("path"), "Returns (entries, duplicates_collapsed, ties_dropped).");

    py::class_<SeedSets>(m, "SeedSets")
        .def(py::init<>())
        .def_readwrite("warm_pos", &SeedSets::warm_pos)
        .def_readwrite("warm_neg", &SeedSets::warm_neg)
        .def_readwrite("comp_pos", &SeedSets::comp_pos)
        .def_readwrite("comp_neg", &SeedSets::comp_neg);
    m.def("build_seed_sets", &build_seed_sets, py::arg("entries"));

    m.def(
        "validation_set",
        [](const std::vector<LexiconEntry>& entries, const SeedSets& seeds,
           const EmbeddingSpace& space) {
            auto vset = validation_set(entries, seeds, space);
            return py::make_tuple(vset.entries, vset.removed_seed_overlap, vset.removed_oov);
        },
        py::arg("entries"), py::arg("seeds"), py::arg("space"),
        "Returns (entries, removed_seed_overlap, removed_oov).");

    py::class_<PolarSubspace>(m, "PolarSubspace")
        .def_property_readonly("dim", &PolarSubspace::dim)
        .def_property_readonly("dir1", &PolarSubspace::dir1)
        .def_property_readonly("dir2", &PolarSubspace::dir2)
        .def("project",
             [](const PolarSubspace& sub, const Vector& v) { return sub.project(v); },
             py::arg("vector"))
        .def_static("from_directions", &PolarSubspace::from_directions, py::arg("dir1"),
                    py::arg("dir2"));
    m.def(
        "build_axes",
        [](const EmbeddingSpace& space, const SeedSets& seeds, bool normalize_axes) {
            return PolarSubspace::build(space, seeds, normalize_axes);
        },
        py::arg("space"), py::arg("seeds"), py::arg("normalize_axes") = false);

    py::class_<AccuracyReport>(m, "AccuracyReport")
        .def_readonly("warmth_accuracy", &AccuracyReport::warmth_accuracy)
        .def_readonly("competence_accuracy", &AccuracyReport::competence_accuracy)
        .def_readonly("warmth_n", &AccuracyReport::warmth_n)
        .def_readonly("competence_n", &AccuracyReport::competence_n)
        .def_readonly("per_facet", &AccuracyReport::per_facet)
        .def_readonly("skipped", &AccuracyReport::skipped);
    m.def("predict_polarity", &predict_polarity, py::arg("subspace"), py::arg("space"),
          py::arg("entry"));
    m.def("evaluate_lexicon", &evaluate_lexicon, py::arg("subspace"), py::arg("space"),
          py::arg("entries"));

    py::class_<WordPair>(m, "WordPair")
        .def_readonly("stereotype", &WordPair::stereotype)
        .def_readonly("antistereotype", &WordPair::antistereotype)
        .def_readonly("annotator_id", &WordPair::annotator_id);
    py::class_<TargetGroup>(m, "TargetGroup")
        .def_readonly("name", &TargetGroup::name)
        .def_readonly("domain", &TargetGroup::domain)
        .def_readonly("pairs", &TargetGroup::pairs);

    m.def("extract_fill_word", &extract_fill_word, py::arg("context"), py::arg("sentence"));
    m.def(
        "load_corpus",
        [](const std::string& path, const std::vector<std::string>& exclusions) {
            auto result = load_corpus(path, exclusions);
            return result.groups;
        },
        py::arg("path"), py::arg("excluded_targets") = std::vector<std::string>{});

    py::class_<GroupCluster>(m, "GroupCluster")
        .def_readonly("target", &GroupCluster::target)
        .def_readonly("kept_words", &GroupCluster::kept_words)
        .def_readonly("discarded_outliers", &GroupCluster::discarded_outliers)
        .def_readonly("discarded_demographic", &GroupCluster::discarded_demographic)
        .def_readonly("unresolved", &GroupCluster::unresolved)
        .def_readonly("mean_point", &GroupCluster::mean_point)
        .def_readonly("quadrant", &GroupCluster::quadrant)
        .def_readonly("representative", &GroupCluster::representative);
    m.def("apply_stoplist", &apply_stoplist, py::arg("words"), py::arg("stoplist"));
    m.def(
        "filter_outliers",
        [](const EmbeddingSpace& space, const std::vector<std::string>& words, double threshold) {
            auto result = filter_outliers(space, words, threshold);
            return py::make_tuple(result.kept, result.discarded, result.unresolved,
                                  result.degenerate_mean);
        },
        py::arg("space"), py::arg("words"), py::arg("threshold") = 0.6,
        "Returns (kept, discarded, unresolved, degenerate_mean).");
    m.def("summarize_group", &summarize_group, py::arg("space"), py::arg("subspace"),
          py::arg("target"), py::arg("words"), py::arg("stoplist") = std::vector<std::string>{},
          py::arg("threshold") = 0.6);

    py::class_<AntonymResource>(m, "AntonymResource")
        .def_static(
            "load",
            [](const std::string& antonyms, const std::string& synonyms,
               const std::string& lemmas) {
                return AntonymResource::load(antonyms, synonyms, lemmas);
            },
            py::arg("antonym_path"), py::arg("synonym_path") = "", py::arg("lemma_path") = "")
        .def_static("empty", &AntonymResource::empty)
        .def("antonym_set", &AntonymResource::antonym_set, py::arg("word"))
        .def("lemma", &AntonymResource::lemma, py::arg("word"))
        .def("is_antonym_match", &AntonymResource::is_antonym_match, py::arg("stereotype"),
             py::arg("antistereotype"));

    py::class_<ClassifiedPair>(m, "ClassifiedPair")
        .def_readonly("stereotype", &ClassifiedPair::stereotype)
        .def_readonly("antistereotype", &ClassifiedPair::antistereotype)
        .def_readonly("label", &ClassifiedPair::label)
        .def_readonly("stereo_point", &ClassifiedPair::stereo_point)
        .def_readonly("anti_point", &ClassifiedPair::anti_point);
    m.def("quadrant_strategy", &quadrant_strategy, py::arg("stereo_point"), py::arg("anti_point"));
    m.def("classify_pair", &classify_pair, py::arg("resource"), py::arg("space"),
          py::arg("subspace"), py::arg("stereotype"), py::arg("antistereotype"));
    m.def("strategy_name", [](StrategyLabel s) { return to_string(s); });

    py::class_<XButYSelection>(m, "XButYSelection")
        .def_readonly("x_word", &XButYSelection::x_word)
        .def_readonly("y_word", &XButYSelection::y_word)
        .def_readonly("ambivalent", &XButYSelection::ambivalent)
        .def_readonly("degenerate", &XButYSelection::degenerate)
        .def_readonly("positive_axis", &XButYSelection::positive_axis)
        .def_readonly("deficient_axis", &XButYSelection::deficient_axis);
    py::class_<CounterStereotype>(m, "CounterStereotype")
        .def_readonly("target", &CounterStereotype::target)
        .def_readonly("x_word", &CounterStereotype::x_word)
        .def_readonly("y_word", &CounterStereotype::y_word)
        .def_readonly("x_but_y", &CounterStereotype::x_but_y)
        .def_readonly("neg_antonym", &CounterStereotype::neg_antonym)
        .def_readonly("counter", &CounterStereotype::counter)
        .def_readonly("ambivalent", &CounterStereotype::ambivalent)
        .def_readonly("fallback_antonym", &CounterStereotype::fallback_antonym)
        .def_readonly("status", &CounterStereotype::status)
        .def("status_string", &CounterStereotype::status_string);
    m.def("select_x_but_y", &select_x_but_y, py::arg("subspace"), py::arg("space"),
          py::arg("cluster"));
    m.def("generate_counter", &generate_counter, py::arg("resource"), py::arg("space"),
          py::arg("subspace"), py::arg("cluster"), py::arg("selection"));

    m.def("render_scatter_svg", &svg::render_scatter, py::arg("points"),
          "Deterministic SVG scatter of labeled (warmth, competence) points.");

    m.def(
        "run_pipeline",
        [](const std::string& subcommand, const py::dict& options) {
            auto cmd = pipeline::parse_subcommand(subcommand);
            if (!cmd) throw ConfigError("unknown subcommand: " + subcommand);
            pipeline::RunConfig config;
            auto str = [&](const char* key) {
                return options.contains(key) ? options[key].cast<std::string>() : std::string();
            };
            config.embeddings_path = str("embeddings");
            config.lexicon_path = str("lexicon");
            config.corpus_path = str("corpus");
            config.antonym_path = str("antonyms");
            config.synonym_path = str("synonyms");
            config.lemma_path = str("lemmas");
            config.stoplist_path = str("stoplist");
            config.exclusion_path = str("exclusions");
            if (options.contains("output_dir")) config.output_dir = str("output_dir");
            if (options.contains("limit"))
                config.limit = options["limit"].cast<std::size_t>();
            if (options.contains("threshold"))
                config.outlier_threshold = options["threshold"].cast<double>();
            if (options.contains("normalize_axes"))
                config.normalize_axes = options["normalize_axes"].cast<bool>();
            if (options.contains("formats"))
                config.formats = options["formats"].cast<std::set<std::string>>();
            auto result = pipeline::run(*cmd, config, nullptr, nullptr, nullptr);
            return result.artifacts;
        },
        py::arg("subcommand"), py::arg("options"),
        "Run one pipeline subcommand with file-based inputs; returns artifact names.");
}
