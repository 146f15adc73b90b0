#include "scm/stereoset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "scm/error.hpp"
#include "scm/text.hpp"

namespace scm {

using nlohmann::json;

std::string to_string(Domain d) {
    switch (d) {
        case Domain::Gender: return "gender";
        case Domain::Race: return "race";
        case Domain::Profession: return "profession";
        case Domain::Religion: return "religion";
    }
    return {};
}

std::optional<Domain> parse_domain(std::string_view bias_type) {
    std::string v = text::fold_case(text::trim(bias_type));
    if (v == "gender") return Domain::Gender;
    if (v == "race" || v == "nationality") return Domain::Race;
    if (v == "profession") return Domain::Profession;
    if (v == "religion") return Domain::Religion;
    return std::nullopt;
}

namespace {

bool context_has_blank(const std::string& context) {
    for (const auto& tok : text::split_whitespace(context))
        if (text::strip_edge_punct(tok) == "BLANK") return true;
    return false;
}

// Candidate sentences keyed by gold label; labels appear either as a
// "gold_label" field or as a sibling "label".
void read_sentences(const json& record, RawRecord& out, bool& complete) {
    bool have_stereo = false, have_anti = false;
    if (!record.contains("sentences") || !record["sentences"].is_array()) {
        complete = false;
        return;
    }
    for (const auto& s : record["sentences"]) {
        if (!s.is_object() || !s.contains("sentence")) continue;
        std::string label;
        if (s.contains("gold_label") && s["gold_label"].is_string())
            label = s["gold_label"].get<std::string>();
        else if (s.contains("label") && s["label"].is_string())
            label = s["label"].get<std::string>();
        label = text::fold_case(label);
        std::string sentence = s["sentence"].get<std::string>();
        if (label == "stereotype" && !have_stereo) {
            out.stereotype_sentence = sentence;
            have_stereo = true;
        } else if (label == "anti-stereotype" && !have_anti) {
            out.antistereotype_sentence = sentence;
            have_anti = true;
        } else if (label == "unrelated" && out.unrelated_sentence.empty()) {
            out.unrelated_sentence = sentence;
        }
    }
    complete = have_stereo && have_anti;
}

}  // namespace

IngestResult parse_stereoset_stream(std::istream& in, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("malformed StereoSet JSON in " + origin + ": " + e.what());
    }

    const json* intra = nullptr;
    const json* root = &doc;
    if (doc.is_object() && doc.contains("data") && doc["data"].is_object()) root = &doc["data"];
    if (root->is_object() && root->contains("intrasentence")) intra = &(*root)["intrasentence"];

    IngestResult result;
    if (!intra || !intra->is_array()) {
        bool has_inter = root->is_object() && root->contains("intersentence");
        if (has_inter) {
            result.report.intersentence_only = true;
            return result;
        }
        throw ParseError("no intra-sentence section found in " + origin);
    }

    for (const auto& rec : *intra) {
        if (!rec.is_object() || !rec.contains("target") || !rec.contains("context")) {
            ++result.report.skipped_incomplete;
            continue;
        }
        RawRecord out;
        out.id = rec.value("id", "");
        out.target = rec["target"].get<std::string>();
        out.context = rec["context"].get<std::string>();

        auto domain = parse_domain(rec.value("bias_type", ""));
        if (!domain) {
            ++result.report.skipped_incomplete;
            continue;
        }
        out.domain = *domain;

        if (!context_has_blank(out.context)) {
            ++result.report.skipped_no_blank;
            continue;
        }
        bool complete = false;
        read_sentences(rec, out, complete);
        if (!complete) {
            ++result.report.skipped_incomplete;
            continue;
        }
        result.records.push_back(std::move(out));
    }
    result.report.records = result.records.size();
    return result;
}

IngestResult parse_stereoset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open corpus file: " + path);
    return parse_stereoset_stream(in, path);
}

namespace {

std::string normalize_token(std::string_view tok) {
    return text::fold_case(text::strip_edge_punct(tok));
}

}  // namespace

std::optional<std::string> extract_fill_word(const std::string& context,
                                             const std::string& sentence) {
    auto ctx_tokens = text::split_whitespace(context);
    auto sent_tokens = text::split_whitespace(sentence);

    // Exactly one BLANK token in the context.
    std::size_t blank_index = ctx_tokens.size();
    std::size_t blank_count = 0;
    for (std::size_t i = 0; i < ctx_tokens.size(); ++i) {
        if (text::strip_edge_punct(ctx_tokens[i]) == "BLANK") {
            blank_index = i;
            ++blank_count;
        }
    }
    if (blank_count != 1) return std::nullopt;

    std::size_t prefix_len = blank_index;
    std::size_t suffix_len = ctx_tokens.size() - blank_index - 1;
    if (sent_tokens.size() < prefix_len + suffix_len + 1) return std::nullopt;  // empty span

    for (std::size_t i = 0; i < prefix_len; ++i)
        if (normalize_token(ctx_tokens[i]) != normalize_token(sent_tokens[i])) return std::nullopt;
    for (std::size_t i = 0; i < suffix_len; ++i) {
        const auto& ctx_tok = ctx_tokens[ctx_tokens.size() - 1 - i];
        const auto& sent_tok = sent_tokens[sent_tokens.size() - 1 - i];
        if (normalize_token(ctx_tok) != normalize_token(sent_tok)) return std::nullopt;
    }

    std::vector<std::string> span(sent_tokens.begin() + static_cast<std::ptrdiff_t>(prefix_len),
                                  sent_tokens.end() - static_cast<std::ptrdiff_t>(suffix_len));
    // Strip punctuation at the span edges only; inner tokens stay intact.
    span.front() = std::string(text::strip_edge_punct(span.front()));
    if (span.size() > 1) span.back() = std::string(text::strip_edge_punct(span.back()));

    std::string joined;
    for (const auto& tok : span) {
        if (!joined.empty()) joined += ' ';
        joined += tok;
    }
    joined = text::fold_case(text::trim(joined));
    if (joined.empty()) return std::nullopt;
    return joined;
}

AssembleResult group_pairs(const std::vector<PairRecord>& pairs,
                           const std::vector<std::string>& excluded_targets) {
    std::set<std::string> excluded;
    for (const auto& t : excluded_targets) excluded.insert(text::fold_case(text::trim(t)));

    // Group by case-folded target name; map order keeps output deterministic.
    std::map<std::string, TargetGroup> groups;
    std::set<std::string> excluded_seen;
    for (const auto& p : pairs) {
        std::string key = text::fold_case(text::trim(p.target));
        if (key.empty()) continue;
        if (excluded.count(key)) {
            excluded_seen.insert(key);
            continue;
        }
        std::string stereo = text::fold_case(text::trim(p.stereotype));
        std::string anti = text::fold_case(text::trim(p.antistereotype));
        if (stereo.empty() || anti.empty()) continue;
        auto it = groups.find(key);
        if (it == groups.end()) {
            TargetGroup g;
            g.name = key;
            g.domain = p.domain;
            it = groups.emplace(key, std::move(g)).first;
        }
        it->second.pairs.push_back({stereo, anti, p.annotator_id});
    }

    AssembleResult result;
    std::size_t total_pairs = 0;
    for (auto& [key, group] : groups) {
        total_pairs += group.pairs.size();
        result.groups.push_back(std::move(group));
    }
    result.report.excluded_targets = excluded_seen.size();
    result.report.group_count = result.groups.size();
    result.report.mean_pairs_per_group =
        result.groups.empty() ? 0.0
                              : static_cast<double>(total_pairs) /
                                    static_cast<double>(result.groups.size());
    return result;
}

AssembleResult assemble_groups(const std::vector<RawRecord>& records,
                               const std::vector<std::string>& excluded_targets) {
    std::vector<PairRecord> pairs;
    std::size_t failures = 0;
    for (const auto& rec : records) {
        auto stereo = extract_fill_word(rec.context, rec.stereotype_sentence);
        auto anti = extract_fill_word(rec.context, rec.antistereotype_sentence);
        if (!stereo || !anti) {
            ++failures;
            continue;
        }
        pairs.push_back({rec.target, rec.domain, *stereo, *anti, rec.id});
    }
    AssembleResult result = group_pairs(pairs, excluded_targets);
    result.report.extraction_failures = failures;
    return result;
}

void write_normalized_corpus(std::ostream& out, const std::vector<TargetGroup>& groups) {
    for (const auto& group : groups) {
        for (const auto& pair : group.pairs) {
            json obj;
            obj["target"] = group.name;
            obj["domain"] = to_string(group.domain);
            obj["stereotype"] = pair.stereotype;
            obj["antistereotype"] = pair.antistereotype;
            if (!pair.annotator_id.empty()) obj["annotator_id"] = pair.annotator_id;
            out << obj.dump() << '\n';
        }
    }
}

std::vector<PairRecord> read_normalized_corpus(std::istream& in, const std::string& origin) {
    std::vector<PairRecord> pairs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (text::trim(line).empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError("malformed corpus line " + std::to_string(lineno) + " in " + origin +
                             ": " + e.what());
        }
        if (!obj.is_object() || !obj.contains("target") || !obj.contains("stereotype") ||
            !obj.contains("antistereotype"))
            throw ParseError("corpus line " + std::to_string(lineno) + " in " + origin +
                             " lacks required fields");
        auto domain = parse_domain(obj.value("domain", ""));
        if (!domain)
            throw ParseError("corpus line " + std::to_string(lineno) + " in " + origin +
                             ": unknown domain");
        pairs.push_back({obj["target"].get<std::string>(), *domain,
                         obj["stereotype"].get<std::string>(),
                         obj["antistereotype"].get<std::string>(), obj.value("annotator_id", "")});
    }
    return pairs;
}

AssembleResult load_corpus(const std::string& path,
                           const std::vector<std::string>& excluded_targets,
                           IngestReport* ingest_report) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw Error("cannot open corpus file: " + path);
    std::string first_line;
    std::getline(probe, first_line);
    probe.close();

    // A normalized-corpus line is a complete JSON object with pair fields;
    // anything else is treated as a StereoSet document.
    bool looks_normalized = false;
    {
        json obj = json::parse(first_line, nullptr, false);
        looks_normalized = obj.is_object() && obj.contains("target") &&
                           obj.contains("stereotype") && obj.contains("antistereotype");
    }

    if (looks_normalized) {
        std::ifstream in(path, std::ios::binary);
        auto pairs = read_normalized_corpus(in, path);
        if (ingest_report) *ingest_report = IngestReport{pairs.size(), 0, 0, false, false};
        return group_pairs(pairs, excluded_targets);
    }

    IngestResult ingest = parse_stereoset(path);
    ingest.report.from_stereoset = true;
    if (ingest_report) *ingest_report = ingest.report;
    return assemble_groups(ingest.records, excluded_targets);
}

}  // namespace scm
