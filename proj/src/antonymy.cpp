#include "scm/antonymy.hpp"

#include <fstream>

#include "scm/error.hpp"
#include "scm/text.hpp"

namespace scm {

namespace {

// Porter-style letter classification: y acts as a vowel after a consonant.
bool is_vowel(const std::string& w, std::size_t i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return true;
    if (c == 'y') return i > 0 && !is_vowel(w, i - 1);
    return false;
}

// Number of vowel->consonant transitions ([C](VC)^m[V]).
int measure(const std::string& w) {
    int m = 0;
    bool prev_vowel = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool v = is_vowel(w, i);
        if (prev_vowel && !v) ++m;
        prev_vowel = v;
    }
    return m;
}

// consonant-vowel-consonant ending with the final consonant not w/x/y.
bool ends_cvc(const std::string& w) {
    std::size_t n = w.size();
    if (n < 3) return false;
    if (is_vowel(w, n - 3) || !is_vowel(w, n - 2) || is_vowel(w, n - 1)) return false;
    char last = w[n - 1];
    return last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool ends_double_consonant(const std::string& w) {
    std::size_t n = w.size();
    if (n < 2 || w[n - 1] != w[n - 2]) return false;
    if (is_vowel(w, n - 1)) return false;
    char c = w[n - 1];
    return c != 'l' && c != 's' && c != 'z';
}

void parse_list_file(const std::string& path, std::map<std::string, std::set<std::string>>& table,
                     std::size_t& rows, std::size_t& self_warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open resource file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(path + " line " + std::to_string(lineno) + ": expected word<TAB>list");
        std::string word = text::fold_case(text::trim(line.substr(0, tab)));
        if (word.empty()) continue;
        std::set<std::string> values;
        bool had_self = false;
        for (const auto& item : text::split(line.substr(tab + 1), ',')) {
            std::string v = text::fold_case(text::trim(item));
            if (v.empty()) continue;
            if (v == word) {
                had_self = true;
                continue;
            }
            values.insert(std::move(v));
        }
        if (had_self) ++self_warnings;
        ++rows;
        if (values.empty()) continue;  // row reduced to nothing
        table[word].insert(values.begin(), values.end());
    }
}

}  // namespace

AntonymResource AntonymResource::load(const std::string& antonym_path,
                                      const std::string& synonym_path,
                                      const std::string& lemma_path, LoadStats* stats) {
    AntonymResource res;
    LoadStats local;
    LoadStats& st = stats ? *stats : local;

    parse_list_file(antonym_path, res.antonyms_, st.antonym_rows, st.self_reference_warnings);
    if (!synonym_path.empty())
        parse_list_file(synonym_path, res.synonyms_, st.synonym_rows, st.self_reference_warnings);

    if (!lemma_path.empty()) {
        std::ifstream in(lemma_path, std::ios::binary);
        if (!in) throw Error("cannot open lemma file: " + lemma_path);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (text::trim(line).empty()) continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw ParseError(lemma_path + " line " + std::to_string(lineno) +
                                 ": expected word<TAB>lemma");
            std::string word = text::fold_case(text::trim(line.substr(0, tab)));
            std::string lemma = text::fold_case(text::trim(line.substr(tab + 1)));
            if (word.empty() || lemma.empty()) continue;
            res.lemma_vocab_.insert(word);
            res.lemma_vocab_.insert(lemma);
            res.lemma_table_.emplace(std::move(word), std::move(lemma));
            ++st.lemma_rows;
        }
    }
    return res;
}

std::set<std::string> AntonymResource::antonym_set(std::string_view word) const {
    std::string w = text::fold_case(text::trim(word));
    std::set<std::string> out;
    if (auto it = antonyms_.find(w); it != antonyms_.end())
        out.insert(it->second.begin(), it->second.end());
    if (auto syn = synonyms_.find(w); syn != synonyms_.end()) {
        for (const auto& s : syn->second) {
            if (auto it = antonyms_.find(s); it != antonyms_.end())
                out.insert(it->second.begin(), it->second.end());
        }
    }
    return out;
}

bool AntonymResource::dictionary_has(const std::string& w) const {
    return lemma_vocab_.count(w) != 0;
}

std::string AntonymResource::rule_lemma(const std::string& w) const {
    bool table = !lemma_table_.empty();

    if (ends_with(w, "ies") && w.size() >= 5) return w.substr(0, w.size() - 3) + "y";

    if (ends_with(w, "es") && w.size() >= 4) {
        std::string keep_e = w.substr(0, w.size() - 1);
        std::string strip = w.substr(0, w.size() - 2);
        if (table) {
            if (dictionary_has(keep_e)) return keep_e;
            if (dictionary_has(strip)) return strip;
        }
        return strip;
    }

    if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() >= 3)
        return w.substr(0, w.size() - 1);

    for (std::string_view suffix : {"ing", "ed"}) {
        if (!ends_with(w, suffix) || w.size() < suffix.size() + 2) continue;
        std::string stem = w.substr(0, w.size() - suffix.size());
        if (ends_double_consonant(stem)) return stem.substr(0, stem.size() - 1);
        if (table) {
            if (dictionary_has(stem + "e")) return stem + "e";
            if (dictionary_has(stem)) return stem;
        }
        if (measure(stem) == 1 && ends_cvc(stem)) return stem + "e";
        return stem;
    }

    return w;
}

std::string AntonymResource::lemma(std::string_view word) const {
    std::string w = text::fold_case(text::trim(word));
    if (auto it = lemma_table_.find(w); it != lemma_table_.end()) return it->second;
    return rule_lemma(w);
}

bool AntonymResource::is_antonym_match(std::string_view stereotype,
                                       std::string_view antistereotype) const {
    std::string target = lemma(antistereotype);
    for (const auto& antonym : antonym_set(stereotype))
        if (lemma(antonym) == target) return true;
    return false;
}

}  // namespace scm
