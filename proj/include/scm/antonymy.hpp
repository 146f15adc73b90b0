#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace scm {

/// Offline antonym/synonym/lemma tables loaded from TSV resources. All keys
/// and values are case-folded; a word is never its own antonym. Immutable
/// after load.
class AntonymResource {
public:
    struct LoadStats {
        std::size_t antonym_rows = 0;
        std::size_t synonym_rows = 0;
        std::size_t lemma_rows = 0;
        std::size_t self_reference_warnings = 0;
    };

    /// `antonym_path` is required; the synonym and lemma files are optional
    /// (empty path = table absent, the corresponding expansion is a no-op).
    /// TSV layout: `word<TAB>comma-separated-list`, lemma file
    /// `word<TAB>lemma`.
    static AntonymResource load(const std::string& antonym_path,
                                const std::string& synonym_path = "",
                                const std::string& lemma_path = "",
                                LoadStats* stats = nullptr);

    static AntonymResource empty() { return AntonymResource{}; }

    /// Direct antonyms of `word` plus the antonyms of each synonym of
    /// `word`. Empty set for unknown words.
    std::set<std::string> antonym_set(std::string_view word) const;

    /// Lemma-table lookup when available, else ordered suffix-stripping
    /// rules (-ies, -es, -s, -ing, -ed with undoubling and e-restoration);
    /// identity when no rule applies.
    std::string lemma(std::string_view word) const;

    /// True iff the lemma of `antistereotype` matches the lemma of any
    /// retrieved antonym of `stereotype`. Only the stereotype side is
    /// synonym-expanded.
    bool is_antonym_match(std::string_view stereotype, std::string_view antistereotype) const;

    const std::map<std::string, std::set<std::string>>& antonyms() const { return antonyms_; }
    const std::map<std::string, std::set<std::string>>& synonyms() const { return synonyms_; }
    bool has_lemma_table() const { return !lemma_table_.empty(); }

private:
    std::map<std::string, std::set<std::string>> antonyms_;
    std::map<std::string, std::set<std::string>> synonyms_;
    std::map<std::string, std::string> lemma_table_;
    std::set<std::string> lemma_vocab_;  // table keys and values, for -es/-ing/-ed checks

    bool dictionary_has(const std::string& w) const;
    std::string rule_lemma(const std::string& word) const;
};

}  // namespace scm
