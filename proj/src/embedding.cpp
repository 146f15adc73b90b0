#include "scm/embedding.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "scm/error.hpp"
#include "scm/text.hpp"

namespace scm {

namespace {

bool parse_double(std::string_view s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_positive_size(std::string_view s, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && out > 0;
}

}  // namespace

EmbeddingSpace EmbeddingSpace::build(std::size_t dim,
                                     const std::vector<std::pair<std::string, Vector>>& entries,
                                     std::string source_tag) {
    if (dim == 0) throw Error("embedding dimension must be positive");
    EmbeddingSpace space;
    space.dim_ = dim;
    space.source_tag_ = std::move(source_tag);
    for (const auto& [raw_token, vec] : entries) {
        if (vec.size() != dim) throw Error("entry '" + raw_token + "' has wrong dimension");
        std::string token = text::fold_case(text::trim(raw_token));
        if (token.empty() || text::has_internal_whitespace(token))
            throw Error("invalid token '" + raw_token + "'");
        double n = vecmath::norm(vec);
        if (n < 1e-12) throw Error("entry '" + raw_token + "' has zero norm");
        if (space.index_.count(token)) continue;  // keep first occurrence
        space.index_.emplace(token, space.tokens_.size());
        space.tokens_.push_back(token);
        for (double x : vec) space.data_.push_back(static_cast<float>(x / n));
    }
    return space;
}

Vector EmbeddingSpace::row(std::size_t i) const {
    Vector out(dim_);
    const float* p = data_.data() + i * dim_;
    for (std::size_t k = 0; k < dim_; ++k) out[k] = p[k];
    return out;
}

bool EmbeddingSpace::contains(std::string_view token) const {
    return index_.count(text::fold_case(token)) != 0;
}

std::optional<Vector> EmbeddingSpace::lookup(std::string_view token) const {
    auto it = index_.find(text::fold_case(token));
    if (it == index_.end()) return std::nullopt;
    return row(it->second);
}

std::optional<Vector> EmbeddingSpace::phrase_vector(std::string_view phrase) const {
    // Split on whitespace and hyphens.
    std::vector<std::string> parts;
    std::string current;
    for (char c : phrase) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '-') {
            if (!current.empty()) parts.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) parts.push_back(std::move(current));

    Vector acc(dim_, 0.0);
    std::size_t found = 0;
    for (const auto& part : parts) {
        if (auto v = lookup(part)) {
            vecmath::add_in_place(acc, *v);
            ++found;
        }
    }
    if (found == 0) return std::nullopt;
    vecmath::scale_in_place(acc, 1.0 / static_cast<double>(found));
    double n = vecmath::norm(acc);
    if (n < 1e-12) return std::nullopt;  // antipodal parts cancel out
    vecmath::scale_in_place(acc, 1.0 / n);
    return acc;
}

std::optional<Vector> EmbeddingSpace::resolve(std::string_view term) const {
    if (auto v = lookup(term)) return v;
    return phrase_vector(term);
}

EmbeddingSpace::MeanResult EmbeddingSpace::mean_vector(const std::vector<std::string>& tokens) const {
    MeanResult result;
    result.mean.assign(dim_, 0.0);
    for (const auto& token : tokens) {
        if (auto v = resolve(token)) {
            vecmath::add_in_place(result.mean, *v);
            ++result.resolved_count;
        } else {
            result.unresolved.push_back(text::fold_case(token));
        }
    }
    if (result.resolved_count == 0) throw Error("mean_vector: no resolvable token");
    vecmath::scale_in_place(result.mean, 1.0 / static_cast<double>(result.resolved_count));
    return result;
}

struct EmbeddingLoader {
    static LoadResult run(const std::string& path, const LoadOptions& options) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open embeddings file: " + path);

        LoadResult result;
        EmbeddingSpace& space = result.space;
        LoadReport& report = result.report;

        space.source_tag_ = options.source_tag.empty()
                                ? std::filesystem::path(path).stem().string()
                                : options.source_tag;

        std::string line;
        if (!std::getline(in, line)) throw ParseError("embeddings file is empty: " + path);
        if (!line.empty() && line.back() == '\r') line.pop_back();

        auto first_tokens = text::split_whitespace(line);
        std::size_t header_vocab = 0, header_dim = 0;
        bool is_header = first_tokens.size() == 2 &&
                         parse_positive_size(first_tokens[0], header_vocab) &&
                         parse_positive_size(first_tokens[1], header_dim);

        std::size_t dim = 0;
        if (is_header) {
            report.header_present = true;
            dim = header_dim;
        } else {
            if (first_tokens.size() < 2)
                throw ParseError("cannot infer embedding dimension from first line of " + path);
            dim = first_tokens.size() - 1;
        }
        space.dim_ = dim;

        Vector scratch(dim);
        auto consume = [&](const std::vector<std::string>& tokens) {
            ++report.lines_scanned;
            if (tokens.size() != dim + 1) {
                ++report.malformed;
                return;
            }
            for (std::size_t k = 0; k < dim; ++k) {
                if (!parse_double(tokens[k + 1], scratch[k])) {
                    ++report.malformed;
                    return;
                }
            }
            std::string token = text::fold_case(tokens[0]);
            double n = vecmath::norm(scratch);
            if (n < 1e-12) {
                ++report.zero_norm;
                return;
            }
            if (space.index_.count(token)) {
                ++report.duplicates;
                return;
            }
            space.index_.emplace(token, space.tokens_.size());
            space.tokens_.push_back(std::move(token));
            for (double x : scratch) space.data_.push_back(static_cast<float>(x / n));
        };

        if (!is_header) consume(first_tokens);

        while ((!options.limit || space.size() < *options.limit) && std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (text::trim(line).empty()) continue;
            consume(text::split_whitespace(line));
        }

        report.loaded = space.size();
        report.bad_line_budget = static_cast<std::size_t>(
            std::ceil(options.bad_line_budget_fraction * static_cast<double>(report.lines_scanned)));
        if (report.malformed > report.bad_line_budget)
            throw ParseError("embeddings file " + path + ": " + std::to_string(report.malformed) +
                             " malformed lines exceed budget of " +
                             std::to_string(report.bad_line_budget));
        if (space.size() == 0) throw ParseError("no vector entries loaded from " + path);
        return result;
    }
};

LoadResult load_embeddings(const std::string& path, const LoadOptions& options) {
    return EmbeddingLoader::run(path, options);
}

}  // namespace scm
