#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "scm/embedding.hpp"
#include "scm/lexicon.hpp"

namespace scm_test {

// Scratch directory removed on destruction; each test gets its own.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& label) {
        path = std::filesystem::temp_directory_path() /
               ("scm_test_" + label + "_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }

    std::filesystem::path file(const std::string& name, const std::string& content) const {
        auto p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::filesystem::path test_data_dir() { return std::filesystem::path(SCM_TEST_DATA_DIR); }

// d=4 space used across the projection tests: hot/cold span the warmth
// axis, up/down the competence axis, big sits between two axes.
inline scm::EmbeddingSpace toy_space() {
    return scm::EmbeddingSpace::build(
        4,
        {
            {"hot", {1, 0, 0, 0}},
            {"cold", {-1, 0, 0, 0}},
            {"up", {0, 1, 0, 0}},
            {"down", {0, -1, 0, 0}},
            {"side", {0, 0, 1, 0}},
            {"big", {3, 0, 4, 0}},
        },
        "toy");
}

inline scm::SeedSets toy_seeds() {
    scm::SeedSets seeds;
    seeds.warm_pos = {"hot"};
    seeds.warm_neg = {"cold"};
    seeds.comp_pos = {"up"};
    seeds.comp_neg = {"down"};
    return seeds;
}

}  // namespace scm_test
