#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "scm/embedding.hpp"
#include "scm/lexicon.hpp"
#include "scm/vecmath.hpp"

namespace scm {

/// A point on the warmth-competence plane.
struct PolarPoint {
    double warmth = 0.0;
    double competence = 0.0;
};

/// Sign quadrants of the plane. HC/LC = high/low competence,
/// HW/LW = high/low warmth. Ordered as the analysis tables list them.
enum class Quadrant { HC_HW = 0, LC_HW = 1, LC_LW = 2, HC_LW = 3 };

std::string to_string(Quadrant q);

struct PointClass {
    Quadrant quadrant;
    Dimension salient;       // larger |coordinate|; ties go to warmth
    bool salience_tie = false;
};

/// Quadrant by coordinate signs (coordinate > 0 is "high", <= 0 is "low")
/// plus the salient dimension.
PointClass classify_point(const PolarPoint& p);

/// Out-of-vocabulary seeds found while building the axes, per cell.
struct AxisReport {
    std::vector<std::string> oov_warm_pos, oov_warm_neg, oov_comp_pos, oov_comp_neg;
    std::size_t used_warm_pos = 0, used_warm_neg = 0, used_comp_pos = 0, used_comp_neg = 0;
};

/// The 2-D warmth-competence subspace: two direction vectors built from the
/// seed pools (difference of per-pole means, not renormalized) and the
/// precomputed inverse of their 2x2 Gram matrix. Immutable once built;
/// projection is a pure function.
class PolarSubspace {
public:
    /// dir1 = mean(warm_pos) - mean(warm_neg), dir2 likewise for competence.
    /// Seeds missing from the space are skipped and reported. Throws on an
    /// empty in-vocabulary cell, a zero direction, or near-parallel
    /// directions (|det G| <= 1e-12).
    static PolarSubspace build(const EmbeddingSpace& space, const SeedSets& seeds,
                               bool normalize_axes = false, AxisReport* report = nullptr);

    /// Build directly from explicit direction vectors.
    static PolarSubspace from_directions(Vector dir1, Vector dir2);

    /// Least-squares coordinates of v against [dir1; dir2]: the 2x2 normal
    /// equations E = (dir dir^T)^-1 (dir v), i.e. the Moore-Penrose
    /// pseudo-inverse of the stacked direction matrix applied to v.
    PolarPoint project(std::span<const double> v) const;

    std::size_t dim() const { return dir1_.size(); }
    const Vector& dir1() const { return dir1_; }
    const Vector& dir2() const { return dir2_; }
    std::array<double, 4> gram() const { return gram_; }
    std::array<double, 4> gram_inverse() const { return gram_inverse_; }

private:
    Vector dir1_, dir2_;
    std::array<double, 4> gram_{};          // row-major [d1.d1, d1.d2, d2.d1, d2.d2]
    std::array<double, 4> gram_inverse_{};

    void finalize();  // computes gram + inverse, validates
};

}  // namespace scm
