#include "scm/polar.hpp"

#include <cmath>

#include "scm/error.hpp"

namespace scm {

std::string to_string(Quadrant q) {
    switch (q) {
        case Quadrant::HC_HW: return "HC-HW";
        case Quadrant::LC_HW: return "LC-HW";
        case Quadrant::LC_LW: return "LC-LW";
        case Quadrant::HC_LW: return "HC-LW";
    }
    return {};
}

PointClass classify_point(const PolarPoint& p) {
    bool high_warmth = p.warmth > 0.0;
    bool high_comp = p.competence > 0.0;
    Quadrant q = high_comp ? (high_warmth ? Quadrant::HC_HW : Quadrant::HC_LW)
                           : (high_warmth ? Quadrant::LC_HW : Quadrant::LC_LW);
    double aw = std::abs(p.warmth), ac = std::abs(p.competence);
    PointClass out{q, ac > aw ? Dimension::Competence : Dimension::Warmth, ac == aw};
    return out;
}

namespace {

// Mean of the resolved seed vectors for one cell; OOV seeds go to `oov`.
Vector cell_mean(const EmbeddingSpace& space, const std::vector<std::string>& words,
                 const char* name, std::vector<std::string>& oov, std::size_t& used) {
    Vector acc(space.dim(), 0.0);
    used = 0;
    for (const auto& w : words) {
        if (auto v = space.resolve(w)) {
            vecmath::add_in_place(acc, *v);
            ++used;
        } else {
            oov.push_back(w);
        }
    }
    if (used == 0) throw Error(std::string("no in-vocabulary seed words in ") + name + " cell");
    vecmath::scale_in_place(acc, 1.0 / static_cast<double>(used));
    return acc;
}

Vector subtract(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace

PolarSubspace PolarSubspace::build(const EmbeddingSpace& space, const SeedSets& seeds,
                                   bool normalize_axes, AxisReport* report) {
    AxisReport local;
    AxisReport& rep = report ? *report : local;

    Vector wp = cell_mean(space, seeds.warm_pos, "warmth-positive", rep.oov_warm_pos, rep.used_warm_pos);
    Vector wn = cell_mean(space, seeds.warm_neg, "warmth-negative", rep.oov_warm_neg, rep.used_warm_neg);
    Vector cp = cell_mean(space, seeds.comp_pos, "competence-positive", rep.oov_comp_pos, rep.used_comp_pos);
    Vector cn = cell_mean(space, seeds.comp_neg, "competence-negative", rep.oov_comp_neg, rep.used_comp_neg);

    Vector dir1 = subtract(wp, wn);
    Vector dir2 = subtract(cp, cn);
    if (normalize_axes) {
        double n1 = vecmath::norm(dir1), n2 = vecmath::norm(dir2);
        if (n1 < 1e-12 || n2 < 1e-12) throw Error("degenerate polar axis: zero direction");
        vecmath::scale_in_place(dir1, 1.0 / n1);
        vecmath::scale_in_place(dir2, 1.0 / n2);
    }
    return from_directions(std::move(dir1), std::move(dir2));
}

PolarSubspace PolarSubspace::from_directions(Vector dir1, Vector dir2) {
    if (dir1.size() != dir2.size() || dir1.empty())
        throw Error("polar directions must be nonempty and of equal length");
    PolarSubspace sub;
    sub.dir1_ = std::move(dir1);
    sub.dir2_ = std::move(dir2);
    sub.finalize();
    return sub;
}

void PolarSubspace::finalize() {
    if (vecmath::norm(dir1_) < 1e-12 || vecmath::norm(dir2_) < 1e-12)
        throw Error("degenerate polar axis: zero direction");
    gram_[0] = vecmath::dot(dir1_, dir1_);
    gram_[1] = vecmath::dot(dir1_, dir2_);
    gram_[2] = gram_[1];
    gram_[3] = vecmath::dot(dir2_, dir2_);
    double det = gram_[0] * gram_[3] - gram_[1] * gram_[2];
    if (std::abs(det) <= 1e-12)
        throw Error("polar directions are (near-)parallel: |det gram| <= 1e-12");
    gram_inverse_ = {gram_[3] / det, -gram_[1] / det, -gram_[2] / det, gram_[0] / det};
}

PolarPoint PolarSubspace::project(std::span<const double> v) const {
    if (v.size() != dir1_.size())
        throw Error("project: vector length " + std::to_string(v.size()) +
                    " does not match subspace dimension " + std::to_string(dir1_.size()));
    double t1 = vecmath::dot(dir1_, v);
    double t2 = vecmath::dot(dir2_, v);
    return {gram_inverse_[0] * t1 + gram_inverse_[1] * t2,
            gram_inverse_[2] * t1 + gram_inverse_[3] * t2};
}

}  // namespace scm
