#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "scm/error.hpp"
#include "scm/polar.hpp"
#include "test_support.hpp"

using namespace scm;

namespace {

// Independent least-squares oracle: solve dir^T E ~= v with Eigen's
// column-pivoting QR, never touching the implementation's normal equations.
PolarPoint lsq_oracle(const PolarSubspace& sub, const Vector& v) {
    const size_t d = sub.dim();
    Eigen::MatrixXd a(d, 2);
    Eigen::VectorXd b(d);
    for (size_t i = 0; i < d; ++i) {
        a(static_cast<Eigen::Index>(i), 0) = sub.dir1()[i];
        a(static_cast<Eigen::Index>(i), 1) = sub.dir2()[i];
        b(static_cast<Eigen::Index>(i)) = v[i];
    }
    Eigen::Vector2d e = a.colPivHouseholderQr().solve(b);
    return {e(0), e(1)};
}

Vector random_unit(std::mt19937& rng, size_t d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(d);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto& x : v) {
            x = gauss(rng);
            n2 += x * x;
        }
    } while (n2 < 1e-12);
    vecmath::scale_in_place(v, 1.0 / std::sqrt(n2));
    return v;
}

}  // namespace

TEST_CASE("toy axes follow the seed-mean difference") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());
    CHECK(sub.dir1() == Vector{2, 0, 0, 0});
    CHECK(sub.dir2() == Vector{0, 2, 0, 0});
    auto gi = sub.gram_inverse();
    CHECK(gi[0] == doctest::Approx(0.25));
    CHECK(gi[1] == doctest::Approx(0.0));
    CHECK(gi[3] == doctest::Approx(0.25));
}

TEST_CASE("two seeds per cell average before differencing") {
    // oracle by hand: mean{e1, e3} - mean{-e1, -e3} = (1, 0, 1, 0)
    auto space = EmbeddingSpace::build(4, {
                                              {"a", {1, 0, 0, 0}},
                                              {"b", {0, 0, 1, 0}},
                                              {"c", {-1, 0, 0, 0}},
                                              {"d", {0, 0, -1, 0}},
                                              {"e", {0, 1, 0, 0}},
                                              {"f", {0, -1, 0, 0}},
                                          });
    SeedSets seeds;
    seeds.warm_pos = {"a", "b"};
    seeds.warm_neg = {"c", "d"};
    seeds.comp_pos = {"e"};
    seeds.comp_neg = {"f"};
    auto sub = PolarSubspace::build(space, seeds);
    CHECK(sub.dir1() == Vector{1, 0, 1, 0});
}

TEST_CASE("identical pole seeds give a zero direction error") {
    auto space = EmbeddingSpace::build(4, {
                                              {"a", {1, 0, 0, 0}},
                                              {"u", {0, 1, 0, 0}},
                                              {"d", {0, -1, 0, 0}},
                                          });
    SeedSets seeds;
    seeds.warm_pos = {"a"};
    seeds.warm_neg = {"a"};
    seeds.comp_pos = {"u"};
    seeds.comp_neg = {"d"};
    CHECK_THROWS_AS(PolarSubspace::build(space, seeds), Error);
}

TEST_CASE("near-parallel directions are rejected") {
    CHECK_THROWS_AS(PolarSubspace::from_directions({1, 0, 0}, {1, 1e-8, 0}), Error);
}

TEST_CASE("OOV seeds are skipped and reported") {
    auto space = scm_test::toy_space();
    SeedSets seeds = scm_test::toy_seeds();
    seeds.warm_pos = {"hot", "ghost"};
    AxisReport report;
    auto sub = PolarSubspace::build(space, seeds, false, &report);
    CHECK(report.oov_warm_pos == std::vector<std::string>{"ghost"});
    CHECK(report.used_warm_pos == 1);
    CHECK(sub.dir1() == Vector{2, 0, 0, 0});

    seeds.warm_pos = {"ghost"};
    CHECK_THROWS_AS(PolarSubspace::build(space, seeds), Error);
}

TEST_CASE("projection matches the frozen toy values") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds());

    PolarPoint p = sub.project(Vector{1, 0, 0, 0});
    CHECK(p.warmth == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.competence == doctest::Approx(0.0));

    PolarPoint q = sub.project(Vector{0.6, 0.8, 0, 0});
    CHECK(q.warmth == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(q.competence == doctest::Approx(0.4).epsilon(1e-12));

    // component orthogonal to both axes projects to the origin
    PolarPoint z = sub.project(Vector{0, 0, 1, 0});
    CHECK(z.warmth == doctest::Approx(0.0));
    CHECK(z.competence == doctest::Approx(0.0));
}

TEST_CASE("the stored gram inverse actually inverts the gram matrix") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        auto sub = PolarSubspace::from_directions(random_unit(rng, 16), random_unit(rng, 16));
        auto g = sub.gram();
        auto gi = sub.gram_inverse();
        double product[4] = {
            gi[0] * g[0] + gi[1] * g[2], gi[0] * g[1] + gi[1] * g[3],
            gi[2] * g[0] + gi[3] * g[2], gi[2] * g[1] + gi[3] * g[3],
        };
        CHECK(std::abs(product[0] - 1.0) < 1e-9);
        CHECK(std::abs(product[1]) < 1e-9);
        CHECK(std::abs(product[2]) < 1e-9);
        CHECK(std::abs(product[3] - 1.0) < 1e-9);
    }
}

TEST_CASE("projection equals an independent least-squares solve") {
    std::mt19937 rng(42);
    auto dir1 = random_unit(rng, 12);
    auto dir2 = random_unit(rng, 12);
    auto sub = PolarSubspace::from_directions(dir1, dir2);
    for (int trial = 0; trial < 200; ++trial) {
        Vector v = random_unit(rng, 12);
        PolarPoint mine = sub.project(v);
        PolarPoint oracle = lsq_oracle(sub, v);
        CHECK(std::abs(mine.warmth - oracle.warmth) < 1e-9);
        CHECK(std::abs(mine.competence - oracle.competence) < 1e-9);
    }
}

TEST_CASE("reconstruction holds for vectors inside the span") {
    std::mt19937 rng(7);
    auto sub = PolarSubspace::from_directions(random_unit(rng, 8), random_unit(rng, 8));
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        double a = coef(rng), b = coef(rng);
        Vector v(8);
        for (size_t i = 0; i < 8; ++i) v[i] = a * sub.dir1()[i] + b * sub.dir2()[i];
        PolarPoint p = sub.project(v);
        for (size_t i = 0; i < 8; ++i) {
            double rebuilt = p.warmth * sub.dir1()[i] + p.competence * sub.dir2()[i];
            CHECK(std::abs(rebuilt - v[i]) < 1e-9);
        }
    }
}

TEST_CASE("projection is linear") {
    std::mt19937 rng(13);
    auto sub = PolarSubspace::from_directions(random_unit(rng, 6), random_unit(rng, 6));
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        Vector u = random_unit(rng, 6), v = random_unit(rng, 6);
        double a = coef(rng), b = coef(rng);
        Vector mix(6);
        for (size_t i = 0; i < 6; ++i) mix[i] = a * u[i] + b * v[i];
        PolarPoint pm = sub.project(mix);
        PolarPoint pu = sub.project(u);
        PolarPoint pv = sub.project(v);
        CHECK(std::abs(pm.warmth - (a * pu.warmth + b * pv.warmth)) < 1e-9);
        CHECK(std::abs(pm.competence - (a * pu.competence + b * pv.competence)) < 1e-9);
    }
}

TEST_CASE("standard basis directions in 2-D make projection the identity") {
    auto sub = PolarSubspace::from_directions({1, 0}, {0, 1});
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        Vector v{coord(rng), coord(rng)};
        PolarPoint p = sub.project(v);
        CHECK(p.warmth == doctest::Approx(v[0]).epsilon(1e-12));
        CHECK(p.competence == doctest::Approx(v[1]).epsilon(1e-12));
    }
}

TEST_CASE("project rejects mismatched dimensions") {
    auto sub = PolarSubspace::from_directions({1, 0, 0}, {0, 1, 0});
    CHECK_THROWS_AS(sub.project(Vector{1, 0}), Error);
}

TEST_CASE("classify_point follows the sign and salience rules") {
    auto hc_hw = classify_point({0.3, 0.4});
    CHECK(hc_hw.quadrant == Quadrant::HC_HW);
    CHECK(hc_hw.salient == Dimension::Competence);

    auto hc_lw = classify_point({-0.2, 0.1});
    CHECK(hc_lw.quadrant == Quadrant::HC_LW);
    CHECK(hc_lw.salient == Dimension::Warmth);

    // zero coordinate classifies as low
    auto lc_lw = classify_point({0.0, -0.5});
    CHECK(lc_lw.quadrant == Quadrant::LC_LW);
    CHECK(lc_lw.salient == Dimension::Competence);

    auto tie = classify_point({0.5, -0.5});
    CHECK(tie.salient == Dimension::Warmth);
    CHECK(tie.salience_tie);
}

TEST_CASE("classification is invariant under positive scaling") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> scale(0.01, 50.0);
    for (int trial = 0; trial < 500; ++trial) {
        PolarPoint p{coord(rng), coord(rng)};
        double s = scale(rng);
        auto base = classify_point(p);
        auto scaled = classify_point({p.warmth * s, p.competence * s});
        CHECK(base.quadrant == scaled.quadrant);
        CHECK(base.salient == scaled.salient);
    }
}

TEST_CASE("normalize-axes option rescales directions to unit length") {
    auto space = scm_test::toy_space();
    auto sub = PolarSubspace::build(space, scm_test::toy_seeds(), true);
    CHECK(vecmath::norm(sub.dir1()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vecmath::norm(sub.dir2()) == doctest::Approx(1.0).epsilon(1e-12));
    // scaling both axes rescales coordinates but never changes signs
    PolarPoint p = sub.project(Vector{1, 0, 0, 0});
    CHECK(p.warmth == doctest::Approx(1.0).epsilon(1e-12));
}
