#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "striptex/striptex.hpp"

using namespace striptex;

TEST_CASE("entropy of a delta profile is exactly zero", "[slant]") {
    CHECK(entropy(profile_from_counts({42})) == 0.0);
}

TEST_CASE("entropy of a uniform profile is ln(bins)", "[slant]") {
    CHECK(std::abs(entropy(profile_from_counts({3, 3, 3, 3, 3, 3, 3, 3})) - std::log(8.0)) < 1e-12);
    CHECK(std::abs(entropy(profile_from_counts({5, 5})) - std::log(2.0)) < 1e-12);
}

TEST_CASE("zero bins contribute nothing", "[slant]") {
    CHECK(std::abs(entropy(profile_from_counts({4, 0, 0, 4})) - std::log(2.0)) < 1e-12);
}

TEST_CASE("entropy stays within [0, ln n] and ignores bin order", "[slant]") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 40);
        std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
        for (auto& c : counts) c = 1 + static_cast<std::int64_t>(rng() % 50);

        const double h = entropy(profile_from_counts(counts));
        CHECK(h >= 0.0);
        CHECK(h <= std::log(static_cast<double>(n)) + 1e-12);

        std::shuffle(counts.begin(), counts.end(), rng);
        CHECK(std::abs(entropy(profile_from_counts(counts)) - h) < 1e-12);
    }
}

TEST_CASE("a profile that does not sum to one is rejected", "[slant]") {
    ProjectionProfile p = profile_from_counts({1, 1});
    p.normalized = {0.5, 0.6};
    try {
        entropy(p);
        FAIL("expected NotNormalized");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_normalized);
    }

    ProjectionProfile zero;
    zero.mass = 0;
    try {
        entropy(zero);
        FAIL("expected EmptyImage");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_image);
    }
}

namespace {

EntropyCurve curve_of(std::vector<double> angles, std::vector<double> values) {
    EntropyCurve c;
    c.angles = std::move(angles);
    c.values = std::move(values);
    c.sub_strip_height = 30;
    return c;
}

} // namespace

TEST_CASE("symmetric bracket refines to the central angle", "[slant]") {
    const SlantEstimate est = estimate_slant(curve_of({56, 57, 58}, {3, 1, 3}));
    CHECK(est.grid_angle == 57.0);
    CHECK(est.angle == 57.0);
    CHECK(est.entropy_at_min == 1.0);
}

TEST_CASE("asymmetric bracket refines by the parabola vertex", "[slant]") {
    // x* = t1 + step*(v0 - v2) / (2*(v0 - 2*v1 + v2)) = 57 + 1/6
    const SlantEstimate est = estimate_slant(curve_of({56, 57, 58}, {3, 1, 2}));
    CHECK(est.grid_angle == 57.0);
    CHECK(std::abs(est.angle - (57.0 + 1.0 / 6.0)) < 1e-12);
}

TEST_CASE("endpoint minima are reported unrefined", "[slant]") {
    const SlantEstimate down = estimate_slant(curve_of({50, 51, 52, 53}, {4, 3, 2, 1}));
    CHECK(down.grid_angle == 53.0);
    CHECK(down.angle == 53.0);

    const SlantEstimate up = estimate_slant(curve_of({50, 51, 52, 53}, {1, 2, 3, 4}));
    CHECK(up.grid_angle == 50.0);
    CHECK(up.angle == 50.0);
}

TEST_CASE("minimum ties break toward the smaller angle", "[slant]") {
    const SlantEstimate est = estimate_slant(curve_of({60, 61, 62, 63, 64}, {5, 2, 3, 2, 5}));
    CHECK(est.grid_angle == 61.0);
}

TEST_CASE("refinement stays within half a grid step of the argmin", "[slant]") {
    // With the center sample lowest, the vertex offset (a-b)/(2(a+b)) is
    // bounded by 1/2; the extreme is a tie with one neighbor.
    const SlantEstimate tied = estimate_slant(curve_of({56, 57, 58}, {3, 1, 1}));
    CHECK(tied.grid_angle == 57.0);
    CHECK(std::abs(tied.angle - 57.5) < 1e-12);

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values(9);
        for (double& v : values) v = 1.0 + static_cast<double>(rng() % 1000) / 500.0;
        std::vector<double> angles(9);
        for (int i = 0; i < 9; ++i) angles[static_cast<std::size_t>(i)] = 50.0 + i;
        const SlantEstimate est = estimate_slant(curve_of(angles, values));
        CHECK(std::abs(est.angle - est.grid_angle) <= 0.5 + 1e-12);
    }
}

TEST_CASE("scaling the curve leaves the estimate unchanged", "[slant]") {
    const EntropyCurve base = curve_of({70, 71, 72, 73, 74}, {2.0, 1.4, 1.1, 1.6, 2.2});
    const SlantEstimate a = estimate_slant(base);
    EntropyCurve scaled = base;
    for (double& v : scaled.values) v *= 3.5;
    const SlantEstimate b = estimate_slant(scaled);
    CHECK(a.grid_angle == b.grid_angle);
    CHECK(std::abs(a.angle - b.angle) < 1e-9);
}

TEST_CASE("curves shorter than three points are rejected", "[slant]") {
    try {
        estimate_slant(curve_of({56, 57}, {1, 2}));
        FAIL("expected CurveTooShort");
    } catch (const error& e) {
        CHECK(e.code() == errc::curve_too_short);
    }
}

TEST_CASE("entropy curve recovers the generator slant", "[slant]") {
    SynthConfig cfg;
    cfg.rows = 150;
    cfg.cols = 2000;
    cfg.angle = 57.0;
    cfg.stroke_len = 75;
    cfg.stroke_count = 30;
    cfg.gap_period = 60;
    cfg.jitter = 0;
    cfg.seed = 5;
    const BinaryImage strip = synth_strokes(cfg);

    const EntropyCurve curve = entropy_curve(strip, AngleGrid(40, 80, 1), 30);
    const SlantEstimate est = estimate_slant(curve);
    CHECK(std::abs(est.angle - 57.0) <= 2.0);
    CHECK(std::abs(est.grid_angle - 57.0) <= 2.0);
}

TEST_CASE("vertical strokes estimate to 90 degrees", "[slant]") {
    SynthConfig cfg;
    cfg.rows = 150;
    cfg.cols = 1500;
    cfg.angle = 90.0;
    cfg.stroke_len = 75;
    cfg.stroke_count = 25;
    cfg.gap_period = 55;
    cfg.jitter = 1;
    cfg.seed = 9;
    const BinaryImage strip = synth_strokes(cfg);

    const SlantEstimate est = estimate_slant(entropy_curve(strip, AngleGrid(80, 100, 1), 30));
    CHECK(std::abs(est.angle - 90.0) <= 2.0);
}

TEST_CASE("too-square reshapes are refused with the 5x rule named", "[slant]") {
    std::mt19937_64 rng(61);
    const BinaryImage m = random_bits(rng, 40, 60, 400);
    try {
        entropy_curve(m, AngleGrid::default_grid(), 40); // joined 40x60, needs >= 200 wide
        FAIL("expected AspectTooSquare");
    } catch (const error& e) {
        CHECK(e.code() == errc::aspect_too_square);
        CHECK(std::string(e.what()).find("5 x height") != std::string::npos);
    }
}

TEST_CASE("entropy curve needs ink and at least three grid angles", "[slant]") {
    BinaryImage blank;
    blank.rows = 30;
    blank.cols = 300;
    blank.bits.assign(30 * 300, 0);
    try {
        entropy_curve(blank, AngleGrid::default_grid(), 30);
        FAIL("expected EmptyImage");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_image);
    }

    std::mt19937_64 rng(67);
    const BinaryImage m = random_bits(rng, 30, 300, 300);
    try {
        entropy_curve(m, AngleGrid(88, 92, 10), 30); // single angle
        FAIL("expected BadConfig");
    } catch (const error& e) {
        CHECK(e.code() == errc::bad_config);
    }
}
