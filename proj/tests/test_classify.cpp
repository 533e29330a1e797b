#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "striptex/striptex.hpp"

using namespace striptex;

namespace {

// Small strips keep the O(N^2) autocorrelation cheap in unit tests.
ExtractionConfig small_config() {
    ExtractionConfig cfg{.grid = AngleGrid(40, 80, 1),
                         .heights = {30},
                         .steps = {10},
                         .binarize_method = BinarizeMethod::fixed(128)};
    return cfg;
}

BinaryImage small_strip(double angle, std::uint64_t seed) {
    SynthConfig cfg;
    cfg.rows = 150;
    cfg.cols = 900;
    cfg.angle = angle;
    cfg.stroke_len = 75;
    cfg.stroke_width = 6;
    cfg.stroke_count = 20;
    cfg.gap_period = 25;
    cfg.jitter = 1;
    cfg.seed = seed;
    return synth_strokes(cfg);
}

} // namespace

TEST_CASE("the fingerprint spells out every configuration field", "[classify]") {
    CHECK(ExtractionConfig{}.fingerprint() ==
          "grid=30.0:150.0:1.0;heights=30,50;steps=5,10,15,20,25,30;binarize=otsu");
    ExtractionConfig cfg = small_config();
    CHECK(cfg.fingerprint() == "grid=40.0:80.0:1.0;heights=30;steps=10;binarize=fixed:128");
}

TEST_CASE("extraction is deterministic and self-distance is zero", "[classify]") {
    const BinaryImage strip = small_strip(57.0, 21);
    const ExtractionConfig cfg = small_config();
    const FeatureVector a = feature_vector(strip, cfg);
    const FeatureVector b = feature_vector(strip, cfg);

    CHECK(serialize(a) == serialize(b));
    CHECK(distance(a, b) == 0.0);
    CHECK(std::abs(a.slant.angle - 57.0) <= 2.0);
    CHECK(a.entropy_values.size() == static_cast<std::size_t>(cfg.grid.count()));
    REQUIRE(a.autocorr.curves.size() == 1);
    CHECK(a.autocorr.curves[0].size() == static_cast<std::size_t>(kResampleLength));
}

TEST_CASE("distance is symmetric and separates distinct slants", "[classify]") {
    const ExtractionConfig cfg = small_config();
    const FeatureVector a = feature_vector(small_strip(57.0, 21), cfg);
    const FeatureVector b = feature_vector(small_strip(74.0, 22), cfg);

    const double ab = distance(a, b);
    CHECK(ab == distance(b, a));
    CHECK(ab > 0.05);
}

TEST_CASE("vectors from different configs refuse to compare", "[classify]") {
    const FeatureVector a = feature_vector(small_strip(57.0, 21), small_config());
    ExtractionConfig other = small_config();
    other.steps = {10, 15};
    const FeatureVector b = feature_vector(small_strip(57.0, 21), other);
    try {
        distance(a, b);
        FAIL("expected ConfigMismatch");
    } catch (const error& e) {
        CHECK(e.code() == errc::config_mismatch);
    }
}

TEST_CASE("degenerate weights are refused", "[classify]") {
    const FeatureVector a = feature_vector(small_strip(57.0, 21), small_config());
    for (DistanceWeights w : {DistanceWeights{-1, 1, 1}, DistanceWeights{0, 0, 0}}) {
        try {
            distance(a, a, w);
            FAIL("expected BadConfig");
        } catch (const error& e) {
            CHECK(e.code() == errc::bad_config);
        }
    }
}

TEST_CASE("ranking respects distance and breaks ties by id", "[classify]") {
    const ExtractionConfig cfg = small_config();
    const FeatureVector q = feature_vector(small_strip(57.0, 21), cfg);
    const FeatureVector other = feature_vector(small_strip(74.0, 22), cfg);

    const auto ranked = nearest(q, {{"far", other}, {"self", q}, {"dupe", q}});
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].first == "dupe"); // tie with "self" at 0, id order wins
    CHECK(ranked[0].second == 0.0);
    CHECK(ranked[1].first == "self");
    CHECK(ranked[2].first == "far");

    try {
        nearest(q, {});
        FAIL("expected EmptyGallery");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_gallery);
    }
}

TEST_CASE("ranking is invariant under uniform weight scaling", "[classify]") {
    const ExtractionConfig cfg = small_config();
    const FeatureVector q = feature_vector(small_strip(57.0, 21), cfg);
    const std::vector<std::pair<std::string, FeatureVector>> gallery = {
        {"a", feature_vector(small_strip(74.0, 22), cfg)},
        {"b", feature_vector(small_strip(57.0, 23), cfg)},
        {"c", feature_vector(small_strip(90.0, 24), cfg)}};

    const auto base = nearest(q, gallery, {1, 1, 1});
    const auto scaled = nearest(q, gallery, {4, 4, 4});
    REQUIRE(base.size() == scaled.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(base[i].first == scaled[i].first);
        CHECK(std::abs(base[i].second - scaled[i].second) < 1e-12);
    }
    CHECK(base[0].first == "b");
}

TEST_CASE("a fresh strip of the same slant ranks before the other slant", "[classify]") {
    const ExtractionConfig cfg = small_config();
    const FeatureVector q = feature_vector(small_strip(57.0, 31), cfg);
    const auto ranked = nearest(q, {{"deg57", feature_vector(small_strip(57.0, 32), cfg)},
                                    {"deg74", feature_vector(small_strip(74.0, 33), cfg)}});
    CHECK(ranked[0].first == "deg57");
}

TEST_CASE("serialization round-trips every numeric field bit for bit", "[classify]") {
    const FeatureVector a = feature_vector(small_strip(74.0, 42), small_config());
    const FeatureVector b = parse_feature_vector(serialize(a));

    CHECK(b.config_fingerprint == a.config_fingerprint);
    CHECK(b.slant.angle == a.slant.angle);
    CHECK(b.slant.grid_angle == a.slant.grid_angle);
    CHECK(b.slant.entropy_at_min == a.slant.entropy_at_min);
    CHECK(b.entropy_values == a.entropy_values);
    CHECK(b.autocorr.steps == a.autocorr.steps);
    CHECK(b.autocorr.curves == a.autocorr.curves);
    CHECK(serialize(b) == serialize(a));
}

TEST_CASE("malformed feature documents are rejected", "[classify]") {
    const auto code_of = [](const std::string& text) {
        try {
            parse_feature_vector(text);
        } catch (const error& e) {
            return e.code();
        }
        return errc::empty_image; // sentinel: no throw
    };
    CHECK(code_of("not json at all") == errc::bad_config);
    CHECK(code_of("{\"version\": 2}") == errc::bad_config);
    CHECK(code_of("{\"version\": 1, \"config_fingerprint\": \"x\"}") == errc::bad_config);

    FeatureVector a = feature_vector(small_strip(74.0, 42), small_config());
    a.autocorr.curves[0].pop_back();
    CHECK(code_of(serialize(a)) == errc::bad_config);
}

TEST_CASE("extraction failures carry their stage label", "[classify]") {
    BinaryImage blank;
    blank.rows = 150;
    blank.cols = 900;
    blank.bits.assign(150 * 900, 0);
    try {
        feature_vector(blank, small_config());
        FAIL("expected EmptyImage");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_image);
        CHECK(std::string(e.what()).find("entropy stage") != std::string::npos);
    }

    ExtractionConfig no_heights = small_config();
    no_heights.heights.clear();
    try {
        feature_vector(small_strip(57.0, 21), no_heights);
        FAIL("expected BadConfig");
    } catch (const error& e) {
        CHECK(e.code() == errc::bad_config);
    }
}