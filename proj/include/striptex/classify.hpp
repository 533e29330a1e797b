#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "striptex/angles.hpp"
#include "striptex/error.hpp"
#include "striptex/format.hpp"
#include "striptex/image.hpp"
#include "striptex/seqfeat.hpp"
#include "striptex/slant.hpp"

namespace striptex {

// Everything that parameterizes feature extraction. Two feature vectors are
// comparable only when their fingerprints match.
struct ExtractionConfig {
    AngleGrid grid = AngleGrid::default_grid();
    std::vector<int> heights = {30, 50}; // heights[0] is the primary height
    std::vector<int> steps = {5, 10, 15, 20, 25, 30};
    BinarizeMethod binarize_method = BinarizeMethod::otsu();

    std::string fingerprint() const {
        std::string fp = "grid=" + format_double(grid.start) + ":" + format_double(grid.stop) + ":" +
                         format_double(grid.step) + ";heights=";
        for (std::size_t i = 0; i < heights.size(); ++i)
            fp += (i ? "," : "") + std::to_string(heights[i]);
        fp += ";steps=";
        for (std::size_t i = 0; i < steps.size(); ++i)
            fp += (i ? "," : "") + std::to_string(steps[i]);
        fp += ";binarize=";
        fp += binarize_method.kind == BinarizeMethod::Kind::otsu
                  ? "otsu"
                  : "fixed:" + std::to_string(binarize_method.threshold);
        return fp;
    }
};

struct FeatureVector {
    SlantEstimate slant;
    std::vector<double> entropy_values; // on the configured grid, primary height
    AutocorrMatrix autocorr;
    std::string config_fingerprint;
};

inline FeatureVector feature_vector(const BinaryImage& m, const ExtractionConfig& cfg) {
    if (cfg.heights.empty())
        fail(errc::bad_config, "extraction config needs at least one sub-strip height");

    FeatureVector fv;
    fv.config_fingerprint = cfg.fingerprint();

    EntropyCurve curve;
    try {
        curve = entropy_curve(m, cfg.grid, cfg.heights.front());
    } catch (const error& e) {
        fail(e.code(), "entropy stage: " + e.message());
    }
    fv.entropy_values = curve.values;
    try {
        fv.slant = estimate_slant(curve);
    } catch (const error& e) {
        fail(e.code(), "slant stage: " + e.message());
    }
    try {
        fv.autocorr = step_sweep(m, cfg.steps);
    } catch (const error& e) {
        fail(e.code(), "autocorrelation stage: " + e.message());
    }
    return fv;
}

struct DistanceWeights {
    double slant = 1.0;
    double entropy = 1.0;
    double autocorr = 1.0;
};

namespace detail {

inline double rms_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

} // namespace detail

inline constexpr double kSlantSpanDeg = 120.0; // span of the default grid

// Provisional composite distance (weighted mean of slant gap, entropy-curve
// RMS and autocorrelation RMS); a principled metric over these curves is an
// open problem.
inline double distance(const FeatureVector& a, const FeatureVector& b, DistanceWeights w = {}) {
    if (a.config_fingerprint != b.config_fingerprint)
        fail(errc::config_mismatch,
             "feature vectors were extracted under different configs: '" + a.config_fingerprint +
                 "' vs '" + b.config_fingerprint + "'");
    if (w.slant < 0 || w.entropy < 0 || w.autocorr < 0 || w.slant + w.entropy + w.autocorr <= 0)
        fail(errc::bad_config, "distance weights must be non-negative with a positive sum");
    if (a.entropy_values.size() != b.entropy_values.size() ||
        a.autocorr.curves.size() != b.autocorr.curves.size())
        fail(errc::config_mismatch, "feature vectors disagree in shape despite equal fingerprints");

    const double slant_term = std::abs(a.slant.angle - b.slant.angle) / kSlantSpanDeg;
    const double entropy_term = detail::rms_diff(a.entropy_values, b.entropy_values);

    double auto_sum = 0.0;
    std::size_t auto_n = 0;
    for (std::size_t r = 0; r < a.autocorr.curves.size(); ++r) {
        for (std::size_t j = 0; j < a.autocorr.curves[r].size(); ++j) {
            const double d = a.autocorr.curves[r][j] - b.autocorr.curves[r][j];
            auto_sum += d * d;
        }
        auto_n += a.autocorr.curves[r].size();
    }
    const double auto_term = auto_n ? std::sqrt(auto_sum / static_cast<double>(auto_n)) : 0.0;

    return (w.slant * slant_term + w.entropy * entropy_term + w.autocorr * auto_term) /
           (w.slant + w.entropy + w.autocorr);
}

// Gallery ranking, ascending distance, ties by id.
inline std::vector<std::pair<std::string, double>>
nearest(const FeatureVector& query, const std::vector<std::pair<std::string, FeatureVector>>& gallery,
        DistanceWeights w = {}) {
    if (gallery.empty())
        fail(errc::empty_gallery, "gallery has no entries to rank");
    std::vector<std::pair<std::string, double>> ranked;
    ranked.reserve(gallery.size());
    for (const auto& [id, fv] : gallery)
        ranked.emplace_back(id, distance(query, fv, w));
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.first < y.first;
    });
    return ranked;
}

// ---------------------------------------------------------------------------
// Serialization (versioned JSON, schema version 1)
// ---------------------------------------------------------------------------

inline std::string serialize(const FeatureVector& fv) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["config_fingerprint"] = fv.config_fingerprint;
    j["slant"] = {{"angle_deg", fv.slant.angle},
                  {"grid_angle_deg", fv.slant.grid_angle},
                  {"entropy_at_min_nats", fv.slant.entropy_at_min}};
    j["entropy_values_nats"] = fv.entropy_values;
    j["autocorr"] = {{"steps", fv.autocorr.steps}, {"resampled_curves", fv.autocorr.curves}};
    return j.dump(2) + "\n";
}

inline FeatureVector parse_feature_vector(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_config, std::string("feature vector is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("version").get<int>() != 1)
            fail(errc::bad_config, "unsupported feature vector version");
        FeatureVector fv;
        fv.config_fingerprint = j.at("config_fingerprint").get<std::string>();
        const auto& s = j.at("slant");
        fv.slant.angle = s.at("angle_deg").get<double>();
        fv.slant.grid_angle = s.at("grid_angle_deg").get<double>();
        fv.slant.entropy_at_min = s.at("entropy_at_min_nats").get<double>();
        fv.entropy_values = j.at("entropy_values_nats").get<std::vector<double>>();
        const auto& a = j.at("autocorr");
        fv.autocorr.steps = a.at("steps").get<std::vector<int>>();
        fv.autocorr.curves = a.at("resampled_curves").get<std::vector<std::vector<double>>>();
        if (fv.autocorr.curves.size() != fv.autocorr.steps.size())
            fail(errc::bad_config, "autocorr steps and curves disagree in length");
        for (const auto& row : fv.autocorr.curves)
            if (static_cast<int>(row.size()) != kResampleLength)
                fail(errc::bad_config, "autocorr rows must hold exactly " +
                                           std::to_string(kResampleLength) + " values");
        return fv;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_config, std::string("feature vector JSON misses required fields: ") + e.what());
    }
}

} // namespace striptex
