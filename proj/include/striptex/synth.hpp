#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "striptex/angles.hpp"
#include "striptex/error.hpp"
#include "striptex/image.hpp"
#include "striptex/radon.hpp"

namespace striptex {

// Deterministic stroke-field generator used as ground truth: every stroke is
// rasterized onto a single line of the projection family at `angle`, so the
// projection at the true angle is maximally concentrated by construction.
struct SynthConfig {
    int rows = 300;
    int cols = 3000;
    double angle = 57.0; // true slant, degrees
    int stroke_len = 150;
    int stroke_width = 1; // horizontal thickness, adjacent projection lines
    int stroke_count = 40;
    int gap_period = 60; // horizontal anchor spacing
    int jitter = 1;      // max uniform anchor perturbation, pixels
    std::uint64_t seed = 1;
};

namespace detail {

// SplitMix64 (Steele, Lea, Flood 2014); constants documented in README.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

} // namespace detail

inline BinaryImage synth_strokes(const SynthConfig& cfg) {
    if (cfg.rows < 1 || cfg.cols < 1 || cfg.stroke_len < 1 || cfg.stroke_width < 1 ||
        cfg.stroke_count < 1 || cfg.gap_period < 1 || cfg.jitter < 0)
        fail(errc::bad_config, "synth dimensions, stroke parameters and gap must be positive (jitter >= 0)");
    const AngleDeg t(cfg.angle);

    const double rad = cfg.angle * 0.017453292519943295;
    if (!(cfg.stroke_len * std::abs(std::cos(rad)) < cfg.cols))
        fail(errc::stroke_overflow, "stroke span exceeds the strip width");
    if (cfg.stroke_len > cfg.rows)
        fail(errc::stroke_overflow, "stroke length " + std::to_string(cfg.stroke_len) + " exceeds " +
                                        std::to_string(cfg.rows) + " rows");

    const double ct = t.cot();
    const int r0 = (cfg.rows - cfg.stroke_len) / 2;
    const double left_ext = std::max(0.0, -(cfg.stroke_len - 1) * ct);
    const int base_col = 1 + cfg.jitter + static_cast<int>(std::ceil(left_ext));

    BinaryImage img;
    img.rows = cfg.rows;
    img.cols = cfg.cols;
    img.bits.assign(static_cast<std::size_t>(cfg.rows) * cfg.cols, 0);

    detail::SplitMix64 rng(cfg.seed);
    for (int k = 0; k < cfg.stroke_count; ++k) {
        int jit = 0;
        if (cfg.jitter > 0)
            jit = static_cast<int>(rng.next() % static_cast<std::uint64_t>(2 * cfg.jitter + 1)) - cfg.jitter;
        const int anchor = base_col + k * cfg.gap_period + jit;
        if (anchor < 0 || anchor >= cfg.cols)
            fail(errc::stroke_overflow, "stroke " + std::to_string(k) + " anchor column " +
                                            std::to_string(anchor) + " outside the strip");
        const std::int64_t line = offset_index(r0, anchor, t);
        for (int j = 0; j < cfg.stroke_len; ++j) {
            const int row = r0 + j;
            const double ideal = static_cast<double>(line) + static_cast<double>(row) * ct;
            std::int64_t c = std::llround(ideal);
            // The rounded column can land one line off at the half-way
            // boundary; keep the stroke exactly on line `line`.
            if (offset_index(row, static_cast<int>(c), t) != line) {
                if (offset_index(row, static_cast<int>(c - 1), t) == line) c -= 1;
                else if (offset_index(row, static_cast<int>(c + 1), t) == line) c += 1;
            }
            // Columns c..c+width-1 sit on lines `line`..`line`+width-1 at
            // every row, so a wide stroke is width adjacent stroke lines.
            if (c < 0 || c + cfg.stroke_width > cfg.cols)
                fail(errc::stroke_overflow, "stroke " + std::to_string(k) + " leaves the strip at row " +
                                                std::to_string(row));
            for (int w = 0; w < cfg.stroke_width; ++w) img.at(row, static_cast<int>(c) + w) = 1;
        }
    }
    return img;
}

} // namespace striptex
