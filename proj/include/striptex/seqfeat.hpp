#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "striptex/error.hpp"
#include "striptex/image.hpp"

namespace striptex {

// Per-column occupancy bits of the reshaped strip: 1 where a column of the
// joined array is at least half ink.
struct BitSequence {
    std::vector<std::uint8_t> bits;
    int step = 0;
    int source_cols = 0;
};

struct AutocorrCurve {
    std::vector<int> lags; // 0..max_lag
    std::vector<double> values;
    int step = 0;
};

inline constexpr int kResampleLength = 128;

// One resampled autocorrelation row per step, rows in ascending step order.
struct AutocorrMatrix {
    std::vector<int> steps;
    std::vector<std::vector<double>> curves; // each row kResampleLength long
};

inline BitSequence column_bits(const BinaryImage& m, int step) {
    const BinaryImage joined = reshape_strip(m, step);
    BitSequence seq;
    seq.step = step;
    seq.source_cols = m.cols;
    seq.bits.resize(static_cast<std::size_t>(joined.cols));
    for (int c = 0; c < joined.cols; ++c) {
        int val = 0;
        for (int r = 0; r < joined.rows; ++r) val += joined.at(r, c);
        // Val < Step/2 -> 0, else 1; kept in integers so the Val = Step/2
        // boundary lands on the else branch for even steps.
        seq.bits[static_cast<std::size_t>(c)] = (2 * val < step) ? 0 : 1;
    }
    return seq;
}

// Biased, mean-removed autocorrelation, normalized to 1 at lag 0, for lags
// 0..floor(N/2).
inline AutocorrCurve autocorrelation(const BitSequence& s) {
    const std::size_t n = s.bits.size();
    if (n < 4)
        fail(errc::too_short, "sequence of length " + std::to_string(n) + " is too short (need >= 4)");
    std::int64_t ones = 0;
    for (std::uint8_t b : s.bits) ones += b;
    if (ones == 0 || ones == static_cast<std::int64_t>(n))
        fail(errc::zero_variance, "constant sequence has no autocorrelation");

    const double mean = static_cast<double>(ones) / static_cast<double>(n);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(s.bits[i]) - mean;

    double denom = 0.0;
    for (double x : d) denom += x * x;

    const std::size_t max_lag = n / 2;
    AutocorrCurve curve;
    curve.step = s.step;
    curve.lags.resize(max_lag + 1);
    curve.values.resize(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) num += d[i] * d[i + k];
        curve.lags[k] = static_cast<int>(k);
        curve.values[k] = num / denom;
    }
    return curve;
}

// Linear resampling onto kResampleLength positions spanning [0, max_lag].
inline std::vector<double> resample_curve(const AutocorrCurve& c) {
    const std::size_t last = c.values.size() - 1;
    std::vector<double> out(kResampleLength);
    for (int j = 0; j < kResampleLength; ++j) {
        const double pos = static_cast<double>(last) * j / (kResampleLength - 1);
        const std::size_t i0 = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i0);
        out[static_cast<std::size_t>(j)] =
            frac == 0.0 ? c.values[i0] : c.values[i0] * (1.0 - frac) + c.values[i0 + 1] * frac;
    }
    return out;
}

inline AutocorrMatrix step_sweep(const BinaryImage& m, std::vector<int> steps) {
    if (steps.empty())
        fail(errc::bad_config, "step sweep needs at least one step");
    std::sort(steps.begin(), steps.end());

    AutocorrMatrix matrix;
    matrix.steps = std::move(steps);
    matrix.curves.reserve(matrix.steps.size());
    for (int step : matrix.steps) {
        try {
            matrix.curves.push_back(resample_curve(autocorrelation(column_bits(m, step))));
        } catch (const error& e) {
            fail(e.code(), "step " + std::to_string(step) + ": " + e.message());
        }
    }
    return matrix;
}

} // namespace striptex
