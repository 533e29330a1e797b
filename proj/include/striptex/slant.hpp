#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "striptex/angles.hpp"
#include "striptex/error.hpp"
#include "striptex/image.hpp"
#include "striptex/radon.hpp"

namespace striptex {

struct EntropyCurve {
    std::vector<double> angles;
    std::vector<double> values; // nats
    int sub_strip_height = 0;
};

struct SlantEstimate {
    double angle = 0.0;      // parabolic refinement, clamped to one grid cell
    double grid_angle = 0.0; // argmin on the sampled grid
    double entropy_at_min = 0.0;
};

// Shannon entropy of the normalized projection, in nats. 0*ln(0) counts as 0.
inline double entropy(const ProjectionProfile& p) {
    if (p.mass <= 0)
        fail(errc::empty_image, "entropy of a massless profile is undefined");
    double sum = 0.0;
    for (double f : p.normalized) sum += f;
    if (std::abs(sum - 1.0) > 1e-9)
        fail(errc::not_normalized, "profile weights sum to " + std::to_string(sum) + ", not 1");
    double h = 0.0;
    for (double f : p.normalized)
        if (f > 0.0) h -= f * std::log(f);
    return h;
}

// Entropy of the reshaped strip's projection at every grid angle. The strip
// is cut to sub_strip_height bands laid in a row first; the reshaped width
// must be at least 5x the height.
inline EntropyCurve entropy_curve(const BinaryImage& m, const AngleGrid& grid, int sub_strip_height) {
    const BinaryImage joined = reshape_strip(m, sub_strip_height);
    if (static_cast<std::int64_t>(joined.cols) < 5LL * joined.rows)
        fail(errc::aspect_too_square,
             "reshaped width " + std::to_string(joined.cols) + " is less than 5 x height " +
                 std::to_string(joined.rows) + "; use a smaller sub-strip height or a wider strip");
    if (grid.count() < 3)
        fail(errc::bad_config, "angle grid yields fewer than 3 angles");

    EntropyCurve curve;
    curve.sub_strip_height = sub_strip_height;
    curve.angles = grid.angles();
    curve.values.reserve(curve.angles.size());
    for (double a : curve.angles)
        curve.values.push_back(entropy(project(joined, AngleDeg(a))));
    return curve;
}

// Global minimum over the grid (ties -> smallest angle), refined by the
// vertex of the parabola through the three bracketing samples. Endpoint
// minima are reported as-is.
inline SlantEstimate estimate_slant(const EntropyCurve& curve) {
    const std::size_t n = curve.values.size();
    if (n < 3 || curve.angles.size() != n)
        fail(errc::curve_too_short, "entropy curve needs at least 3 points");

    std::size_t idx = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (curve.values[i] < curve.values[idx]) idx = i;

    SlantEstimate est;
    est.grid_angle = curve.angles[idx];
    est.entropy_at_min = curve.values[idx];
    est.angle = est.grid_angle;

    if (idx > 0 && idx + 1 < n) {
        const double v0 = curve.values[idx - 1];
        const double v1 = curve.values[idx];
        const double v2 = curve.values[idx + 1];
        const double step = curve.angles[idx + 1] - curve.angles[idx];
        const double denom = v0 - 2.0 * v1 + v2;
        if (denom > 0.0) {
            const double refined = est.grid_angle + step * (v0 - v2) / (2.0 * denom);
            est.angle = std::clamp(refined, est.grid_angle - step, est.grid_angle + step);
        }
    }
    return est;
}

} // namespace striptex
