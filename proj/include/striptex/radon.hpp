#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "striptex/angles.hpp"
#include "striptex/error.hpp"
#include "striptex/image.hpp"

namespace striptex {

// Ink mass per line offset for one direction. raw holds exact integer counts
// indexed by offset - offset_min; normalized is raw / mass.
struct ProjectionProfile {
    double angle_deg = 0.0;
    std::int64_t offset_min = 0;
    std::vector<std::int64_t> raw;
    std::vector<double> normalized;
    std::int64_t mass = 0;
};

// Index of the line (x-intercept) through pixel (row, col) in the family at
// angle t: round(col - row*cot(t)), halves away from zero. Assigns every
// pixel to exactly one line, so per-angle sums are conserved exactly.
inline std::int64_t offset_index(int row, int col, AngleDeg t) {
    return std::llround(static_cast<double>(col) - static_cast<double>(row) * t.cot());
}

inline ProjectionProfile project(const BinaryImage& m, AngleDeg t) {
    const double ct = t.cot();
    std::vector<std::int64_t> offsets;
    for (int r = 0; r < m.rows; ++r) {
        const std::uint8_t* row = m.bits.data() + static_cast<std::size_t>(r) * m.cols;
        const double shift = static_cast<double>(r) * ct;
        for (int c = 0; c < m.cols; ++c)
            if (row[c]) offsets.push_back(std::llround(static_cast<double>(c) - shift));
    }
    if (offsets.empty())
        fail(errc::empty_image, "projection of an image with no ink pixels is undefined");

    const auto [lo_it, hi_it] = std::minmax_element(offsets.begin(), offsets.end());
    const std::int64_t lo = *lo_it;
    const std::int64_t hi = *hi_it;

    ProjectionProfile p;
    p.angle_deg = t.degrees();
    p.offset_min = lo;
    p.mass = static_cast<std::int64_t>(offsets.size());
    p.raw.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::int64_t o : offsets) ++p.raw[static_cast<std::size_t>(o - lo)];
    p.normalized.resize(p.raw.size());
    for (std::size_t i = 0; i < p.raw.size(); ++i)
        p.normalized[i] = static_cast<double>(p.raw[i]) / static_cast<double>(p.mass);
    return p;
}

// Diagnostic: the per-angle raw sums must all equal the ink pixel count.
// True by construction of offset_index; exposed as a self-test hook.
inline bool mass_check(const BinaryImage& m, const AngleGrid& grid) {
    const std::int64_t expected = m.black_count();
    if (expected == 0)
        fail(errc::empty_image, "mass check needs at least one ink pixel");
    for (double a : grid.angles()) {
        const ProjectionProfile p = project(m, AngleDeg(a));
        std::int64_t sum = 0;
        for (std::int64_t v : p.raw) sum += v;
        if (sum != expected) return false;
    }
    return true;
}

} // namespace striptex
