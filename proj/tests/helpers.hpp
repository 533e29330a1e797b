#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "striptex/striptex.hpp"

// Tiny constructors for fixtures. Randomness always comes from an explicitly
// seeded mt19937_64 so every run sees the same images.

inline striptex::BinaryImage make_bits(int rows, int cols, std::initializer_list<int> bits) {
    striptex::BinaryImage m;
    m.rows = rows;
    m.cols = cols;
    m.bits.reserve(bits.size());
    for (int b : bits) m.bits.push_back(static_cast<std::uint8_t>(b));
    return m;
}

inline striptex::BinaryImage random_bits(std::mt19937_64& rng, int rows, int cols,
                                         std::uint64_t per_mille = 300) {
    striptex::BinaryImage m;
    m.rows = rows;
    m.cols = cols;
    m.bits.resize(static_cast<std::size_t>(rows) * cols);
    for (auto& b : m.bits) b = (rng() % 1000) < per_mille ? 1 : 0;
    return m;
}

inline striptex::ProjectionProfile profile_from_counts(const std::vector<std::int64_t>& raw) {
    striptex::ProjectionProfile p;
    p.angle_deg = 90.0;
    p.offset_min = 0;
    p.raw = raw;
    p.mass = 0;
    for (std::int64_t v : raw) p.mass += v;
    p.normalized.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        p.normalized[i] = static_cast<double>(raw[i]) / static_cast<double>(p.mass);
    return p;
}
