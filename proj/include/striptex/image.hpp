#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "striptex/error.hpp"

namespace striptex {

// Row-major 8-bit luminance raster, 0 = black.
struct GrayImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * cols + c]; }
};

// Row-major ink mask: 1 = ink (black), 0 = background.
struct BinaryImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> bits;

    std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return bits[static_cast<std::size_t>(r) * cols + c]; }

    std::int64_t black_count() const {
        std::int64_t n = 0;
        for (std::uint8_t b : bits) n += b;
        return n;
    }
};

// ---------------------------------------------------------------------------
// netpbm P4 / P5 codec
// ---------------------------------------------------------------------------

namespace detail {

inline bool pbm_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Header tokens are separated by whitespace; '#' starts a comment running to
// end of line.
inline void skip_header_filler(std::string_view bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        if (pbm_space(bytes[pos])) {
            ++pos;
        } else if (bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
}

inline long long read_header_number(std::string_view bytes, std::size_t& pos, const char* what) {
    skip_header_filler(bytes, pos);
    if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
        fail(errc::bad_header, std::string("expected numeric ") + what + " in netpbm header");
    long long value = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
        value = value * 10 + (bytes[pos] - '0');
        if (value > 1'000'000'000LL)
            fail(errc::bad_header, std::string(what) + " out of range");
        ++pos;
    }
    return value;
}

} // namespace detail

// Parses a P4 (packed 1-bit) or P5 (binary gray) stream. P4 ink bits map to
// luminance 0; P5 samples with maxval != 255 are rescaled linearly onto
// [0,255] (two-byte big-endian samples when maxval > 255).
inline GrayImage load_netpbm(std::string_view bytes) {
    if (bytes.size() < 2) fail(errc::bad_magic, "stream too short for a netpbm magic");
    if (bytes[0] != 'P' || (bytes[1] != '4' && bytes[1] != '5'))
        fail(errc::bad_magic, "unsupported netpbm magic '" + std::string(bytes.substr(0, 2)) + "' (want P4 or P5)");
    const bool packed = bytes[1] == '4';

    std::size_t pos = 2;
    long long cols = detail::read_header_number(bytes, pos, "width");
    long long rows = detail::read_header_number(bytes, pos, "height");
    long long maxval = 255;
    if (!packed) {
        maxval = detail::read_header_number(bytes, pos, "maxval");
        if (maxval < 1 || maxval > 65535) fail(errc::bad_header, "maxval must be in [1, 65535]");
    }
    if (rows < 1 || cols < 1) fail(errc::bad_header, "image dimensions must be at least 1x1");
    if (rows * cols > 256LL * 1024 * 1024) fail(errc::bad_header, "image dimensions unreasonably large");

    // Exactly one whitespace byte separates header and payload.
    if (pos >= bytes.size() || !detail::pbm_space(bytes[pos]))
        fail(errc::bad_header, "missing whitespace between header and payload");
    ++pos;

    GrayImage img;
    img.rows = static_cast<int>(rows);
    img.cols = static_cast<int>(cols);
    img.pixels.resize(static_cast<std::size_t>(rows * cols));

    if (packed) {
        // P4 rows are padded to whole bytes, most significant bit first.
        const std::size_t row_bytes = static_cast<std::size_t>((cols + 7) / 8);
        if (bytes.size() - pos < row_bytes * rows)
            fail(errc::truncated_payload, "P4 payload shorter than rows x row_bytes");
        for (long long r = 0; r < rows; ++r) {
            const unsigned char* row = reinterpret_cast<const unsigned char*>(bytes.data()) + pos + r * row_bytes;
            for (long long c = 0; c < cols; ++c) {
                const unsigned bit = (row[c / 8] >> (7 - c % 8)) & 1u;
                img.pixels[static_cast<std::size_t>(r * cols + c)] = bit ? 0 : 255;
            }
        }
    } else {
        const int bytes_per_sample = maxval > 255 ? 2 : 1;
        const std::size_t need = static_cast<std::size_t>(rows * cols) * bytes_per_sample;
        if (bytes.size() - pos < need)
            fail(errc::truncated_payload, "P5 payload shorter than rows x cols samples");
        const unsigned char* p = reinterpret_cast<const unsigned char*>(bytes.data()) + pos;
        for (std::size_t i = 0; i < static_cast<std::size_t>(rows * cols); ++i) {
            long long sample;
            if (bytes_per_sample == 2) {
                sample = (static_cast<long long>(p[2 * i]) << 8) | p[2 * i + 1];
            } else {
                sample = p[i];
            }
            if (maxval == 255) {
                img.pixels[i] = static_cast<std::uint8_t>(sample);
            } else {
                img.pixels[i] = static_cast<std::uint8_t>(std::llround(sample * 255.0 / static_cast<double>(maxval)));
            }
        }
    }
    return img;
}

// Canonical P5 serialization; loading then re-serializing a canonical
// maxval=255 P5 stream reproduces it byte for byte.
inline std::string save_netpbm_p5(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
}

inline GrayImage to_gray(const BinaryImage& m) {
    GrayImage g;
    g.rows = m.rows;
    g.cols = m.cols;
    g.pixels.resize(m.bits.size());
    for (std::size_t i = 0; i < m.bits.size(); ++i) g.pixels[i] = m.bits[i] ? 0 : 255;
    return g;
}

// ---------------------------------------------------------------------------
// Binarization
// ---------------------------------------------------------------------------

struct BinarizeMethod {
    enum class Kind { otsu, fixed };
    Kind kind = Kind::otsu;
    int threshold = 128; // only for Kind::fixed

    static BinarizeMethod otsu() { return {Kind::otsu, 0}; }
    static BinarizeMethod fixed(int threshold) { return {Kind::fixed, threshold}; }
};

// Effective threshold T maximizing inter-class variance of the 256-bin
// histogram; ink is every pixel with luminance < T. Ties take the smallest T.
inline int otsu_threshold(const GrayImage& img) {
    std::array<std::int64_t, 256> hist{};
    for (std::uint8_t v : img.pixels) ++hist[v];

    const std::int64_t total = static_cast<std::int64_t>(img.pixels.size());
    double sum_all = 0;
    for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

    std::int64_t w0 = 0;
    double sum0 = 0;
    double best = -1.0;
    int best_t = -1;
    for (int t = 0; t < 255; ++t) { // class 0 = [0..t], class 1 = [t+1..255]
        w0 += hist[t];
        sum0 += static_cast<double>(t) * hist[t];
        const std::int64_t w1 = total - w0;
        if (w0 == 0 || w1 == 0) continue;
        const double mu0 = sum0 / w0;
        const double mu1 = (sum_all - sum0) / w1;
        const double between = static_cast<double>(w0) * static_cast<double>(w1) * (mu0 - mu1) * (mu0 - mu1);
        if (between > best) {
            best = between;
            best_t = t;
        }
    }
    if (best_t < 0)
        fail(errc::degenerate_histogram, "all pixels share one value; use a fixed threshold");
    return best_t + 1;
}

inline BinaryImage binarize(const GrayImage& img, BinarizeMethod method) {
    const int threshold = method.kind == BinarizeMethod::Kind::otsu ? otsu_threshold(img) : method.threshold;
    BinaryImage out;
    out.rows = img.rows;
    out.cols = img.cols;
    out.bits.resize(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.bits[i] = img.pixels[i] < threshold ? 1 : 0;
    return out;
}

// ---------------------------------------------------------------------------
// Split-and-join reshape
// ---------------------------------------------------------------------------

// Cuts the strip into K = floor(rows/h) bands of height h and lays them out
// side by side; band i of the source becomes columns [i*cols, (i+1)*cols).
// Source rows beyond K*h are dropped.
inline BinaryImage reshape_strip(const BinaryImage& m, int h) {
    if (h < 1 || h > m.rows)
        fail(errc::bad_height, "sub-strip height " + std::to_string(h) + " not in [1, " + std::to_string(m.rows) + "]");
    const int k = m.rows / h;
    BinaryImage out;
    out.rows = h;
    out.cols = k * m.cols;
    out.bits.resize(static_cast<std::size_t>(out.rows) * out.cols);
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < m.cols; ++c)
                out.at(r, i * m.cols + c) = m.at(i * h + r, c);
    return out;
}

} // namespace striptex
