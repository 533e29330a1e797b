#pragma once

#include <stdexcept>
#include <string>

namespace striptex {

// Every failure the library can report. The CLI maps these onto its exit
// code contract (config_mismatch -> 4, everything else -> 3).
enum class errc {
    bad_magic,
    bad_header,
    truncated_payload,
    degenerate_histogram,
    bad_height,
    empty_image,
    aspect_too_square,
    not_normalized,
    curve_too_short,
    zero_variance,
    too_short,
    config_mismatch,
    empty_gallery,
    stroke_overflow,
    bad_config,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_magic: return "BadMagic";
        case errc::bad_header: return "BadHeader";
        case errc::truncated_payload: return "TruncatedPayload";
        case errc::degenerate_histogram: return "DegenerateHistogram";
        case errc::bad_height: return "BadHeight";
        case errc::empty_image: return "EmptyImage";
        case errc::aspect_too_square: return "AspectTooSquare";
        case errc::not_normalized: return "NotNormalized";
        case errc::curve_too_short: return "CurveTooShort";
        case errc::zero_variance: return "ZeroVariance";
        case errc::too_short: return "TooShort";
        case errc::config_mismatch: return "ConfigMismatch";
        case errc::empty_gallery: return "EmptyGallery";
        case errc::stroke_overflow: return "StrokeOverflow";
        case errc::bad_config: return "BadConfig";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    errc code() const noexcept { return code_; }

    // what() minus the error-name prefix, for wrapping into a new context
    const std::string& message() const noexcept { return message_; }

private:
    errc code_;
    std::string message_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace striptex
