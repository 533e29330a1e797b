#pragma once

#include <cmath>
#include <vector>

#include "striptex/error.hpp"

namespace striptex {

// Direction of the projection line family, degrees to the X-axis,
// open interval (0, 180).
class AngleDeg {
public:
    explicit AngleDeg(double degrees) : degrees_(degrees) {
        if (!(degrees > 0.0 && degrees < 180.0))
            fail(errc::bad_config, "angle must lie strictly between 0 and 180 degrees");
    }

    double degrees() const { return degrees_; }

    double cot() const {
        const double rad = degrees_ * 0.017453292519943295; // pi/180
        return std::cos(rad) / std::sin(rad);
    }

private:
    double degrees_;
};

// Uniform angle sampling {start, start+step, ...}, inclusive of stop when the
// step divides the span.
struct AngleGrid {
    double start;
    double stop;
    double step;

    AngleGrid(double start_deg, double stop_deg, double step_deg)
        : start(start_deg), stop(stop_deg), step(step_deg) {
        if (!(start > 0.0 && start < stop && stop < 180.0))
            fail(errc::bad_config, "angle grid must satisfy 0 < start < stop < 180");
        if (!(step > 0.0))
            fail(errc::bad_config, "angle grid step must be positive");
    }

    int count() const { return static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1; }

    std::vector<double> angles() const {
        std::vector<double> out;
        const int n = count();
        out.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) out.push_back(start + i * step);
        return out;
    }

    static AngleGrid default_grid() { return AngleGrid(30.0, 150.0, 1.0); }
};

} // namespace striptex
