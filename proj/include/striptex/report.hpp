#pragma once

#include <charconv>
#include <string>
#include <vector>

#include "striptex/classify.hpp"
#include "striptex/error.hpp"
#include "striptex/format.hpp"
#include "striptex/seqfeat.hpp"
#include "striptex/slant.hpp"

namespace striptex {

// ---------------------------------------------------------------------------
// CSV (comma separated, \n line endings, header row, round-trip floats)
// ---------------------------------------------------------------------------

inline std::string slant_csv(const std::vector<EntropyCurve>& curves) {
    if (curves.empty()) fail(errc::bad_config, "no entropy curves to write");
    std::string out = "angle_deg";
    for (const EntropyCurve& c : curves)
        out += ",entropy_nats_h" + std::to_string(c.sub_strip_height);
    out += "\n";
    const std::size_t n = curves.front().angles.size();
    for (const EntropyCurve& c : curves)
        if (c.angles.size() != n)
            fail(errc::bad_config, "entropy curves disagree in grid length");
    for (std::size_t i = 0; i < n; ++i) {
        out += format_double(curves.front().angles[i]);
        for (const EntropyCurve& c : curves) out += "," + format_double(c.values[i]);
        out += "\n";
    }
    return out;
}

inline std::string autocorr_csv(const AutocorrCurve& curve) {
    std::string out = "lag,auto\n";
    for (std::size_t i = 0; i < curve.lags.size(); ++i)
        out += std::to_string(curve.lags[i]) + "," + format_double(curve.values[i]) + "\n";
    return out;
}

inline std::string autocorr_matrix_csv(const AutocorrMatrix& matrix) {
    std::string out;
    for (int j = 0; j < kResampleLength; ++j) out += (j ? ",c" : "c") + std::to_string(j);
    out += "\n";
    for (const auto& row : matrix.curves) {
        for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + format_double(row[j]);
        out += "\n";
    }
    return out;
}

// Minimal reader for the files written above (used by tests and tooling).
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    for (const std::string& line : split(text, '\n')) {
        if (line.empty()) continue;
        rows.push_back(split(line, ','));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// SVG 1.1 static polyline plots
// ---------------------------------------------------------------------------

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

namespace detail {

inline const char* plot_color(std::size_t i) {
    // First two mirror the usual blue/red height pairing.
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    return palette[i % 8];
}

inline std::string fmt2(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

inline std::string fmt_tick(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

inline std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

struct Range {
    double lo = 0.0, hi = 1.0;
};

inline Range data_range(const std::vector<PlotSeries>& series, bool use_y) {
    bool first = true;
    Range r;
    for (const PlotSeries& s : series) {
        const std::vector<double>& v = use_y ? s.y : s.x;
        for (double d : v) {
            if (first) {
                r.lo = r.hi = d;
                first = false;
            } else {
                if (d < r.lo) r.lo = d;
                if (d > r.hi) r.hi = d;
            }
        }
    }
    if (r.hi - r.lo < 1e-12) {
        r.lo -= 1.0;
        r.hi += 1.0;
    }
    return r;
}

// One panel of axes + polylines, emitted at a vertical offset so panels can
// be stacked into small multiples.
inline void render_panel(std::string& svg, const std::vector<PlotSeries>& series,
                         const std::string& title, const std::string& x_label,
                         const std::string& y_label, double top, double panel_h, double width) {
    const double left = 62.0, right = width - 16.0;
    const double plot_top = top + 26.0, plot_bottom = top + panel_h - 38.0;
    const Range xr = data_range(series, false);
    const Range yr0 = data_range(series, true);
    Range yr = yr0;
    const double pad = (yr0.hi - yr0.lo) * 0.05;
    yr.lo -= pad;
    yr.hi += pad;

    auto map_x = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * (right - left); };
    auto map_y = [&](double v) { return plot_bottom - (v - yr.lo) / (yr.hi - yr.lo) * (plot_bottom - plot_top); };

    svg += "<text x=\"" + fmt2((left + right) / 2) + "\" y=\"" + fmt2(top + 14.0) +
           "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" + xml_escape(title) + "</text>\n";
    svg += "<rect x=\"" + fmt2(left) + "\" y=\"" + fmt2(plot_top) + "\" width=\"" + fmt2(right - left) +
           "\" height=\"" + fmt2(plot_bottom - plot_top) + "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    for (int i = 0; i < 5; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
        const double px = map_x(fx);
        svg += "<line x1=\"" + fmt2(px) + "\" y1=\"" + fmt2(plot_bottom) + "\" x2=\"" + fmt2(px) +
               "\" y2=\"" + fmt2(plot_bottom + 4.0) + "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt2(px) + "\" y=\"" + fmt2(plot_bottom + 16.0) +
               "\" text-anchor=\"middle\" font-size=\"10\" font-family=\"sans-serif\">" + fmt_tick(fx) + "</text>\n";

        const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
        const double py = map_y(fy);
        svg += "<line x1=\"" + fmt2(left - 4.0) + "\" y1=\"" + fmt2(py) + "\" x2=\"" + fmt2(left) +
               "\" y2=\"" + fmt2(py) + "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt2(left - 6.0) + "\" y=\"" + fmt2(py + 3.0) +
               "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">" + fmt_tick(fy) + "</text>\n";
    }

    svg += "<text x=\"" + fmt2((left + right) / 2) + "\" y=\"" + fmt2(top + panel_h - 6.0) +
           "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" + xml_escape(x_label) + "</text>\n";
    svg += "<text x=\"14\" y=\"" + fmt2((plot_top + plot_bottom) / 2) +
           "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\" transform=\"rotate(-90 14 " +
           fmt2((plot_top + plot_bottom) / 2) + ")\">" + xml_escape(y_label) + "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += plot_color(s);
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].x.size(); ++i) {
            if (i) svg += " ";
            svg += fmt2(map_x(series[s].x[i])) + "," + fmt2(map_y(series[s].y[i]));
        }
        svg += "\"/>\n";
        if (!series[s].label.empty()) {
            const double lx = right - 110.0, ly = plot_top + 14.0 + 14.0 * static_cast<double>(s);
            svg += "<line x1=\"" + fmt2(lx) + "\" y1=\"" + fmt2(ly - 3.0) + "\" x2=\"" + fmt2(lx + 18.0) +
                   "\" y2=\"" + fmt2(ly - 3.0) + "\" stroke=\"";
            svg += plot_color(s);
            svg += "\" stroke-width=\"2\"/>\n";
            svg += "<text x=\"" + fmt2(lx + 22.0) + "\" y=\"" + fmt2(ly) +
                   "\" font-size=\"10\" font-family=\"sans-serif\">" + xml_escape(series[s].label) + "</text>\n";
        }
    }
}

inline std::string svg_document(double width, double height, const std::string& body) {
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt2(width) +
                      "\" height=\"" + fmt2(height) + "\" viewBox=\"0 0 " + fmt2(width) + " " + fmt2(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    svg += body;
    svg += "</svg>\n";
    return svg;
}

} // namespace detail

inline std::string line_chart_svg(const std::string& title, const std::string& x_label,
                                  const std::string& y_label, const std::vector<PlotSeries>& series) {
    std::string body;
    detail::render_panel(body, series, title, x_label, y_label, 0.0, 440.0, 720.0);
    return detail::svg_document(720.0, 440.0, body);
}

inline std::string slant_svg(const std::vector<EntropyCurve>& curves) {
    std::vector<PlotSeries> series;
    for (const EntropyCurve& c : curves)
        series.push_back({"h=" + std::to_string(c.sub_strip_height), c.angles, c.values});
    return line_chart_svg("Projection entropy vs angle", "angle (deg)", "entropy (nats)", series);
}

inline std::string autocorr_svg(const AutocorrCurve& curve) {
    PlotSeries s;
    s.x.reserve(curve.lags.size());
    for (int lag : curve.lags) s.x.push_back(static_cast<double>(lag));
    s.y = curve.values;
    return line_chart_svg("Sequence autocorrelation (Step=" + std::to_string(curve.step) + ")", "lag",
                          "autocorrelation", {s});
}

// Small multiples: one panel per step, stacked vertically.
inline std::string autocorr_sweep_svg(const AutocorrMatrix& matrix) {
    const double panel_h = 190.0, width = 720.0;
    std::string body;
    for (std::size_t r = 0; r < matrix.curves.size(); ++r) {
        PlotSeries s;
        s.x.reserve(matrix.curves[r].size());
        for (std::size_t j = 0; j < matrix.curves[r].size(); ++j) s.x.push_back(static_cast<double>(j));
        s.y = matrix.curves[r];
        detail::render_panel(body, {s}, "Step=" + std::to_string(matrix.steps[r]), "resampled lag bin",
                             "auto", panel_h * static_cast<double>(r), panel_h, width);
    }
    return detail::svg_document(width, panel_h * static_cast<double>(matrix.curves.size()), body);
}

} // namespace striptex
