// striptex command line: extract the Radon texture features of a scanned
// strip (slant entropy curve, column-occupancy autocorrelation), generate
// synthetic ground-truth strips, and rank a gallery against a query.
//
// Exit codes: 0 success, 1 usage/internal, 2 I/O, 3 domain precondition,
// 4 feature config mismatch.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "striptex/striptex.hpp"

namespace fs = std::filesystem;

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void write_file(const fs::path& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out.good()) throw IoFailure("write failed: " + path.string());
}

striptex::AngleGrid parse_grid(const std::string& text) {
    const auto parts = striptex::split(text, ':');
    if (parts.size() != 3)
        striptex::fail(striptex::errc::bad_config, "grid must be start:stop:step, e.g. 30:150:1");
    return striptex::AngleGrid(striptex::parse_double(parts[0]), striptex::parse_double(parts[1]),
                               striptex::parse_double(parts[2]));
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.find(':') != std::string::npos) { // a:b:c range, inclusive
        const auto parts = striptex::split(text, ':');
        if (parts.size() != 3)
            striptex::fail(striptex::errc::bad_config, std::string(what) + " range must be a:b:c");
        const long long a = striptex::parse_int(parts[0]);
        const long long b = striptex::parse_int(parts[1]);
        const long long c = striptex::parse_int(parts[2]);
        if (c < 1 || b < a)
            striptex::fail(striptex::errc::bad_config, std::string(what) + " range must ascend with step >= 1");
        for (long long v = a; v <= b; v += c) out.push_back(static_cast<int>(v));
    } else {
        for (const std::string& tok : striptex::split(text, ','))
            out.push_back(static_cast<int>(striptex::parse_int(tok)));
    }
    if (out.empty())
        striptex::fail(striptex::errc::bad_config, std::string(what) + " list is empty");
    for (int v : out)
        if (v < 1)
            striptex::fail(striptex::errc::bad_config, std::string(what) + " values must be >= 1");
    return out;
}

striptex::BinarizeMethod parse_binarize(const std::string& text) {
    if (text == "otsu") return striptex::BinarizeMethod::otsu();
    if (text.rfind("fixed:", 0) == 0)
        return striptex::BinarizeMethod::fixed(static_cast<int>(striptex::parse_int(text.substr(6))));
    striptex::fail(striptex::errc::bad_config, "binarize must be 'otsu' or 'fixed:<threshold>'");
}

// Otsu falls back to a fixed mid threshold on a single-valued histogram
// (blank scans); the degenerate case then surfaces as EmptyImage downstream.
striptex::BinaryImage load_strip(const fs::path& path, striptex::BinarizeMethod method) {
    const striptex::GrayImage gray = striptex::load_netpbm(read_file(path));
    if (method.kind == striptex::BinarizeMethod::Kind::otsu) {
        try {
            return striptex::binarize(gray, method);
        } catch (const striptex::error& e) {
            if (e.code() != striptex::errc::degenerate_histogram) throw;
            return striptex::binarize(gray, striptex::BinarizeMethod::fixed(128));
        }
    }
    return striptex::binarize(gray, method);
}

struct CommonOpts {
    std::string input;
    std::string grid = "30:150:1";
    std::string binarize = "otsu";
};

int cmd_slant(const CommonOpts& common, const std::string& heights_text, const std::string& csv_path,
              const std::string& svg_path) {
    const striptex::AngleGrid grid = parse_grid(common.grid);
    const std::vector<int> heights = parse_int_list(heights_text, "heights");
    const striptex::BinarizeMethod method = parse_binarize(common.binarize);

    const striptex::BinaryImage strip = load_strip(common.input, method);
    std::vector<striptex::EntropyCurve> curves;
    for (int h : heights) {
        curves.push_back(striptex::entropy_curve(strip, grid, h));
        const striptex::SlantEstimate est = striptex::estimate_slant(curves.back());
        std::cout << "h=" << h << " slant_deg=" << striptex::format_double(est.angle)
                  << " grid_angle_deg=" << striptex::format_double(est.grid_angle)
                  << " entropy_min_nats=" << striptex::format_double(est.entropy_at_min) << "\n";
    }
    if (!csv_path.empty()) write_file(csv_path, striptex::slant_csv(curves));
    if (!svg_path.empty()) write_file(svg_path, striptex::slant_svg(curves));
    return 0;
}

int cmd_autocorr(const CommonOpts& common, int single_step, const std::string& steps_text,
                 const std::string& csv_path, const std::string& svg_path) {
    const striptex::BinarizeMethod method = parse_binarize(common.binarize);
    const striptex::BinaryImage strip = load_strip(common.input, method);

    if (single_step > 0) {
        striptex::AutocorrCurve curve;
        try {
            curve = striptex::autocorrelation(striptex::column_bits(strip, single_step));
        } catch (const striptex::error& e) {
            striptex::fail(e.code(), "step " + std::to_string(single_step) + ": " + e.message());
        }
        std::cout << "step=" << single_step << " lags=" << curve.lags.size() << "\n";
        if (!csv_path.empty()) write_file(csv_path, striptex::autocorr_csv(curve));
        if (!svg_path.empty()) write_file(svg_path, striptex::autocorr_svg(curve));
        return 0;
    }

    const std::vector<int> steps = parse_int_list(steps_text, "steps");
    const striptex::AutocorrMatrix matrix = striptex::step_sweep(strip, steps);
    std::cout << "steps=";
    for (std::size_t i = 0; i < matrix.steps.size(); ++i)
        std::cout << (i ? "," : "") << matrix.steps[i];
    std::cout << " rows=" << matrix.curves.size() << " cols=" << striptex::kResampleLength << "\n";
    if (!csv_path.empty()) write_file(csv_path, striptex::autocorr_matrix_csv(matrix));
    if (!svg_path.empty()) write_file(svg_path, striptex::autocorr_sweep_svg(matrix));
    return 0;
}

striptex::ExtractionConfig make_config(const CommonOpts& common, const std::string& heights_text,
                                       const std::string& steps_text) {
    striptex::ExtractionConfig cfg{.grid = parse_grid(common.grid),
                                   .heights = parse_int_list(heights_text, "heights"),
                                   .steps = parse_int_list(steps_text, "steps"),
                                   .binarize_method = parse_binarize(common.binarize)};
    return cfg;
}

int cmd_features(const CommonOpts& common, const std::string& heights_text, const std::string& steps_text,
                 const std::string& out_path) {
    const striptex::ExtractionConfig cfg = make_config(common, heights_text, steps_text);
    const striptex::BinaryImage strip = load_strip(common.input, cfg.binarize_method);
    const striptex::FeatureVector fv = striptex::feature_vector(strip, cfg);
    write_file(out_path, striptex::serialize(fv));
    std::cout << "wrote " << out_path << " slant_deg=" << striptex::format_double(fv.slant.angle) << "\n";
    return 0;
}

int cmd_classify(const std::string& query_path, const std::string& gallery_dir,
                 const std::string& weights_text) {
    const auto wparts = striptex::split(weights_text, ',');
    if (wparts.size() != 3)
        striptex::fail(striptex::errc::bad_config, "weights must be w_slant,w_entropy,w_autocorr");
    const striptex::DistanceWeights weights{striptex::parse_double(wparts[0]),
                                            striptex::parse_double(wparts[1]),
                                            striptex::parse_double(wparts[2])};

    const striptex::FeatureVector query = striptex::parse_feature_vector(read_file(query_path));

    std::vector<fs::path> files;
    {
        std::error_code ec;
        fs::directory_iterator it(gallery_dir, ec);
        if (ec) throw IoFailure("cannot read gallery directory " + gallery_dir + ": " + ec.message());
        for (const auto& entry : it)
            if (entry.is_regular_file() && entry.path().extension() == ".fv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<std::pair<std::string, striptex::FeatureVector>> gallery;
    for (const fs::path& f : files)
        gallery.emplace_back(f.stem().string(), striptex::parse_feature_vector(read_file(f)));

    const auto ranked = striptex::nearest(query, gallery, weights);
    std::cout << "id,distance\n";
    for (const auto& [id, dist] : ranked)
        std::cout << id << "," << striptex::format_double(dist) << "\n";
    return 0;
}

int cmd_synth(double angle, int rows, int cols, int stroke_len, int stroke_width, int stroke_count,
              int gap, int jitter, std::uint64_t seed, const std::string& out_path) {
    striptex::SynthConfig cfg;
    cfg.rows = rows;
    cfg.cols = cols;
    cfg.angle = angle;
    cfg.stroke_len = stroke_len;
    cfg.stroke_width = stroke_width;
    cfg.stroke_count = stroke_count;
    cfg.gap_period = gap;
    cfg.jitter = jitter;
    cfg.seed = seed;
    const striptex::BinaryImage strip = striptex::synth_strokes(cfg);
    write_file(out_path, striptex::save_netpbm_p5(striptex::to_gray(strip)));
    std::cout << "wrote " << out_path << " rows=" << rows << " cols=" << cols
              << " ink=" << strip.black_count() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radon texture features of scanned handwritten strips"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string heights_text = "30,50";
    std::string steps_text = "5:30:5";
    std::string csv_path, svg_path, out_path;
    std::string query_path, gallery_dir;
    std::string weights_text = "1,1,1";
    int single_step = 0;
    double angle = 57.0;
    int rows = 300, cols = 3000, stroke_len = 150, stroke_width = 1, stroke_count = 40, gap = 60, jitter = 1;
    std::uint64_t seed = 1;
    int rc = 0;

    CLI::App* slant = app.add_subcommand("slant", "entropy curve and generalized slant per sub-strip height");
    slant->add_option("input", common.input, "netpbm P4/P5 strip")->required();
    slant->add_option("--heights", heights_text, "sub-strip heights, comma list (default 30,50)");
    slant->add_option("--grid", common.grid, "angle grid start:stop:step in degrees (default 30:150:1)");
    slant->add_option("--binarize", common.binarize, "otsu or fixed:<threshold> (default otsu)");
    slant->add_option("--csv", csv_path, "write angle/entropy table");
    slant->add_option("--svg", svg_path, "write overlay plot");
    slant->callback([&] { rc = cmd_slant(common, heights_text, csv_path, svg_path); });

    CLI::App* autoc = app.add_subcommand("autocorr", "column-occupancy autocorrelation of the strip");
    autoc->add_option("input", common.input, "netpbm P4/P5 strip")->required();
    autoc->add_option("--step", single_step, "single Step value (emits lag,auto CSV)");
    autoc->add_option("--steps", steps_text, "Step sweep a:b:c or comma list (default 5:30:5)");
    autoc->add_option("--binarize", common.binarize, "otsu or fixed:<threshold>");
    autoc->add_option("--csv", csv_path, "write autocorrelation CSV");
    autoc->add_option("--svg", svg_path, "write plot / small multiples");
    autoc->callback([&] { rc = cmd_autocorr(common, single_step, steps_text, csv_path, svg_path); });

    CLI::App* feat = app.add_subcommand("features", "extract and serialize the strip's feature vector");
    feat->add_option("input", common.input, "netpbm P4/P5 strip")->required();
    feat->add_option("-o,--out", out_path, "output .fv path")->required();
    feat->add_option("--grid", common.grid, "angle grid start:stop:step");
    feat->add_option("--heights", heights_text, "sub-strip heights (first one is primary)");
    feat->add_option("--steps", steps_text, "autocorrelation Step sweep");
    feat->add_option("--binarize", common.binarize, "otsu or fixed:<threshold>");
    feat->callback([&] { rc = cmd_features(common, heights_text, steps_text, out_path); });

    CLI::App* cls = app.add_subcommand("classify", "rank gallery feature vectors against a query");
    cls->add_option("--query", query_path, "query .fv file")->required();
    cls->add_option("--gallery", gallery_dir, "directory of .fv files")->required();
    cls->add_option("--weights", weights_text, "w_slant,w_entropy,w_autocorr (default 1,1,1)");
    cls->callback([&] { rc = cmd_classify(query_path, gallery_dir, weights_text); });

    CLI::App* synth = app.add_subcommand("synth", "generate a deterministic synthetic strip (P5)");
    synth->add_option("--angle", angle, "true stroke slant in degrees")->required();
    synth->add_option("--out", out_path, "output .pgm path")->required();
    synth->add_option("--rows", rows, "strip height (default 300)");
    synth->add_option("--cols", cols, "strip width (default 3000)");
    synth->add_option("--stroke-len", stroke_len, "stroke height in rows (default 150)");
    synth->add_option("--width", stroke_width, "stroke thickness in columns (default 1)");
    synth->add_option("--strokes", stroke_count, "stroke count (default 40)");
    synth->add_option("--gap", gap, "horizontal anchor spacing (default 60)");
    synth->add_option("--jitter", jitter, "max uniform anchor perturbation (default 1)");
    synth->add_option("--seed", seed, "PRNG seed (default 1)");
    synth->callback([&] {
        rc = cmd_synth(angle, rows, cols, stroke_len, stroke_width, stroke_count, gap, jitter, seed,
                       out_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const striptex::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == striptex::errc::config_mismatch ? 4 : 3;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
