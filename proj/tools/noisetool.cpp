#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hashnoise/hashnoise.hpp"

namespace hn = hashnoise;
using nlohmann::json;

namespace {

hn::HashVariant require_variant(const std::string& name) {
    const auto v = hn::parse_variant(name);
    if (!v)
        throw CLI::ValidationError("--hash", "unknown hash variant: " + name);
    return *v;
}

bool parse_size(const std::string& s, int& w, int& h) {
    const auto x = s.find('x');
    if (x == std::string::npos) return false;
    try {
        w = std::stoi(s.substr(0, x));
        h = std::stoi(s.substr(x + 1));
    } catch (const std::exception&) {
        return false;
    }
    return w >= 1 && h >= 1;
}

int run_render(const std::string& mode, const std::string& hash, int dim,
               const std::string& size, double scale, int octaves,
               double slice, std::int64_t period, const std::string& out) {
    hn::RenderSpec spec;
    spec.config.variant = require_variant(hash);
    spec.config.dim = dim;
    spec.config.period = period > 0
                             ? static_cast<std::uint32_t>(period)
                             : hn::default_period(spec.config.variant);
    if (!parse_size(size, spec.width, spec.height))
        throw CLI::ValidationError("--size", "expected WxH, got: " + size);
    spec.scale = scale;
    spec.octaves = octaves;
    spec.slice = slice;
    if (mode == "noise")
        spec.mode = hn::RenderMode::Noise;
    else if (mode == "turbulence")
        spec.mode = hn::RenderMode::Turbulence;
    else if (mode == "clouds")
        spec.mode = hn::RenderMode::Clouds;
    else
        throw CLI::ValidationError("--mode", "unknown mode: " + mode);

    const auto t0 = std::chrono::steady_clock::now();
    const hn::ImageBuffer img = hn::render(spec);
    hn::write_pnm(img, out);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << out << " " << ms << " ms\n";
    return 0;
}

int run_stats(const std::string& hash, int dim, std::int64_t samples,
              int bins, std::uint64_t seed, bool as_json) {
    hn::AnalysisReport r;
    r.config = hn::NoiseConfig::make(require_variant(hash), dim);
    r.samples = samples;
    r.seed = seed;
    r.stats = hn::sample_stats(r.config, samples, seed);
    r.hist = hn::histogram(r.config, samples, bins, seed);
    if (r.config.variant != hn::HashVariant::TableBaseline) {
        r.aval = hn::avalanche(r.config.variant, 10000, seed);
        r.hasAvalanche = true;
    }
    if (as_json)
        std::cout << hn::to_json(r).dump(2) << "\n";
    else
        std::cout << hn::to_flat_text(r);
    return 0;
}

int run_bench(int dim, const std::string& size, int reps, bool as_json) {
    int w = 0, h = 0;
    if (!parse_size(size, w, h))
        throw CLI::ValidationError("--size", "expected WxH, got: " + size);

    // Paper table order: full/partial pairs, then Murmur, then baseline.
    const hn::HashVariant order[] = {
        hn::HashVariant::FNV1,    hn::HashVariant::PartialFNV1,
        hn::HashVariant::Jenkins, hn::HashVariant::PartialJenkins,
        hn::HashVariant::Murmur,  hn::HashVariant::TableBaseline,
    };

    json out = json::array();
    if (!as_json)
        std::printf("%-16s %12s %16s\n", "variant", "median ms",
                    "megapixels/s");
    for (hn::HashVariant v : order) {
        const hn::BenchResult r = hn::bench_variant(v, dim, w, h, reps);
        if (as_json) {
            out.push_back({
                {"variant", std::string(hn::variant_name(v))},
                {"dim", r.dim},
                {"pixels", r.pixels},
                {"repetitions", r.repetitions},
                {"secondsPerRep", r.secondsPerRep},
                {"megapixelsPerSecond", r.megapixelsPerSecond},
            });
        } else {
            std::printf("%-16s %12.3f %16.2f\n",
                        std::string(hn::variant_name(v)).c_str(),
                        r.medianSeconds * 1e3, r.megapixelsPerSecond);
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_shadergen(const std::string& hash, bool gradient, int dim,
                  const std::string& out) {
    const hn::HashVariant v = require_variant(hash);
    if (v == hn::HashVariant::TableBaseline)
        throw CLI::ValidationError("--hash",
                                   "table baseline has no hash shader");
    const hn::ShaderSource src = hn::shader_source(v, gradient, dim);
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open for writing: " << out << "\n";
        return 1;
    }
    f << src.text;
    std::cout << out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hash-based gradient noise toolkit"};
    app.require_subcommand(1);

    // render
    auto* render = app.add_subcommand("render", "render a noise field to PGM/PPM");
    std::string r_mode = "noise", r_hash = "partial-fnv1", r_size = "256x256";
    std::string r_out = "out.pgm";
    int r_dim = 2, r_octaves = 5;
    double r_scale = 8.0, r_slice = 0.5;
    std::int64_t r_period = 0;
    render->add_option("--mode", r_mode, "noise|turbulence|clouds");
    render->add_option("--hash", r_hash, "hash variant or 'table'");
    render->add_option("--dim", r_dim)->check(CLI::IsMember({2, 3}));
    render->add_option("--size", r_size, "WxH");
    render->add_option("--scale", r_scale);
    render->add_option("--octaves", r_octaves);
    render->add_option("--slice", r_slice);
    render->add_option("--period", r_period);
    render->add_option("--out", r_out)->required();

    // stats
    auto* stats = app.add_subcommand("stats", "sample statistics and avalanche report");
    std::string s_hash = "partial-fnv1";
    int s_dim = 2, s_bins = 41;
    std::int64_t s_samples = 100000;
    std::uint64_t s_seed = 1;
    bool s_json = false;
    stats->add_option("--hash", s_hash);
    stats->add_option("--dim", s_dim)->check(CLI::IsMember({2, 3}));
    stats->add_option("--samples", s_samples);
    stats->add_option("--bins", s_bins);
    stats->add_option("--seed", s_seed);
    stats->add_flag("--json", s_json);

    // bench
    auto* bench = app.add_subcommand("bench", "CPU render throughput for every variant");
    int b_dim = 2, b_reps = 5;
    std::string b_size = "800x600";
    bool b_json = false;
    bench->add_option("--dim", b_dim)->check(CLI::IsMember({2, 3}));
    bench->add_option("--size", b_size, "WxH");
    bench->add_option("--reps", b_reps);
    bench->add_flag("--json", b_json);

    // shadergen
    auto* shadergen = app.add_subcommand("shadergen", "emit GLSL hash source");
    std::string g_hash = "fnv1", g_out = "hash.glsl";
    bool g_gradient = false;
    int g_dim = 2;
    shadergen->add_option("--hash", g_hash);
    shadergen->add_flag("--gradient", g_gradient);
    shadergen->add_option("--dim", g_dim)->check(CLI::IsMember({2, 3}));
    shadergen->add_option("--out", g_out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (render->parsed())
            return run_render(r_mode, r_hash, r_dim, r_size, r_scale,
                              r_octaves, r_slice, r_period, r_out);
        if (stats->parsed())
            return run_stats(s_hash, s_dim, s_samples, s_bins, s_seed, s_json);
        if (bench->parsed())
            return run_bench(b_dim, b_size, b_reps, b_json);
        if (shadergen->parsed())
            return run_shadergen(g_hash, g_gradient, g_dim, g_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
