#ifndef HASHNOISE_BENCH_HPP
#define HASHNOISE_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "hashnoise/render.hpp"

namespace hashnoise {

struct BenchResult {
    HashVariant variant;
    int dim = 2;
    std::int64_t pixels = 0;
    int repetitions = 0;
    std::vector<double> secondsPerRep;
    double medianSeconds = 0.0;
    double megapixelsPerSecond = 0.0;
};

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Renders the variant's noise field into memory `reps` times and
// reports median-based throughput.
inline BenchResult bench_variant(HashVariant variant, int dim, int width,
                                 int height, int reps) {
    if (reps < 3) throw std::invalid_argument("need at least 3 repetitions");
    RenderSpec spec;
    spec.config = NoiseConfig::make(variant, dim);
    spec.mode = RenderMode::Noise;
    spec.width = width;
    spec.height = height;

    BenchResult r;
    r.variant = variant;
    r.dim = dim;
    r.pixels = static_cast<std::int64_t>(width) * height;
    r.repetitions = reps;

    volatile std::uint8_t sink = 0;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const ImageBuffer img = render(spec);
        const auto t1 = std::chrono::steady_clock::now();
        sink = sink + img.pixels.front();
        r.secondsPerRep.push_back(
            std::chrono::duration<double>(t1 - t0).count());
    }
    (void)sink;
    r.medianSeconds = median(r.secondsPerRep);
    r.megapixelsPerSecond =
        static_cast<double>(r.pixels) / r.medianSeconds / 1e6;
    return r;
}

} // namespace hashnoise

#endif
