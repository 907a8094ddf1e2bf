#ifndef HASHNOISE_ANALYSIS_HPP
#define HASHNOISE_ANALYSIS_HPP

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hashnoise/noise.hpp"

namespace hashnoise {

// splitmix64: trivially portable, fully specified by its constants.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) from the top 53 bits.
    constexpr double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    constexpr std::uint32_t next_u32() {
        return static_cast<std::uint32_t>(next() >> 32);
    }

private:
    std::uint64_t state_;
};

struct SampleStats {
    std::int64_t count = 0;
    double mean = 0.0;
    double variance = 0.0;
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    std::int64_t outOfRangeCount = 0;
};

struct Histogram {
    std::vector<std::int64_t> bins;
    std::int64_t total = 0;
};

struct AvalancheReport {
    HashVariant variant = HashVariant::FNV1;
    double meanFlippedBits = 0.0;
    std::array<double, 32> perInputBit{};
};

// Central moments of a sample, for distribution-shape checks.
struct MomentStats {
    double skewness = 0.0;
    double excessKurtosis = 0.0;
};

namespace detail {

inline constexpr double kSampleDomain = 256.0;

// Draws a sample point and returns the raw (unclamped) noise value.
template <typename Fn>
void for_each_sample(const NoiseConfig& cfg, std::int64_t n,
                     std::uint64_t seed, Fn&& fn) {
    SplitMix64 rng(seed);
    for (std::int64_t i = 0; i < n; ++i) {
        const double x = rng.next_unit() * kSampleDomain;
        const double y = rng.next_unit() * kSampleDomain;
        if (cfg.dim == 2) {
            fn(noise_raw(cfg, x, y));
        } else {
            const double z = rng.next_unit() * kSampleDomain;
            fn(noise_raw(cfg, x, y, z));
        }
    }
}

} // namespace detail

// Single-pass Welford accumulation over n seeded sample points in
// [0, 256)^dim. outOfRangeCount counts pre-clamp exceedances; the
// recorded stats respect the config's clamp policy.
inline SampleStats sample_stats(const NoiseConfig& cfg, std::int64_t n,
                                std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
    cfg.validate();
    SampleStats s;
    double m2 = 0.0;
    detail::for_each_sample(cfg, n, seed, [&](double raw) {
        if (raw < -1.0 || raw > 1.0) ++s.outOfRangeCount;
        const double v = apply_clamp(cfg, raw);
        ++s.count;
        const double d = v - s.mean;
        s.mean += d / static_cast<double>(s.count);
        m2 += d * (v - s.mean);
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    });
    s.variance = m2 / static_cast<double>(s.count);
    return s;
}

inline Histogram histogram(const NoiseConfig& cfg, std::int64_t n, int bins,
                           std::uint64_t seed) {
    if (bins < 3 || bins % 2 == 0)
        throw std::invalid_argument("bins must be odd and >= 3");
    if (n < bins) throw std::invalid_argument("need n >= bins");
    cfg.validate();
    Histogram h;
    h.bins.assign(static_cast<std::size_t>(bins), 0);
    detail::for_each_sample(cfg, n, seed, [&](double raw) {
        const double v = std::clamp(raw, -1.0, 1.0);
        auto idx = static_cast<std::int64_t>((v + 1.0) / 2.0 * bins);
        idx = std::clamp<std::int64_t>(idx, 0, bins - 1);
        ++h.bins[static_cast<std::size_t>(idx)];
        ++h.total;
    });
    return h;
}

// Two-pass skewness and excess kurtosis over the same sample stream.
inline MomentStats sample_moments(const NoiseConfig& cfg, std::int64_t n,
                                  std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    cfg.validate();
    double sum = 0.0;
    detail::for_each_sample(cfg, n, seed,
                            [&](double raw) { sum += apply_clamp(cfg, raw); });
    const double mean = sum / static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    detail::for_each_sample(cfg, n, seed, [&](double raw) {
        const double d = apply_clamp(cfg, raw) - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    });
    const auto nd = static_cast<double>(n);
    m2 /= nd;
    m3 /= nd;
    m4 /= nd;
    MomentStats ms;
    ms.skewness = m3 / std::pow(m2, 1.5);
    ms.excessKurtosis = m4 / (m2 * m2) - 3.0;
    return ms;
}

// Mean output-bit flips per single input-bit flip, per input bit.
inline AvalancheReport avalanche(HashVariant variant, std::int64_t trials,
                                 std::uint64_t seed) {
    if (variant == HashVariant::TableBaseline)
        throw std::invalid_argument("table baseline has no scalar hash");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    AvalancheReport r;
    r.variant = variant;
    std::array<std::int64_t, 32> flips{};
    SplitMix64 rng(seed);
    for (std::int64_t t = 0; t < trials; ++t) {
        const Word32 key = rng.next_u32();
        const Word32 base = dispatch(variant, key);
        for (int bit = 0; bit < 32; ++bit) {
            const Word32 other = dispatch(variant, key ^ (1u << bit));
            flips[static_cast<std::size_t>(bit)] +=
                std::popcount(base ^ other);
        }
    }
    double total = 0.0;
    for (int bit = 0; bit < 32; ++bit) {
        r.perInputBit[static_cast<std::size_t>(bit)] =
            static_cast<double>(flips[static_cast<std::size_t>(bit)]) /
            static_cast<double>(trials);
        total += r.perInputBit[static_cast<std::size_t>(bit)];
    }
    r.meanFlippedBits = total / 32.0;
    return r;
}

// True iff noise is bit-identical under translation by the period along
// every axis. Probe fractional parts are multiples of 2^-10 so p and
// p + P are both exactly representable.
inline bool period_check(const NoiseConfig& cfg, std::int64_t probes,
                         std::uint64_t seed) {
    if (probes < 1) throw std::invalid_argument("probes must be >= 1");
    cfg.validate();
    SplitMix64 rng(seed);
    const double p = cfg.period;
    for (std::int64_t i = 0; i < probes; ++i) {
        double c[3];
        for (int d = 0; d < cfg.dim; ++d) {
            const auto cell = static_cast<double>(rng.next() % cfg.period);
            const auto frac =
                static_cast<double>(rng.next() & 1023u) * 0x1.0p-10;
            c[d] = cell + frac;
        }
        for (int axis = 0; axis < cfg.dim; ++axis) {
            double t[3] = {c[0], c[1], c[2]};
            t[axis] += p;
            const double a = cfg.dim == 2 ? noise(cfg, c[0], c[1])
                                          : noise(cfg, c[0], c[1], c[2]);
            const double b = cfg.dim == 2 ? noise(cfg, t[0], t[1])
                                          : noise(cfg, t[0], t[1], t[2]);
            if (std::bit_cast<std::uint64_t>(a) !=
                std::bit_cast<std::uint64_t>(b))
                return false;
        }
    }
    return true;
}

// --- report serialization ---

struct AnalysisReport {
    NoiseConfig config;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    SampleStats stats;
    Histogram hist;
    AvalancheReport aval;
    bool hasAvalanche = false;
};

inline nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json j{
        {"variant", std::string(variant_name(r.config.variant))},
        {"dim", r.config.dim},
        {"n", r.samples},
        {"seed", r.seed},
        {"mean", r.stats.mean},
        {"variance", r.stats.variance},
        {"min", r.stats.min},
        {"max", r.stats.max},
        {"outOfRange", r.stats.outOfRangeCount},
        {"bins", r.hist.bins},
    };
    if (r.hasAvalanche) {
        j["meanFlippedBits"] = r.aval.meanFlippedBits;
        j["perInputBit"] = r.aval.perInputBit;
    }
    return j;
}

inline std::string to_flat_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "variant " << variant_name(r.config.variant) << "\n"
       << "dim " << r.config.dim << "\n"
       << "n " << r.samples << "\n"
       << "seed " << r.seed << "\n"
       << "mean " << r.stats.mean << "\n"
       << "variance " << r.stats.variance << "\n"
       << "min " << r.stats.min << "\n"
       << "max " << r.stats.max << "\n"
       << "outOfRange " << r.stats.outOfRangeCount << "\n";
    os << "bins";
    for (auto b : r.hist.bins) os << ' ' << b;
    os << "\n";
    if (r.hasAvalanche) {
        os << "meanFlippedBits " << r.aval.meanFlippedBits << "\n";
        os << "perInputBit";
        for (auto v : r.aval.perInputBit) os << ' ' << v;
        os << "\n";
    }
    return os.str();
}

} // namespace hashnoise

#endif
