#ifndef HASHNOISE_NOISE_HPP
#define HASHNOISE_NOISE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hashnoise/gradient.hpp"
#include "hashnoise/hashes.hpp"

namespace hashnoise {

inline constexpr std::uint32_t kHashPeriod = 1u << 20;
inline constexpr std::uint32_t kTablePeriod = 256;

inline constexpr std::uint32_t default_period(HashVariant v) {
    return v == HashVariant::TableBaseline ? kTablePeriod : kHashPeriod;
}

// Fully determines a noise field.
struct NoiseConfig {
    HashVariant variant = HashVariant::PartialFNV1;
    int dim = 2;
    std::uint32_t period = kHashPeriod;
    bool clamp = true;

    static NoiseConfig make(HashVariant v, int dim) {
        if (dim != 2 && dim != 3)
            throw std::invalid_argument("dim must be 2 or 3");
        return {v, dim, default_period(v), true};
    }

    void validate() const {
        if (dim != 2 && dim != 3)
            throw std::invalid_argument("dim must be 2 or 3");
        if (period < 2) throw std::invalid_argument("period must be >= 2");
        if (variant == HashVariant::TableBaseline && period != kTablePeriod)
            throw std::invalid_argument("table baseline period must be 256");
    }
};

// Quintic interpolant 6t^5 - 15t^4 + 10t^3; first and second
// derivatives vanish at both endpoints.
inline double fade(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("fade argument outside [0,1]");
    return t * t * t * (t * (t * 6.0 - 15.0) + 10.0);
}

namespace detail {

inline double lerp(double a, double b, double w) { return a + w * (b - a); }

// Non-negative residue of a cell coordinate, so negative inputs stay
// periodic.
inline std::uint32_t wrap_coord(std::int64_t c, std::uint32_t period) {
    // Power-of-two periods (the defaults 2^20 and 256) reduce with a
    // mask; because period divides 2^32, truncating two's-complement
    // conversion keeps negative inputs on the same residue.
    if ((period & (period - 1)) == 0)
        return static_cast<std::uint32_t>(c) & (period - 1);
    std::int64_t m = c % static_cast<std::int64_t>(period);
    if (m < 0) m += period;
    return static_cast<std::uint32_t>(m);
}

inline void check_finite(double v) {
    if (!std::isfinite(v))
        throw std::invalid_argument("noise input must be finite");
}

// The kernels are templated on the gradient source so the variant
// switch runs once per evaluation instead of once per corner, and the
// hash chain inlines into the corner loop.
template <typename Grad2>
inline double noise2_kernel(std::uint32_t period, double x, double y,
                            Grad2&& grad) {
    const double fx = std::floor(x), fy = std::floor(y);
    const auto cx = static_cast<std::int64_t>(fx);
    const auto cy = static_cast<std::int64_t>(fy);
    const double dx = x - fx, dy = y - fy;

    // wrap once per axis; the +1 neighbour wraps by increment
    const std::uint32_t xs0 = wrap_coord(cx, period);
    const std::uint32_t ys0 = wrap_coord(cy, period);
    const std::uint32_t xs[2] = {xs0, xs0 + 1 == period ? 0 : xs0 + 1};
    const std::uint32_t ys[2] = {ys0, ys0 + 1 == period ? 0 : ys0 + 1};

    double corner[2][2];
    for (int ox = 0; ox < 2; ++ox)
        for (int oy = 0; oy < 2; ++oy) {
            const Gradient2 g = grad(LatticePoint2{xs[ox], ys[oy]});
            corner[ox][oy] = g.x * (dx - ox) + g.y * (dy - oy);
        }

    const double u = fade(dx), v = fade(dy);
    return lerp(lerp(corner[0][0], corner[1][0], u),
                lerp(corner[0][1], corner[1][1], u), v);
}

template <typename Grad3>
inline double noise3_kernel(std::uint32_t period, double x, double y,
                            double z, Grad3&& grad) {
    const double fx = std::floor(x), fy = std::floor(y), fz = std::floor(z);
    const auto cx = static_cast<std::int64_t>(fx);
    const auto cy = static_cast<std::int64_t>(fy);
    const auto cz = static_cast<std::int64_t>(fz);
    const double dx = x - fx, dy = y - fy, dz = z - fz;

    const std::uint32_t xs0 = wrap_coord(cx, period);
    const std::uint32_t ys0 = wrap_coord(cy, period);
    const std::uint32_t zs0 = wrap_coord(cz, period);
    const std::uint32_t xs[2] = {xs0, xs0 + 1 == period ? 0 : xs0 + 1};
    const std::uint32_t ys[2] = {ys0, ys0 + 1 == period ? 0 : ys0 + 1};
    const std::uint32_t zs[2] = {zs0, zs0 + 1 == period ? 0 : zs0 + 1};

    double corner[2][2][2];
    for (int ox = 0; ox < 2; ++ox)
        for (int oy = 0; oy < 2; ++oy)
            for (int oz = 0; oz < 2; ++oz) {
                const Gradient3 g =
                    grad(LatticePoint3{xs[ox], ys[oy], zs[oz]});
                corner[ox][oy][oz] = g.x * (dx - ox) + g.y * (dy - oy) +
                                     g.z * (dz - oz);
            }

    const double u = fade(dx), v = fade(dy), w = fade(dz);
    const double front = lerp(lerp(corner[0][0][0], corner[1][0][0], u),
                              lerp(corner[0][1][0], corner[1][1][0], u), v);
    const double back = lerp(lerp(corner[0][0][1], corner[1][0][1], u),
                             lerp(corner[0][1][1], corner[1][1][1], u), v);
    return lerp(front, back, w);
}

// Hash-variant kernels batch the sine arguments so the polynomial in
// sin_word vectorizes across all corners. Shared chain prefixes
// (H(x), then H(x)+y) are computed once per axis value; the results
// are identical to per-corner evaluation because the chain is pure.
template <Word32 (*H)(Word32)>
inline double noise2_hash_kernel(std::uint32_t period, double x, double y) {
    const double fx = std::floor(x), fy = std::floor(y);
    const double dx = x - fx, dy = y - fy;
    const std::uint32_t xs0 =
        wrap_coord(static_cast<std::int64_t>(fx), period);
    const std::uint32_t ys0 =
        wrap_coord(static_cast<std::int64_t>(fy), period);
    const std::uint32_t xs[2] = {xs0, xs0 + 1 == period ? 0 : xs0 + 1};
    const std::uint32_t ys[2] = {ys0, ys0 + 1 == period ? 0 : ys0 + 1};

    const Word32 hx[2] = {H(xs[0]), H(xs[1])};
    Word32 args[8];
    for (int ox = 0; ox < 2; ++ox)
        for (int oy = 0; oy < 2; ++oy) {
            const Word32 hy = H(wrap_add(hx[ox], ys[oy]));
            args[(ox * 2 + oy) * 2 + 0] = wrap_add(hx[ox], hy);
            args[(ox * 2 + oy) * 2 + 1] = wrap_add(hy, hy);
        }
    double nv[8];
    for (int j = 0; j < 8; ++j) nv[j] = to_real(args[j]);
    double s[8];
    for (int j = 0; j < 8; ++j) s[j] = sin_integer(nv[j]);

    double corner[2][2];
    for (int ox = 0; ox < 2; ++ox)
        for (int oy = 0; oy < 2; ++oy)
            corner[ox][oy] = s[(ox * 2 + oy) * 2 + 0] * (dx - ox) +
                             s[(ox * 2 + oy) * 2 + 1] * (dy - oy);

    const double u = fade(dx), v = fade(dy);
    return lerp(lerp(corner[0][0], corner[1][0], u),
                lerp(corner[0][1], corner[1][1], u), v);
}

template <Word32 (*H)(Word32)>
inline double noise3_hash_kernel(std::uint32_t period, double x, double y,
                                 double z) {
    const double fx = std::floor(x), fy = std::floor(y), fz = std::floor(z);
    const double dx = x - fx, dy = y - fy, dz = z - fz;
    const std::uint32_t xs0 =
        wrap_coord(static_cast<std::int64_t>(fx), period);
    const std::uint32_t ys0 =
        wrap_coord(static_cast<std::int64_t>(fy), period);
    const std::uint32_t zs0 =
        wrap_coord(static_cast<std::int64_t>(fz), period);
    const std::uint32_t xs[2] = {xs0, xs0 + 1 == period ? 0 : xs0 + 1};
    const std::uint32_t ys[2] = {ys0, ys0 + 1 == period ? 0 : ys0 + 1};
    const std::uint32_t zs[2] = {zs0, zs0 + 1 == period ? 0 : zs0 + 1};

    Word32 args[24];
    for (int c = 0; c < 8; ++c) {
        const Word32 hx = H(xs[c >> 2]);
        const Word32 hy = H(wrap_add(hx, ys[(c >> 1) & 1]));
        const Word32 hz = H(wrap_add(hy, zs[c & 1]));
        args[c * 3 + 0] = wrap_add(hz, hx);
        args[c * 3 + 1] = wrap_add(hz, hy);
        args[c * 3 + 2] = wrap_add(hz, hz);
    }
    double nv[24];
    for (int j = 0; j < 24; ++j) nv[j] = to_real(args[j]);
    double s[24];
    for (int j = 0; j < 24; ++j) s[j] = sin_integer(nv[j]);

    double corner[2][2][2];
    for (int ox = 0; ox < 2; ++ox)
        for (int oy = 0; oy < 2; ++oy)
            for (int oz = 0; oz < 2; ++oz) {
                const int base = ((ox * 2 + oy) * 2 + oz) * 3;
                corner[ox][oy][oz] = s[base + 0] * (dx - ox) +
                                     s[base + 1] * (dy - oy) +
                                     s[base + 2] * (dz - oz);
            }

    const double u = fade(dx), v = fade(dy), w = fade(dz);
    const double front = lerp(lerp(corner[0][0][0], corner[1][0][0], u),
                              lerp(corner[0][1][0], corner[1][1][0], u), v);
    const double back = lerp(lerp(corner[0][0][1], corner[1][0][1], u),
                             lerp(corner[0][1][1], corner[1][1][1], u), v);
    return lerp(front, back, w);
}

inline double noise_raw_2d(const NoiseConfig& cfg, double x, double y) {
    check_finite(x);
    check_finite(y);
    const std::uint32_t p = cfg.period;
    switch (cfg.variant) {
    case HashVariant::FNV1: return noise2_hash_kernel<fnv1>(p, x, y);
    case HashVariant::PartialFNV1:
        return noise2_hash_kernel<partial_fnv1>(p, x, y);
    case HashVariant::Jenkins: return noise2_hash_kernel<jenkins>(p, x, y);
    case HashVariant::PartialJenkins:
        return noise2_hash_kernel<partial_jenkins>(p, x, y);
    case HashVariant::Murmur: return noise2_hash_kernel<murmur>(p, x, y);
    case HashVariant::TableBaseline:
        return noise2_kernel(
            p, x, y, [](LatticePoint2 q) { return table_gradient(q); });
    }
    throw std::invalid_argument("unknown hash variant");
}

inline double noise_raw_3d(const NoiseConfig& cfg, double x, double y,
                           double z) {
    check_finite(x);
    check_finite(y);
    check_finite(z);
    const std::uint32_t p = cfg.period;
    switch (cfg.variant) {
    case HashVariant::FNV1: return noise3_hash_kernel<fnv1>(p, x, y, z);
    case HashVariant::PartialFNV1:
        return noise3_hash_kernel<partial_fnv1>(p, x, y, z);
    case HashVariant::Jenkins:
        return noise3_hash_kernel<jenkins>(p, x, y, z);
    case HashVariant::PartialJenkins:
        return noise3_hash_kernel<partial_jenkins>(p, x, y, z);
    case HashVariant::Murmur: return noise3_hash_kernel<murmur>(p, x, y, z);
    case HashVariant::TableBaseline:
        return noise3_kernel(
            p, x, y, z, [](LatticePoint3 q) { return table_gradient(q); });
    }
    throw std::invalid_argument("unknown hash variant");
}

} // namespace detail

// Unclamped evaluation; used for exceedance accounting.
inline double noise_raw(const NoiseConfig& cfg, double x, double y) {
    if (cfg.dim != 2) throw std::invalid_argument("config dim is not 2");
    return detail::noise_raw_2d(cfg, x, y);
}

inline double noise_raw(const NoiseConfig& cfg, double x, double y, double z) {
    if (cfg.dim != 3) throw std::invalid_argument("config dim is not 3");
    return detail::noise_raw_3d(cfg, x, y, z);
}

inline double apply_clamp(const NoiseConfig& cfg, double v) {
    return cfg.clamp ? std::clamp(v, -1.0, 1.0) : v;
}

inline double noise(const NoiseConfig& cfg, double x, double y) {
    return apply_clamp(cfg, noise_raw(cfg, x, y));
}

inline double noise(const NoiseConfig& cfg, double x, double y, double z) {
    return apply_clamp(cfg, noise_raw(cfg, x, y, z));
}

// Absolute-value octave sum, frequency doubling and amplitude halving,
// normalized into [0,1].
inline double turbulence(const NoiseConfig& cfg, double x, double y,
                         double z, int octaves) {
    if (octaves < 1) throw std::invalid_argument("octaves must be >= 1");
    double sum = 0.0, norm = 0.0, freq = 1.0, amp = 1.0;
    for (int i = 0; i < octaves; ++i) {
        const double n = cfg.dim == 2
                             ? noise(cfg, x * freq, y * freq)
                             : noise(cfg, x * freq, y * freq, z * freq);
        sum += std::abs(n) * amp;
        norm += amp;
        freq *= 2.0;
        amp *= 0.5;
    }
    return sum / norm;
}

inline double turbulence(const NoiseConfig& cfg, double x, double y,
                         int octaves) {
    return turbulence(cfg, x, y, 0.0, octaves);
}

struct Rgb {
    double r, g, b;
};

inline constexpr Rgb kSkyBlue{0.30, 0.45, 0.85};
inline constexpr Rgb kCloudWhite{1.0, 1.0, 1.0};

inline Rgb clouds_color(double t) {
    return {detail::lerp(kSkyBlue.r, kCloudWhite.r, t),
            detail::lerp(kSkyBlue.g, kCloudWhite.g, t),
            detail::lerp(kSkyBlue.b, kCloudWhite.b, t)};
}

inline Rgb clouds(const NoiseConfig& cfg, double x, double y, double z,
                  int octaves) {
    return clouds_color(turbulence(cfg, x, y, z, octaves));
}

inline Rgb clouds(const NoiseConfig& cfg, double x, double y, int octaves) {
    return clouds(cfg, x, y, 0.0, octaves);
}

} // namespace hashnoise

#endif
