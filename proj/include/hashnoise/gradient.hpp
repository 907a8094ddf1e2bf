#ifndef HASHNOISE_GRADIENT_HPP
#define HASHNOISE_GRADIENT_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hashnoise/hashes.hpp"
#include "hashnoise/word32.hpp"

namespace hashnoise {

// Integer lattice coordinates, already reduced to [0, P).
struct LatticePoint2 {
    std::uint32_t x, y;
};
struct LatticePoint3 {
    std::uint32_t x, y, z;
};

struct Gradient2 {
    double x, y;
};
struct Gradient3 {
    double x, y, z;
};

// Sine of a signed 32-bit value in radians. The argument is reduced
// mod pi with a split-constant fma scheme, then a degree-17 odd
// polynomial is evaluated on [-pi/2, pi/2]. Reduction with an exact
// integer q preserves sin(n) = +-sin(n - pi*q), so only the two fma
// roundings (~2e-16) and the fit error (~3e-19) remain. Inlineable,
// unlike a libm call whose huge-argument path dominates the render
// loop.
// Core of sin_word on an already-converted double holding an integer
// value with |n| < 2^31. Pure double arithmetic so it vectorizes.
inline double sin_integer(double n) {
    constexpr double pi_hi = 3.141592653589793;
    constexpr double pi_mid = 1.2246467991473532e-16;
    constexpr double inv_pi = 0.3183098861837907;
    // round-to-nearest via the 2^52+2^51 magic constant; exact for the
    // |n|/pi < 2^31 range involved
    constexpr double round_magic = 6755399441055744.0;
    const double q = (n * inv_pi + round_magic) - round_magic;
    double r = std::fma(-q, pi_hi, n);
    r = std::fma(-q, pi_mid, r);
    // odd multiples of pi flip the sign: d = q - 2*round(q/2) is in
    // {-1, 0, 1}, so 1 - 2*d*d is the parity sign
    const double d = q - 2.0 * ((q * 0.5 + round_magic) - round_magic);
    const double sign = 1.0 - 2.0 * d * d;
    const double u = r * r;
    double p = 2.7215749422983443e-15;
    p = std::fma(p, u, -7.643026557971632e-13);
    p = std::fma(p, u, 1.605894087848656e-10);
    p = std::fma(p, u, -2.505210689056952e-08);
    p = std::fma(p, u, 2.7557319211229606e-06);
    p = std::fma(p, u, -0.00019841269841208676);
    p = std::fma(p, u, 0.008333333333333186);
    p = std::fma(p, u, -0.16666666666666666);
    p = std::fma(p, u, 1.0);
    return sign * r * p;
}

inline double sin_word(Word32 w) { return sin_integer(to_real(w)); }

// Hash-chained gradients: each coordinate's hash feeds the next, then
// the wrapped integer sums go through sin() to land in [-1,1].
inline Gradient2 hash_gradient_2d(HashVariant variant, LatticePoint2 p) {
    const Word32 x = dispatch(variant, p.x);
    const Word32 y = dispatch(variant, wrap_add(x, p.y));
    return {sin_word(wrap_add(x, y)), sin_word(wrap_add(y, y))};
}

inline Gradient3 hash_gradient_3d(HashVariant variant, LatticePoint3 p) {
    const Word32 x = dispatch(variant, p.x);
    const Word32 y = dispatch(variant, wrap_add(x, p.y));
    const Word32 z = dispatch(variant, wrap_add(y, p.z));
    return {sin_word(wrap_add(z, x)), sin_word(wrap_add(z, y)),
            sin_word(wrap_add(z, z))};
}

// Ken Perlin's reference permutation, duplicated to 512 so that
// perm[py + z] never indexes past the end.
inline const std::array<std::uint8_t, 512>& perm_table() {
    static const std::array<std::uint8_t, 512> table = [] {
        constexpr std::uint8_t base[256] = {
            151, 160, 137, 91,  90,  15,  131, 13,  201, 95,  96,  53,  194,
            233, 7,   225, 140, 36,  103, 30,  69,  142, 8,   99,  37,  240,
            21,  10,  23,  190, 6,   148, 247, 120, 234, 75,  0,   26,  197,
            62,  94,  252, 219, 203, 117, 35,  11,  32,  57,  177, 33,  88,
            237, 149, 56,  87,  174, 20,  125, 136, 171, 168, 68,  175, 74,
            165, 71,  134, 139, 48,  27,  166, 77,  146, 158, 231, 83,  111,
            229, 122, 60,  211, 133, 230, 220, 105, 92,  41,  55,  46,  245,
            40,  244, 102, 143, 54,  65,  25,  63,  161, 1,   216, 80,  73,
            209, 76,  132, 187, 208, 89,  18,  169, 200, 196, 135, 130, 116,
            188, 159, 86,  164, 100, 109, 198, 173, 186, 3,   64,  52,  217,
            226, 250, 124, 123, 5,   202, 38,  147, 118, 126, 255, 82,  85,
            212, 207, 206, 59,  227, 47,  16,  58,  17,  182, 189, 28,  42,
            223, 183, 170, 213, 119, 248, 152, 2,   44,  154, 163, 70,  221,
            153, 101, 155, 167, 43,  172, 9,   129, 22,  39,  253, 19,  98,
            108, 110, 79,  113, 224, 232, 178, 185, 112, 104, 218, 246, 97,
            228, 251, 34,  242, 193, 238, 210, 144, 12,  191, 179, 162, 241,
            81,  51,  145, 235, 249, 14,  239, 107, 49,  192, 214, 31,  181,
            199, 106, 157, 184, 84,  204, 176, 115, 121, 50,  45,  127, 4,
            150, 254, 138, 236, 205, 93,  222, 114, 67,  29,  24,  72,  243,
            141, 128, 195, 78,  66,  215, 61,  156, 180};
        std::array<std::uint8_t, 512> t{};
        for (int i = 0; i < 512; ++i) t[i] = base[i & 255];
        return t;
    }();
    return table;
}

inline constexpr double kHalfSqrt2 = 0.70710678118654752440;

// 8 directions for 2D.
inline constexpr std::array<Gradient2, 8> grad_table_2d = {{
    {1, 0},
    {-1, 0},
    {0, 1},
    {0, -1},
    {kHalfSqrt2, kHalfSqrt2},
    {kHalfSqrt2, -kHalfSqrt2},
    {-kHalfSqrt2, kHalfSqrt2},
    {-kHalfSqrt2, -kHalfSqrt2},
}};

// 12 cube-edge vectors for 3D (improved-Perlin convention, unnormalized).
inline constexpr std::array<Gradient3, 12> grad_table_3d = {{
    {1, 1, 0},
    {-1, 1, 0},
    {1, -1, 0},
    {-1, -1, 0},
    {1, 0, 1},
    {-1, 0, 1},
    {1, 0, -1},
    {-1, 0, -1},
    {0, 1, 1},
    {0, -1, 1},
    {0, 1, -1},
    {0, -1, -1},
}};

// Classic permute chain; coordinates must already be reduced mod 256.
inline int table_permute(LatticePoint3 p,
                         const std::array<std::uint8_t, 512>& t = perm_table()) {
    const int px = t[p.x];
    const int py = t[p.y + px];
    return t[py + p.z];
}

inline int table_permute(LatticePoint2 p,
                         const std::array<std::uint8_t, 512>& t = perm_table()) {
    const int px = t[p.x];
    return t[p.y + px];
}

inline Gradient2 table_gradient(LatticePoint2 p) {
    return grad_table_2d[table_permute(p) % grad_table_2d.size()];
}

inline Gradient3 table_gradient(LatticePoint3 p) {
    return grad_table_3d[table_permute(p) % grad_table_3d.size()];
}

// Unified gradient source used by the noise evaluator.
inline Gradient2 gradient_at(HashVariant variant, LatticePoint2 p) {
    if (variant == HashVariant::TableBaseline) return table_gradient(p);
    return hash_gradient_2d(variant, p);
}

inline Gradient3 gradient_at(HashVariant variant, LatticePoint3 p) {
    if (variant == HashVariant::TableBaseline) return table_gradient(p);
    return hash_gradient_3d(variant, p);
}

} // namespace hashnoise

#endif
