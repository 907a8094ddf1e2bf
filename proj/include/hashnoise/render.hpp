#ifndef HASHNOISE_RENDER_HPP
#define HASHNOISE_RENDER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hashnoise/noise.hpp"

namespace hashnoise {

struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> pixels;

    std::uint8_t& at(int x, int y, int c) {
        return pixels[static_cast<std::size_t>((y * width + x) * channels + c)];
    }
    std::uint8_t at(int x, int y, int c) const {
        return pixels[static_cast<std::size_t>((y * width + x) * channels + c)];
    }
};

enum class RenderMode { Noise, Turbulence, Clouds };

struct RenderSpec {
    NoiseConfig config;
    RenderMode mode = RenderMode::Noise;
    int width = 256;
    int height = 256;
    double scale = 8.0;   // lattice units across the image width
    int octaves = 5;      // turbulence/clouds only
    double slice = 0.5;   // z coordinate for dim=3

    void validate() const {
        config.validate();
        if (width < 1 || height < 1)
            throw std::invalid_argument("image size must be >= 1x1");
        if (scale <= 0.0) throw std::invalid_argument("scale must be > 0");
        if (octaves < 1) throw std::invalid_argument("octaves must be >= 1");
    }
};

namespace detail {

// Round-to-nearest on [0,255]; +0.5 truncation matches lround here
// because the scaled value is non-negative.
inline std::uint8_t unit_to_byte(double v) {
    return static_cast<std::uint8_t>(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5);
}

// Maps [-1,1] to [0,255].
inline std::uint8_t noise_to_byte(double v) {
    return unit_to_byte((v + 1.0) / 2.0);
}

} // namespace detail

// Renders rows [y0, y1) into an already-sized buffer; any row
// partitioning yields the same pixels as a single full pass.
inline void render_rows(const RenderSpec& spec, int y0, int y1,
                        ImageBuffer& img) {
    const NoiseConfig& cfg = spec.config;
    // pixel-center coordinates; precomputed per column/row so the
    // divisions run once, with the same arithmetic as the direct form
    std::vector<double> xcoord(static_cast<std::size_t>(spec.width));
    for (int i = 0; i < spec.width; ++i)
        xcoord[static_cast<std::size_t>(i)] =
            (i + 0.5) / spec.width * spec.scale;
    for (int j = y0; j < y1; ++j) {
        const double y = (j + 0.5) / spec.height * spec.scale;
        for (int i = 0; i < spec.width; ++i) {
            const double x = xcoord[static_cast<std::size_t>(i)];
            switch (spec.mode) {
            case RenderMode::Noise: {
                const double v = cfg.dim == 2
                                     ? noise(cfg, x, y)
                                     : noise(cfg, x, y, spec.slice);
                img.at(i, j, 0) = detail::noise_to_byte(v);
                break;
            }
            case RenderMode::Turbulence: {
                const double t = cfg.dim == 2
                                     ? turbulence(cfg, x, y, spec.octaves)
                                     : turbulence(cfg, x, y, spec.slice,
                                                  spec.octaves);
                img.at(i, j, 0) = detail::unit_to_byte(t);
                break;
            }
            case RenderMode::Clouds: {
                const Rgb c = cfg.dim == 2
                                  ? clouds(cfg, x, y, spec.octaves)
                                  : clouds(cfg, x, y, spec.slice,
                                           spec.octaves);
                img.at(i, j, 0) = detail::unit_to_byte(c.r);
                img.at(i, j, 1) = detail::unit_to_byte(c.g);
                img.at(i, j, 2) = detail::unit_to_byte(c.b);
                break;
            }
            }
        }
    }
}

inline ImageBuffer render(const RenderSpec& spec) {
    spec.validate();
    ImageBuffer img;
    img.width = spec.width;
    img.height = spec.height;
    img.channels = spec.mode == RenderMode::Clouds ? 3 : 1;
    img.pixels.assign(static_cast<std::size_t>(img.width) * img.height *
                          img.channels,
                      0);
    render_rows(spec, 0, spec.height, img);
    return img;
}

// Binary PGM (P5) for 1 channel, binary PPM (P6) for 3; byte-exact.
inline void write_pnm(const ImageBuffer& img, const std::string& path) {
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("pnm supports 1 or 3 channels");
    if (img.pixels.size() != static_cast<std::size_t>(img.width) *
                                 img.height * img.channels)
        throw std::invalid_argument("pixel buffer size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << (img.channels == 1 ? "P5" : "P6") << "\n"
        << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace hashnoise

#endif
