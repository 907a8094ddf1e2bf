#ifndef HASHNOISE_SHADERGEN_HPP
#define HASHNOISE_SHADERGEN_HPP

#include <stdexcept>
#include <string>

#include "hashnoise/hashes.hpp"

namespace hashnoise {

// GLSL 1.30 source for the selected hash, with the byte-wise FNV1 top
// mask emitted as -16777216 (0xFF000000) so b3 extracts the top byte.
// Output is byte-stable for golden-file comparison.

namespace detail {

inline std::string glsl_hash_body(HashVariant v) {
    switch (v) {
    case HashVariant::FNV1:
        return R"(const int prime = 16777619;
const int offset = -2128831035;

int hashKey(int key)
{
    int ret = offset;

    int b0 = (key & 255);
    int b1 = (key & 65280) >> 8;
    int b2 = (key & 16711680) >> 16;
    int b3 = (key & -16777216) >> 24;

    ret *= prime;
    ret ^= b0;

    ret *= prime;
    ret ^= b1;

    ret *= prime;
    ret ^= b2;

    ret *= prime;
    ret ^= b3;

    return ret;
}
)";
    case HashVariant::PartialFNV1:
        return R"(const int prime = 16777619;
const int offset = -2128831035;

int hashKey(int key)
{
    int ret = offset;

    ret *= prime;
    ret ^= key;

    ret *= prime;
    ret ^= key;

    return ret;
}
)";
    case HashVariant::Jenkins:
        return R"(int hashKey(int key)
{
    int hash = 0;

    int b0 = (key & 255);
    int b1 = (key & 65280) >> 8;
    int b2 = (key & 16711680) >> 16;
    int b3 = (key & -16777216) >> 24;

    hash += b0;
    hash += (hash << 10);
    hash ^= (hash >> 6);

    hash += b1;
    hash += (hash << 10);
    hash ^= (hash >> 6);

    hash += b2;
    hash += (hash << 10);
    hash ^= (hash >> 6);

    hash += b3;
    hash += (hash << 10);
    hash ^= (hash >> 6);

    hash += (hash << 3);
    hash ^= (hash >> 11);
    hash += (hash << 15);

    return hash;
}
)";
    case HashVariant::PartialJenkins:
        return R"(int hashKey(int key)
{
    int hash = 0;

    hash += key;
    hash += (hash << 10);
    hash ^= (hash >> 6);

    hash += (hash << 3);
    hash ^= (hash >> 11);
    hash += (hash << 15);

    return hash;
}
)";
    case HashVariant::Murmur:
        return R"(const int m = 1540483477;

int hashKey(int key)
{
    int h = 10;
    int k = key;

    k *= m;
    k ^= k >> 24;
    k *= m;

    h *= m;
    h ^= k;

    return h;
}
)";
    case HashVariant::TableBaseline:
        throw std::invalid_argument("table baseline has no hash shader");
    }
    throw std::invalid_argument("unknown hash variant");
}

inline std::string glsl_gradient_body(int dim) {
    if (dim == 2)
        return R"(
vec2 gradient(ivec2 p)
{
    int x = hashKey(p.x);
    int y = hashKey(x + p.y);

    return sin(vec2(x + y, y + y));
}
)";
    if (dim == 3)
        return R"(
vec3 gradient(ivec3 p)
{
    int x = hashKey(p.x);
    int y = hashKey(x + p.y);
    int z = hashKey(y + p.z);

    return sin(vec3(z + x, z + y, z + z));
}
)";
    throw std::invalid_argument("gradient dim must be 2 or 3");
}

} // namespace detail

struct ShaderSource {
    HashVariant variant;
    std::string text;
};

inline ShaderSource shader_source(HashVariant variant, bool with_gradient,
                                  int dim = 2) {
    std::string text = "#version 130\n\n" + detail::glsl_hash_body(variant);
    if (with_gradient) text += detail::glsl_gradient_body(dim);
    return {variant, std::move(text)};
}

} // namespace hashnoise

#endif
