#ifndef HASHNOISE_HASHES_HPP
#define HASHNOISE_HASHES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hashnoise/word32.hpp"

namespace hashnoise {

// Selects one of the five hash kernels, or the classic
// permutation-table gradient source.
enum class HashVariant {
    FNV1,
    PartialFNV1,
    Jenkins,
    PartialJenkins,
    Murmur,
    TableBaseline,
};

inline constexpr HashVariant kHashOnlyVariants[] = {
    HashVariant::FNV1,    HashVariant::PartialFNV1,
    HashVariant::Jenkins, HashVariant::PartialJenkins,
    HashVariant::Murmur,
};

inline constexpr HashVariant kAllVariants[] = {
    HashVariant::FNV1,    HashVariant::PartialFNV1,
    HashVariant::Jenkins, HashVariant::PartialJenkins,
    HashVariant::Murmur,  HashVariant::TableBaseline,
};

inline std::string_view variant_name(HashVariant v) {
    switch (v) {
    case HashVariant::FNV1: return "fnv1";
    case HashVariant::PartialFNV1: return "partial-fnv1";
    case HashVariant::Jenkins: return "jenkins";
    case HashVariant::PartialJenkins: return "partial-jenkins";
    case HashVariant::Murmur: return "murmur";
    case HashVariant::TableBaseline: return "table";
    }
    return "?";
}

inline std::optional<HashVariant> parse_variant(std::string_view s) {
    for (HashVariant v : kAllVariants)
        if (variant_name(v) == s) return v;
    return std::nullopt;
}

namespace constants {
inline constexpr Word32 fnv_prime = 16777619u;
inline constexpr Word32 fnv_offset = static_cast<Word32>(-2128831035);
inline constexpr Word32 murmur_m = 1540483477u;
inline constexpr Word32 murmur_seed = 10u;
} // namespace constants

namespace detail {
struct Bytes {
    Word32 b0, b1, b2, b3;
};

// b3 uses mask 0xFF000000 with an arithmetic shift, so it is
// sign-extended when bit 31 of the key is set.
constexpr Bytes split_bytes(Word32 key) {
    return {
        key & 0xFFu,
        (key & 0xFF00u) >> 8,
        (key & 0xFF0000u) >> 16,
        shift_right_arith(key & 0xFF000000u, 24),
    };
}

constexpr Word32 jenkins_round(Word32 h, Word32 b) {
    h = wrap_add(h, b);
    h = wrap_add(h, shift_left(h, 10));
    h ^= shift_right_arith(h, 6);
    return h;
}

constexpr Word32 jenkins_final(Word32 h) {
    h = wrap_add(h, shift_left(h, 3));
    h ^= shift_right_arith(h, 11);
    h = wrap_add(h, shift_left(h, 15));
    return h;
}
} // namespace detail

constexpr Word32 fnv1(Word32 key) {
    const auto [b0, b1, b2, b3] = detail::split_bytes(key);
    Word32 ret = constants::fnv_offset;
    for (Word32 b : {b0, b1, b2, b3}) {
        ret = wrap_mul(ret, constants::fnv_prime);
        ret ^= b;
    }
    return ret;
}

constexpr Word32 jenkins(Word32 key) {
    const auto [b0, b1, b2, b3] = detail::split_bytes(key);
    Word32 h = 0;
    for (Word32 b : {b0, b1, b2, b3}) h = detail::jenkins_round(h, b);
    return detail::jenkins_final(h);
}

constexpr Word32 murmur(Word32 key) {
    Word32 k = key;
    Word32 h = constants::murmur_seed;
    k = wrap_mul(k, constants::murmur_m);
    k ^= shift_right_arith(k, 24);
    k = wrap_mul(k, constants::murmur_m);
    h = wrap_mul(h, constants::murmur_m);
    h ^= k;
    return h;
}

// Two rounds over the whole 32-bit key, no byte split.
constexpr Word32 partial_fnv1(Word32 key) {
    Word32 ret = constants::fnv_offset;
    for (int i = 0; i < 2; ++i) {
        ret = wrap_mul(ret, constants::fnv_prime);
        ret ^= key;
    }
    return ret;
}

// One mixing round over the whole key, then the usual finalization.
constexpr Word32 partial_jenkins(Word32 key) {
    return detail::jenkins_final(detail::jenkins_round(0, key));
}

inline Word32 dispatch(HashVariant variant, Word32 key) {
    switch (variant) {
    case HashVariant::FNV1: return fnv1(key);
    case HashVariant::PartialFNV1: return partial_fnv1(key);
    case HashVariant::Jenkins: return jenkins(key);
    case HashVariant::PartialJenkins: return partial_jenkins(key);
    case HashVariant::Murmur: return murmur(key);
    case HashVariant::TableBaseline:
        throw std::invalid_argument("variant has no scalar hash");
    }
    throw std::invalid_argument("unknown hash variant");
}

} // namespace hashnoise

#endif
