#include <catch2/catch_amalgamated.hpp>

#include "hashnoise/analysis.hpp"
#include "hashnoise/hashes.hpp"
#include "oracle.hpp"

using namespace hashnoise;

namespace {
constexpr Word32 kProbeKeys[] = {0u, 1u, 0x01000000u, 0xDEADBEEFu,
                                 123456789u};
}

TEST_CASE("fnv1 frozen values") {
    const Word32 expected[] = {0x4b95f515u, 0x0caf41cau, 0x4b95f514u,
                               0x8a03f45bu, 0x48efd611u};
    for (std::size_t i = 0; i < std::size(kProbeKeys); ++i)
        CHECK(fnv1(kProbeKeys[i]) == expected[i]);
    // key=0 collapses to offset * prime^4 mod 2^32
    CHECK(to_signed(fnv1(0)) == 1268118805);
}

TEST_CASE("jenkins frozen values and zero fixed point") {
    const Word32 expected[] = {0x0u, 0xbe3dbee6u, 0x124ea49du, 0x93e16af9u,
                               0x3978bc42u};
    for (std::size_t i = 0; i < std::size(kProbeKeys); ++i)
        CHECK(jenkins(kProbeKeys[i]) == expected[i]);
    CHECK(jenkins(0) == 0u);
    // byte position changes mixing order
    CHECK(jenkins(0x01000000u) != jenkins(1u));
}

TEST_CASE("murmur frozen values") {
    const Word32 expected[] = {0x96331fd2u, 0x0c148d34u, 0x7070416bu,
                               0x8fa302e9u, 0x8f341978u};
    for (std::size_t i = 0; i < std::size(kProbeKeys); ++i)
        CHECK(murmur(kProbeKeys[i]) == expected[i]);
    // k collapses to 0, so murmur(0) = 10 * m mod 2^32
    CHECK(to_signed(murmur(0)) == -1775034414);
}

TEST_CASE("partial fnv1 frozen values") {
    const Word32 expected[] = {0x117697cdu, 0x1076963bu, 0x7f7697cdu,
                               0x71746c3fu, 0xbe8c72abu};
    for (std::size_t i = 0; i < std::size(kProbeKeys); ++i)
        CHECK(partial_fnv1(kProbeKeys[i]) == expected[i]);
    CHECK(to_signed(partial_fnv1(0)) == 292984781);
}

TEST_CASE("partial jenkins frozen values and zero fixed point") {
    const Word32 expected[] = {0x0u, 0x124ea49du, 0x9b652480u, 0x0886a8feu,
                               0xe0755db4u};
    for (std::size_t i = 0; i < std::size(kProbeKeys); ++i)
        CHECK(partial_jenkins(kProbeKeys[i]) == expected[i]);
    CHECK(partial_jenkins(0) == 0u);
}

TEST_CASE("partial fnv1 is a distinct function from fnv1") {
    SplitMix64 rng(7);
    int distinct = 0;
    for (int i = 0; i < 100; ++i) {
        const Word32 k = rng.next_u32();
        if (partial_fnv1(k) != fnv1(k)) ++distinct;
    }
    CHECK(distinct > 0);
}

TEST_CASE("hashes match independent arbitrary-precision oracle") {
    struct Pair {
        HashVariant v;
        oracle::Kind k;
    };
    const Pair pairs[] = {
        {HashVariant::FNV1, oracle::Kind::FNV1},
        {HashVariant::PartialFNV1, oracle::Kind::PartialFNV1},
        {HashVariant::Jenkins, oracle::Kind::Jenkins},
        {HashVariant::PartialJenkins, oracle::Kind::PartialJenkins},
        {HashVariant::Murmur, oracle::Kind::Murmur},
    };
    for (const auto& [v, k] : pairs) {
        SplitMix64 rng(42);
        int mismatches = 0;
        for (int i = 0; i < 10000; ++i) {
            const Word32 key = rng.next_u32();
            if (dispatch(v, key) != static_cast<Word32>(oracle::hash(k, key)))
                ++mismatches;
        }
        INFO("variant " << variant_name(v));
        CHECK(mismatches == 0);
    }
}

TEST_CASE("determinism") {
    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Word32 k = rng.next_u32();
        for (HashVariant v : kHashOnlyVariants)
            CHECK(dispatch(v, k) == dispatch(v, k));
    }
}

TEST_CASE("dispatch delegates to the kernels") {
    CHECK(dispatch(HashVariant::Jenkins, 0) == 0u);
    SplitMix64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Word32 k = rng.next_u32();
        CHECK(dispatch(HashVariant::Murmur, k) == murmur(k));
    }
    CHECK_THROWS_AS(dispatch(HashVariant::TableBaseline, 0),
                    std::invalid_argument);
}

TEST_CASE("variant name round trip") {
    for (HashVariant v : kAllVariants)
        CHECK(parse_variant(variant_name(v)) == v);
    CHECK_FALSE(parse_variant("bogus").has_value());
}
