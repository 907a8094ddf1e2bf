#ifndef HASHNOISE_WORD32_HPP
#define HASHNOISE_WORD32_HPP

#include <cstdint>

namespace hashnoise {

// 32-bit two's-complement word with wrapping add/mul and arithmetic
// right shift, matching signed-int GLSL semantics. Stored as uint32_t
// so overflow stays defined; reinterpret as int32_t on demand.
using Word32 = std::uint32_t;

constexpr Word32 wrap_add(Word32 a, Word32 b) { return a + b; }
constexpr Word32 wrap_mul(Word32 a, Word32 b) { return a * b; }
constexpr Word32 shift_left(Word32 a, int n) { return a << n; }

// Sign-propagating shift, as GLSL does on int.
constexpr Word32 shift_right_arith(Word32 a, int n) {
    return static_cast<Word32>(static_cast<std::int32_t>(a) >> n);
}

constexpr std::int32_t to_signed(Word32 a) {
    return static_cast<std::int32_t>(a);
}

// Exact: every int32 is representable in a double.
constexpr double to_real(Word32 a) {
    return static_cast<double>(to_signed(a));
}

} // namespace hashnoise

#endif
