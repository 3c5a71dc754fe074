#pragma once

// Carry-less 64x64 -> 128 multiplication. The portable path is the serial
// reference; the PCLMULQDQ path is selected at compile time.

#include <cstdint>

#if defined(__PCLMUL__) && defined(__SSE4_1__)
#include <smmintrin.h>
#include <wmmintrin.h>
#define APNCERT_HW_CLMUL 1
#endif

namespace apncert::kernels {

using u128 = unsigned __int128;

inline u128 clmul_portable(std::uint64_t a, std::uint64_t b) noexcept
{
    // 4-bit window over b; table entries hold a * i for every nibble i.
    u128 table[16];
    table[0] = 0;
    table[1] = a;
    for (int i = 2; i < 16; i += 2) {
        table[i] = table[i / 2] << 1;
        table[i + 1] = table[i] ^ a;
    }
    u128 r = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        r = (r << 4) ^ table[(b >> shift) & 0xF];
    }
    return r;
}

#if defined(APNCERT_HW_CLMUL)
inline u128 clmul_hw(std::uint64_t a, std::uint64_t b) noexcept
{
    const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a));
    const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b));
    const __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
    const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
    const auto hi = static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
    return (static_cast<u128>(hi) << 64) | lo;
}
#endif

inline u128 clmul(std::uint64_t a, std::uint64_t b) noexcept
{
#if defined(APNCERT_HW_CLMUL)
    return clmul_hw(a, b);
#else
    return clmul_portable(a, b);
#endif
}

constexpr bool has_hw_clmul() noexcept
{
#if defined(APNCERT_HW_CLMUL)
    return true;
#else
    return false;
#endif
}

/// Degree of a nonzero bit polynomial; -1 for zero.
inline int bit_degree(u128 v) noexcept
{
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) {
        return 127 - __builtin_clzll(hi);
    }
    const auto lo = static_cast<std::uint64_t>(v);
    return lo == 0 ? -1 : 63 - __builtin_clzll(lo);
}

}  // namespace apncert::kernels
