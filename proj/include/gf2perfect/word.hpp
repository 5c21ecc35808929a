#pragma once

// Single-word GF(2)[x] kernels used by the scan loops. A polynomial of degree
// at most 63 is held directly in a uint64_t. Callers guarantee that products
// fit (deg a + deg b <= 63); debug builds assert it.

#include <bit>
#include <cassert>
#include <cstdint>
#include <utility>

namespace gf2perfect::word {

using Word = std::uint64_t;

/// Degree of a nonzero word polynomial.
constexpr int degree(Word a) noexcept {
    assert(a != 0);
    return std::bit_width(a) - 1;
}

struct Wide {
    Word lo = 0;
    Word hi = 0;
};

/// Full 64x64 -> 128 carry-less product, 4-bit windowed.
constexpr Wide clmul_wide(Word a, Word b) noexcept {
    constexpr Word kTopMask = Word{7} << 61;
    const Word b0 = b & ~kTopMask;
    Word tab[16] = {};
    tab[1] = b0;
    for (int k = 2; k < 16; k += 2) {
        tab[k] = tab[k / 2] << 1;
        tab[k + 1] = tab[k] ^ b0;
    }
    Wide r;
    r.lo = tab[a >> 60];
    for (int shift = 56; shift >= 0; shift -= 4) {
        r.hi = (r.hi << 4) | (r.lo >> 60);
        r.lo = (r.lo << 4) ^ tab[(a >> shift) & 15];
    }
    for (int j = 61; j < 64; ++j) {
        if ((b >> j) & 1) {
            r.lo ^= a << j;
            r.hi ^= a >> (64 - j);
        }
    }
    return r;
}

/// Carry-less product that must fit in one word.
constexpr Word clmul(Word a, Word b) noexcept {
    if (a == 0 || b == 0) return 0;
    assert(degree(a) + degree(b) <= 63);
    if (a < b) std::swap(a, b);
    Word r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

constexpr Word square(Word a) noexcept { return clmul(a, a); }

constexpr Word mod(Word a, Word m) noexcept {
    assert(m != 0);
    const int dm = degree(m);
    while (a != 0) {
        const int da = degree(a);
        if (da < dm) break;
        a ^= m << (da - dm);
    }
    return a;
}

constexpr std::pair<Word, Word> divrem(Word a, Word d) noexcept {
    assert(d != 0);
    const int dd = degree(d);
    Word q = 0;
    while (a != 0) {
        const int da = degree(a);
        if (da < dd) break;
        q |= Word{1} << (da - dd);
        a ^= d << (da - dd);
    }
    return {q, a};
}

constexpr bool divides(Word d, Word a) noexcept { return mod(a, d) == 0; }

constexpr Word gcd(Word a, Word b) noexcept {
    while (b != 0) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

constexpr Word mul_mod(Word a, Word b, Word m) noexcept {
    const Wide w = clmul_wide(a, b);
    // Reduce the 128-bit product bit by bit from the top.
    const int dm = degree(m);
    Word hi = w.hi;
    Word lo = w.lo;
    for (int bit = 127; bit >= dm; --bit) {
        const bool set = bit >= 64 ? ((hi >> (bit - 64)) & 1) : ((lo >> bit) & 1);
        if (!set) continue;
        const int s = bit - dm;
        if (s >= 64) {
            hi ^= m << (s - 64);
        } else {
            lo ^= m << s;
            if (s > 0) hi ^= m >> (64 - s);
        }
    }
    return lo;
}

/// 1 + a + ... + a^e, which must fit in one word.
constexpr Word geometric_sum(Word a, unsigned e) noexcept {
    // S_e(a) = 1 + a S_{e-1}(a) for even e, (1 + a) S_{(e-1)/2}(a^2) for odd e.
    if (e == 0) return 1;
    if (e % 2 == 0) return 1 ^ clmul(a, geometric_sum(a, e - 1));
    return clmul(1 ^ a, geometric_sum(square(a), (e - 1) / 2));
}

/// a(1) == 1 and a(0) == 1.
constexpr bool is_odd(Word a) noexcept { return (a & 1) != 0 && (std::popcount(a) & 1) != 0; }

}  // namespace gf2perfect::word
