#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gf2perfect/poly.hpp"

namespace gf2perfect::testing {

inline constexpr std::uint64_t kTestSeed = 20261016;

/// Uniform polynomial of degree exactly d (d >= 0), or zero when d < 0.
inline Poly random_poly_of_degree(std::mt19937_64 &rng, long d) {
    if (d < 0) return Poly::zero();
    std::vector<Poly::Limb> limbs(static_cast<std::size_t>(d) / 64 + 1);
    for (auto &l : limbs) l = rng();
    const auto top = static_cast<unsigned>(d % 64);
    limbs.back() &= top == 63 ? ~Poly::Limb{0} : ((Poly::Limb{1} << (top + 1)) - 1);
    limbs.back() |= Poly::Limb{1} << top;
    return Poly::from_limbs(std::move(limbs));
}

/// Degree uniform in [0, max_degree], then coefficients uniform.
inline Poly random_poly(std::mt19937_64 &rng, long max_degree) {
    std::uniform_int_distribution<long> deg(0, max_degree);
    return random_poly_of_degree(rng, deg(rng));
}

inline Poly random_nonconstant(std::mt19937_64 &rng, long max_degree) {
    std::uniform_int_distribution<long> deg(1, max_degree);
    return random_poly_of_degree(rng, deg(rng));
}

inline Poly hex(std::uint64_t v) { return Poly::from_word(v); }

}  // namespace gf2perfect::testing
