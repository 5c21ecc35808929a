#pragma once

#include <cstddef>
#include <cstdint>

#include "gf2perfect/factorize.hpp"
#include "gf2perfect/poly.hpp"

namespace gf2perfect {

/// 1 + a + a^2 + ... + a^e for an arbitrary polynomial a.
Poly geometric_sum(const Poly &a, std::uint64_t e);

/// sigma(p^e) = 1 + p + ... + p^e for a prime p; e = 0 gives 1.
Poly sigma_prime_power(const Poly &p, std::uint64_t e);

struct SigmaResult {
    Poly value;
    Factorization factored_input;
};

/// Divisor sum, computed multiplicatively over the factorization.
/// sigma(1) = 1; sigma(0) throws std::domain_error.
Poly sigma(const Poly &a);
Poly sigma(const Factorization &f);
SigmaResult sigma_with_factors(const Poly &a, std::uint64_t seed = kDefaultSeed);

inline constexpr std::size_t kSigmaNaiveDegreeBound = 20;

/// Divisor sum by enumerating every divisor (exponent tuples over the
/// factorization) and adding them up. Test oracle only: inputs above
/// degree_bound throw std::length_error.
Poly sigma_naive(const Poly &a, std::size_t degree_bound = kSigmaNaiveDegreeBound);

/// Both sides of S(a^e) + 1 = a (a+1)^(2^n - 1) S(a^(k-1))^(2^n), where
/// e = 2^n k with k odd and S(a^r) = 1 + a + ... + a^r.
struct GeometricSplit {
    Poly lhs;
    Poly rhs;
};

/// Throws std::invalid_argument when e is odd or zero.
GeometricSplit geometric_split(const Poly &a, std::uint64_t e);

}  // namespace gf2perfect
