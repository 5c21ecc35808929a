#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gf2perfect/poly.hpp"

namespace gf2perfect {

enum class Parity { Even, Odd };

std::string_view to_string(Parity p) noexcept;

/// Odd iff a(0) = a(1) = 1. Throws std::domain_error on zero.
Parity parity(const Poly &a);

/// True iff a + 1 = x^alpha (x+1)^beta. Throws std::domain_error on zero.
bool is_mersenne(const Poly &a);

/// All coefficients 0..deg a equal to 1.
bool is_complete(const Poly &a);
/// a = 1 + b + ... + b^k with k = deg a / deg b; false when deg b does not divide deg a.
bool is_complete_in(const Poly &a, const Poly &b);

/// sigma(a) == a; 0 and 1 count as perfect by convention.
bool is_perfect(const Poly &a);

inline constexpr unsigned kTrivialPerfectBudget = 16;

/// T(n) = (x(x+1))^(2^n - 1). Throws std::out_of_range above max_n.
Poly trivial_perfect(unsigned n, unsigned max_n = kTrivialPerfectBudget);
/// n with trivial_perfect(n) == a, if any (n <= kTrivialPerfectBudget).
std::optional<unsigned> trivial_index(const Poly &a);

/// a = b^2 s with s square-free; b = prod p^floor(e/2), s = prod_{e odd} p.
struct SquareDecomposition {
    Poly b;
    Poly s;
    bool coprime = false;  // gcd(b, s) == 1
    bool b_even = false;
};

/// Never fails on a non-coprime pair; the flags report the hypotheses.
/// Throws std::domain_error on zero.
SquareDecomposition square_decompose(const Poly &a);

struct CatalogueEntry {
    std::string_view name;
    std::string_view factored;
    Poly value;
    std::size_t degree = 0;
};

struct NamedPrime {
    std::string_view name;
    Poly value;
};

/// The eleven known sporadic perfect polynomials and the six primes they use.
struct SporadicCatalogue {
    std::array<CatalogueEntry, 11> perfects;
    std::array<NamedPrime, 6> primes;

    const Poly &get(std::string_view name) const;
    std::optional<std::string_view> name_of(const Poly &a) const;
};

/// Built once from the factored forms and checked against stored hex literals;
/// a mismatch aborts the process.
const SporadicCatalogue &catalogue();

}  // namespace gf2perfect
