#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gf2perfect/scan.hpp"
#include "gf2perfect/word.hpp"

namespace gf2perfect::kernels {

struct WordFactor {
    word::Word prime = 0;
    unsigned exponent = 0;
};

/// At most 63 distinct primes divide a word polynomial.
struct WordFactors {
    std::array<WordFactor, 64> items{};
    unsigned size = 0;

    void push(word::Word p, unsigned e) noexcept { items[size++] = {p, e}; }
    std::span<const WordFactor> view() const noexcept { return {items.data(), size}; }
};

/// Smallest-prime-factor table over every polynomial of degree <= max_degree.
///
/// Built with one OpenMP-parallel pass per small prime; each pass writes a
/// disjoint set of slots, so the table is identical for any worker count.
class FactorSieve {
  public:
    /// primes must hold every irreducible of degree <= max_degree / 2, sorted.
    FactorSieve(unsigned max_degree, std::span<const word::Word> primes, int workers);

    unsigned max_degree() const noexcept { return max_degree_; }

    /// Factors a nonzero word. Powers of x and x+1 are stripped directly, so
    /// a may exceed max_degree as long as the odd cofactor does not.
    WordFactors factor(word::Word a) const;

  private:
    unsigned max_degree_;
    std::vector<word::Word> primes_;
    std::vector<std::uint16_t> spf_;  // 1 + index into primes_, 0 = prime or unit
};

/// sigma over a word factorization; the caller guarantees the result fits.
word::Word sigma(std::span<const WordFactor> factors) noexcept;
/// sigma(b^2) from the factorization of b.
word::Word sigma_of_square(std::span<const WordFactor> factors) noexcept;

}  // namespace gf2perfect::kernels
