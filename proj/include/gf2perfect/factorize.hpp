#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gf2perfect/poly.hpp"
#include "gf2perfect/word.hpp"

namespace gf2perfect {

/// Seed for the pseudorandom fallback of equal-degree splitting. Reports
/// record it; the deterministic separators almost always suffice.
inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

struct PrimePower {
    Poly prime;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

/// Canonical factorization: distinct irreducibles sorted by (degree, hex),
/// each with a positive exponent.
class Factorization {
  public:
    Factorization() = default;
    /// Sorts and merges repeated primes. Does not check irreducibility.
    explicit Factorization(std::vector<PrimePower> factors);

    const std::vector<PrimePower> &factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    std::size_t omega() const noexcept { return factors_.size(); }
    std::uint32_t valuation(const Poly &prime) const;
    Poly product() const;
    /// Factored text such as "x^4(x+1)^4(x^4+x^3+1)"; "1" when empty.
    std::string to_string() const;

    friend bool operator==(const Factorization &, const Factorization &) = default;

  private:
    std::vector<PrimePower> factors_;
};

/// Rabin test. Throws std::domain_error for constants.
bool is_irreducible(const Poly &p);

/// Square-free decomposition with power-of-two multiplicities:
/// a = prod part_k^(2^k), each part square-free (parts need not be coprime).
/// x^3(x+1) gives [(x^2+x, 1), (x, 2)]. Throws std::domain_error on zero.
std::vector<PrimePower> squarefree_decompose(const Poly &a);

/// Full factorization. Distinct-degree splitting followed by trace-map
/// equal-degree splitting with a deterministic separator sequence and a
/// seeded pseudorandom fallback, so the output is reproducible.
/// factor(1) is empty; factor(0) throws std::domain_error.
Factorization factor(const Poly &a, std::uint64_t seed = kDefaultSeed);

std::size_t omega(const Poly &a);
/// Exponent of the irreducible p in a (0 if p does not divide a).
std::uint32_t valuation(const Poly &p, const Poly &a);

/// Number of irreducibles of degree d over F2: (1/d) sum_{e|d} mu(e) 2^(d/e).
std::uint64_t necklace_count(std::size_t d);

/// Irreducibles by degree, optionally persisted to a cache file.
///
/// Extension is single-writer; once built the table may be shared read-only.
/// Cache format: "# gf2-primes v1 max_degree=<d>" then "<degree> <hex>" lines
/// sorted by (degree, hex).
class PrimeTable {
  public:
    static constexpr std::size_t kDefaultSieveCrossover = 16;
    static constexpr std::size_t kMaxDegree = 32;
    static constexpr std::string_view kFormatTag = "gf2-primes v1";

    PrimeTable() = default;
    /// Loads cache_file when it exists and is valid; later extensions rewrite it.
    explicit PrimeTable(std::filesystem::path cache_file);

    std::size_t max_degree() const noexcept { return by_degree_.size(); }
    const std::vector<Poly> &primes_of_degree(std::size_t d);
    void extend_to(std::size_t d);
    /// All primes of degree 1..d in canonical order (extends as needed).
    std::vector<Poly> primes_up_to(std::size_t d);
    /// Same, as words; d must not exceed 63.
    std::vector<word::Word> words_up_to(std::size_t d);

    void set_sieve_crossover(std::size_t d) noexcept { crossover_ = d; }
    const std::optional<std::filesystem::path> &cache_file() const noexcept { return cache_file_; }
    /// True when the constructor read primes from the cache file.
    bool loaded_from_cache() const noexcept { return loaded_from_cache_; }

    std::string serialize() const;
    /// Parses a cache file body; returns nullopt when malformed or inconsistent.
    static std::optional<std::vector<std::vector<Poly>>> deserialize(std::string_view text);

  private:
    std::vector<Poly> enumerate_degree(std::size_t d) const;
    void save() const;

    std::vector<std::vector<Poly>> by_degree_;  // index d-1
    std::optional<std::filesystem::path> cache_file_;
    std::size_t crossover_ = kDefaultSieveCrossover;
    bool loaded_from_cache_ = false;
};

/// All irreducibles of degree exactly d, from (and into) the table.
std::vector<Poly> primes_of_degree(std::size_t d, PrimeTable &table);

}  // namespace gf2perfect
