#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gf2perfect/poly.hpp"
#include "gf2perfect/scan.hpp"

namespace gf2perfect {

enum class SearchMode { Full, PrunedEven };

std::string_view to_string(SearchMode m) noexcept;
SearchMode parse_search_mode(std::string_view s);

struct FoundPerfect {
    Poly value;
    /// "T(n)", a sporadic name such as "M16", or "UNKNOWN".
    std::string classification;

    friend bool operator==(const FoundPerfect &, const FoundPerfect &) = default;
};

struct SearchReport {
    unsigned max_degree = 0;
    SearchMode mode = SearchMode::Full;
    std::vector<FoundPerfect> found;  // sorted by value
    std::uint64_t candidates_scanned = 0;
    double elapsed_seconds = 0.0;

    std::size_t unknown_count() const;
};

/// Exhaustive perfect-polynomial scan.
///
/// Full mode visits every a with 1 <= deg a <= max_degree. PrunedEven visits
/// only multiples of x(x+1), which is where every even perfect lives; it
/// finds nothing odd by construction, and the report records the mode.
SearchReport search_perfect(unsigned max_degree, SearchMode mode, const ScanOptions &opts = {});

std::string classify_perfect(const Poly &a);

struct CensusRow {
    unsigned degree = 0;
    std::uint64_t even_count = 0;
    std::uint64_t satisfying_count = 0;

    Rational fraction() const { return Rational::of(satisfying_count, even_count); }
    friend bool operator==(const CensusRow &, const CensusRow &) = default;
};

struct CensusReport {
    unsigned max_degree = 0;
    std::vector<CensusRow> per_degree;
    Rational cumulative_fraction;
    double elapsed_seconds = 0.0;
};

/// For every even B with 1 <= deg B <= max_degree, tests gcd(B^2, sigma(B^2)) = 1.
CensusReport gcd_condition_census(unsigned max_degree, const ScanOptions &opts = {});

/// True iff b is even and gcd(b^2, sigma(b^2)) = 1.
bool satisfies_gcd_condition(const Poly &b);

}  // namespace gf2perfect
