#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gf2perfect {

/// Default limits, sized to finish in minutes on one laptop core.
struct Budgets {
    static constexpr unsigned kSearchFull = 20;
    static constexpr unsigned kSearchPruned = 24;
    static constexpr unsigned kCensus = 21;
    static constexpr unsigned kTheoremB = 8;
    static constexpr unsigned kTheoremP = 9;
    // Hard limits of the word kernels (sieve memory, 64-bit products); an
    // override cannot lift these.
    static constexpr unsigned kSieveMaxDegree = 28;
};

class BudgetError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Throws BudgetError when value exceeds the default budget without override,
/// or exceeds the hard limit at all.
void check_budget(const char *what, unsigned value, unsigned budget, unsigned hard_limit, bool allow_over_budget);

struct ScanOptions {
    /// OpenMP worker count; 0 uses the runtime default.
    int workers = 0;
    bool allow_over_budget = false;
};

__extension__ using U128 = unsigned __int128;

/// Exact nonnegative fraction, kept reduced.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational of(std::uint64_t n, std::uint64_t d) {
        if (d == 0) throw std::domain_error("zero denominator");
        const std::uint64_t g = std::gcd(n, d);
        return g == 0 ? Rational{0, 1} : Rational{n / g, d / g};
    }
    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept {
        const U128 l = static_cast<U128>(a.num) * b.den;
        const U128 r = static_cast<U128>(b.num) * a.den;
        return l <=> r;
    }
};

}  // namespace gf2perfect
