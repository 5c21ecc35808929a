#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gf2perfect/factorize.hpp"
#include "gf2perfect/poly.hpp"
#include "gf2perfect/scan.hpp"

namespace gf2perfect {

/// StrictOdd admits only odd primes P_j; Relaxed also admits x and x+1
/// (when they do not divide B), which is what M5a and M5b need.
enum class PrimeMode { StrictOdd, Relaxed };

std::string_view to_string(PrimeMode m) noexcept;
PrimeMode parse_prime_mode(std::string_view s);

/// A = B^2 P_1 ... P_r with sigma(A) = A.
struct TheoremSolution {
    Poly b;
    std::vector<Poly> primes;  // sorted
    Poly a;
    std::string name;  // catalogue name or "UNKNOWN"

    friend bool operator==(const TheoremSolution &, const TheoremSolution &) = default;
    friend auto operator<=>(const TheoremSolution &x, const TheoremSolution &y) {
        if (auto c = x.a <=> y.a; c != 0) return c;
        if (auto c = x.b <=> y.b; c != 0) return c;
        return x.primes <=> y.primes;
    }
};

struct HypothesisFailures {
    std::uint64_t b_odd = 0;
    std::uint64_t gcd_condition = 0;
    std::uint64_t prime_divides_b = 0;
    std::uint64_t prime_even = 0;  // strict-odd mode only
    std::uint64_t duplicate_prime = 0;

    HypothesisFailures &operator+=(const HypothesisFailures &o) noexcept;
    friend bool operator==(const HypothesisFailures &, const HypothesisFailures &) = default;
};

struct TheoremReport {
    unsigned b_max_degree = 0;
    unsigned prime_max_degree = 0;
    PrimeMode mode = PrimeMode::Relaxed;
    std::vector<TheoremSolution> solutions;  // sorted
    HypothesisFailures hypothesis_failures;
    std::uint64_t qualifying_b = 0;
    std::uint64_t prime_sets_tested = 0;
    double elapsed_seconds = 0.0;
};

/// Brute force over every even B (1 <= deg B <= b_max_degree) meeting the gcd
/// condition and every set of r <= 3 distinct admissible primes of degree
/// <= prime_max_degree, testing sigma(B^2) prod(P_j + 1) = B^2 prod P_j.
/// Sets with sigma(B^2) not dividing prod P_j are skipped before the full test.
TheoremReport theorem_bruteforce(unsigned b_max_degree, unsigned prime_max_degree, PrimeMode mode,
                                 PrimeTable &table, const ScanOptions &opts = {});

enum class Rejection { BZero, BNotEven, GcdConditionFails, RTooLarge };

std::string_view to_string(Rejection r) noexcept;

class HypothesisError : public std::invalid_argument {
  public:
    HypothesisError(Rejection reason, const std::string &what) : std::invalid_argument(what), reason_(reason) {}
    Rejection reason() const noexcept { return reason_; }

  private:
    Rejection reason_;
};

/// Proof-guided solver for a single B, complete for r <= r_max <= 3.
///
/// The known primes are the factors of sigma(B^2); at most two primes can be
/// missing. One missing prime is forced as C / (C + B^2) where C is the
/// product of (P + 1) over the known primes. With two missing, degree
/// balancing bounds the smaller one, which is enumerated from the table; the
/// other follows from the one-missing formula. Every emitted A is re-checked
/// with is_perfect. Violated hypotheses throw HypothesisError.
std::vector<TheoremSolution> solve_structured(const Poly &b, unsigned r_max, PrimeMode mode, PrimeTable &table);

}  // namespace gf2perfect
