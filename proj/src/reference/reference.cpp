#include "gf2perfect/reference.hpp"

#include <algorithm>

#include "gf2perfect/classify.hpp"
#include "gf2perfect/sigma.hpp"

namespace gf2perfect::reference {

SearchReport search_perfect(unsigned max_degree, SearchMode mode) {
    SearchReport report;
    report.max_degree = max_degree;
    report.mode = mode;
    const Poly xx1 = Poly::x() * Poly::x_plus_one();
    for (std::uint64_t v = 2; v < (std::uint64_t{2} << max_degree); ++v) {
        const Poly a = Poly::from_word(v);
        if (mode == SearchMode::PrunedEven && !divides(xx1, a)) continue;
        ++report.candidates_scanned;
        if (sigma(a) == a) report.found.push_back({a, classify_perfect(a)});
    }
    return report;
}

CensusReport gcd_condition_census(unsigned max_degree) {
    CensusReport report;
    report.max_degree = max_degree;
    std::uint64_t even = 0;
    std::uint64_t sat = 0;
    for (unsigned d = 1; d <= max_degree; ++d) {
        CensusRow row{d, 0, 0};
        for (std::uint64_t v = std::uint64_t{1} << d; v < (std::uint64_t{2} << d); ++v) {
            const Poly b = Poly::from_word(v);
            if (parity(b) != Parity::Even) continue;
            ++row.even_count;
            if (gcd(b.square(), sigma(b.square())).is_one()) ++row.satisfying_count;
        }
        even += row.even_count;
        sat += row.satisfying_count;
        report.per_degree.push_back(row);
    }
    report.cumulative_fraction = even == 0 ? Rational{0, 1} : Rational::of(sat, even);
    return report;
}

TheoremReport theorem_bruteforce(unsigned b_max_degree, unsigned prime_max_degree, PrimeMode mode,
                                 PrimeTable &table) {
    TheoremReport report;
    report.b_max_degree = b_max_degree;
    report.prime_max_degree = prime_max_degree;
    report.mode = mode;
    const std::vector<Poly> primes = prime_max_degree == 0 ? std::vector<Poly>{} : table.primes_up_to(prime_max_degree);
    auto &fail = report.hypothesis_failures;
    for (std::uint64_t v = 2; v < (std::uint64_t{2} << b_max_degree); ++v) {
        const Poly b = Poly::from_word(v);
        if (parity(b) == Parity::Odd) {
            ++fail.b_odd;
            continue;
        }
        const Poly b2 = b.square();
        const Poly s = sigma(b2);
        if (!gcd(b2, s).is_one()) {
            ++fail.gcd_condition;
            continue;
        }
        ++report.qualifying_b;
        std::vector<Poly> adm;
        for (const Poly &p : primes) {
            if (divides(p, b)) {
                ++fail.prime_divides_b;
            } else if (mode == PrimeMode::StrictOdd && parity(p) == Parity::Even) {
                ++fail.prime_even;
            } else {
                adm.push_back(p);
            }
        }
        auto test = [&](std::vector<Poly> ps) {
            ++report.prime_sets_tested;
            Poly lhs = s;
            Poly rhs = b2;
            for (const Poly &p : ps) {
                lhs = lhs * (p + Poly::one());
                rhs = rhs * p;
            }
            if (lhs == rhs) report.solutions.push_back({b, std::move(ps), rhs, classify_perfect(rhs)});
        };
        const std::size_t n = adm.size();
        test({});
        for (std::size_t i = 0; i < n; ++i) {
            test({adm[i]});
            for (std::size_t j = i; j < n; ++j) {
                if (j == i) {
                    ++fail.duplicate_prime;
                } else {
                    test({adm[i], adm[j]});
                }
                for (std::size_t k = j; k < n; ++k) {
                    if (j == i || k == j) {
                        ++fail.duplicate_prime;
                    } else {
                        test({adm[i], adm[j], adm[k]});
                    }
                }
            }
        }
    }
    std::sort(report.solutions.begin(), report.solutions.end());
    return report;
}

}  // namespace gf2perfect::reference
