#include "gf2perfect/kernels/sieve.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace gf2perfect::kernels {

FactorSieve::FactorSieve(unsigned max_degree, std::span<const word::Word> primes, int workers)
    : max_degree_(max_degree), primes_(primes.begin(), primes.end()) {
    if (max_degree > Budgets::kSieveMaxDegree) throw std::out_of_range("sieve degree too large: " + std::to_string(max_degree));
    if (primes_.size() >= std::numeric_limits<std::uint16_t>::max()) throw std::out_of_range("too many sieve primes");
    const word::Word limit = word::Word{2} << max_degree;
    spf_.assign(static_cast<std::size_t>(limit), 0);
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    for (std::size_t idx = 0; idx < primes_.size(); ++idx) {
        const word::Word p = primes_[idx];
        const auto dp = static_cast<unsigned>(word::degree(p));
        if (2 * dp > max_degree) break;
        // Cofactors q with deg p <= deg q <= max_degree - deg p.
        const auto qlo = static_cast<std::int64_t>(word::Word{1} << dp);
        const auto qhi = static_cast<std::int64_t>(word::Word{2} << (max_degree - dp));
        const auto tag = static_cast<std::uint16_t>(idx + 1);
#pragma omp parallel for num_threads(threads) schedule(static)
        for (std::int64_t q = qlo; q < qhi; ++q) {
            const word::Word m = word::clmul(p, static_cast<word::Word>(q));
            auto &slot = spf_[static_cast<std::size_t>(m)];
            if (slot == 0) slot = tag;
        }
    }
}

WordFactors FactorSieve::factor(word::Word a) const {
    WordFactors out;
    if (a == 0) throw std::domain_error("factor of zero");
    const auto tz = static_cast<unsigned>(std::countr_zero(a));
    if (tz != 0) {
        out.push(2, tz);
        a >>= tz;
    }
    unsigned e1 = 0;
    while ((std::popcount(a) & 1) == 0) {
        a = word::divrem(a, 3).first;
        ++e1;
    }
    if (e1 != 0) out.push(3, e1);
    while (a != 1) {
        if (static_cast<unsigned>(word::degree(a)) > max_degree_) {
            throw std::out_of_range("cofactor exceeds sieve degree");
        }
        const std::uint16_t tag = spf_[static_cast<std::size_t>(a)];
        const word::Word p = tag == 0 ? a : primes_[tag - 1U];
        unsigned e = 0;
        for (;;) {
            const auto [q, r] = word::divrem(a, p);
            if (r != 0) break;
            a = q;
            ++e;
        }
        out.push(p, e);
    }
    return out;
}

word::Word sigma(std::span<const WordFactor> factors) noexcept {
    word::Word s = 1;
    for (const auto &f : factors) s = word::clmul(s, word::geometric_sum(f.prime, f.exponent));
    return s;
}

word::Word sigma_of_square(std::span<const WordFactor> factors) noexcept {
    word::Word s = 1;
    for (const auto &f : factors) s = word::clmul(s, word::geometric_sum(f.prime, 2 * f.exponent));
    return s;
}

}  // namespace gf2perfect::kernels
