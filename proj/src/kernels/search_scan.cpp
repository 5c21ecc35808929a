#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include <omp.h>

#include "gf2perfect/classify.hpp"
#include "gf2perfect/factorize.hpp"
#include "gf2perfect/kernels/sieve.hpp"
#include "gf2perfect/search.hpp"
#include "gf2perfect/sigma.hpp"

namespace gf2perfect {

namespace {

using word::Word;

int thread_count(const ScanOptions &opts) { return opts.workers > 0 ? opts.workers : omp_get_max_threads(); }

kernels::FactorSieve make_sieve(unsigned degree, int threads) {
    PrimeTable table;
    const auto primes = table.words_up_to(std::max(1U, degree / 2));
    return kernels::FactorSieve(degree, primes, threads);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string_view to_string(SearchMode m) noexcept { return m == SearchMode::Full ? "full" : "pruned-even"; }

SearchMode parse_search_mode(std::string_view s) {
    if (s == "full") return SearchMode::Full;
    if (s == "pruned-even" || s == "pruned") return SearchMode::PrunedEven;
    throw std::invalid_argument("unknown search mode '" + std::string(s) + "' (full | pruned-even)");
}

std::size_t SearchReport::unknown_count() const {
    return static_cast<std::size_t>(
        std::count_if(found.begin(), found.end(), [](const FoundPerfect &f) { return f.classification == "UNKNOWN"; }));
}

std::string classify_perfect(const Poly &a) {
    if (auto n = trivial_index(a)) return "T(" + std::to_string(*n) + ")";
    if (auto name = catalogue().name_of(a)) return std::string(*name);
    return "UNKNOWN";
}

SearchReport search_perfect(unsigned max_degree, SearchMode mode, const ScanOptions &opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (mode == SearchMode::Full) {
        check_budget("full search degree", max_degree, Budgets::kSearchFull, Budgets::kSieveMaxDegree,
                     opts.allow_over_budget);
    } else {
        check_budget("pruned search degree", max_degree, Budgets::kSearchPruned, Budgets::kSieveMaxDegree + 2,
                     opts.allow_over_budget);
    }
    SearchReport report;
    report.max_degree = max_degree;
    report.mode = mode;
    if (max_degree < 1 || (mode == SearchMode::PrunedEven && max_degree < 2)) {
        report.elapsed_seconds = seconds_since(t0);
        return report;
    }

    const int threads = thread_count(opts);
    // Candidates are indexed by i in [lo, hi); full mode scans a = i, pruned
    // mode scans a = x(x+1) * i.
    const unsigned sieve_degree = mode == SearchMode::Full ? max_degree : max_degree - 2;
    const kernels::FactorSieve sieve = make_sieve(sieve_degree, threads);
    const Word lo = mode == SearchMode::Full ? 2 : 1;
    const Word hi = Word{2} << sieve_degree;
    const Word scale = mode == SearchMode::Full ? 1 : 0b110;

    std::vector<Word> hits;
#pragma omp parallel num_threads(threads)
    {
        std::vector<Word> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = static_cast<std::int64_t>(lo); i < static_cast<std::int64_t>(hi); ++i) {
            const Word a = word::clmul(static_cast<Word>(i), scale);
            const kernels::WordFactors f = sieve.factor(a);
            if (kernels::sigma(f.view()) == a) local.push_back(a);
        }
#pragma omp critical(search_merge)
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());

    report.candidates_scanned = hi - lo;
    for (Word a : hits) {
        Poly p = Poly::from_word(a);
        std::string cls = classify_perfect(p);
        report.found.push_back({std::move(p), std::move(cls)});
    }
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

bool satisfies_gcd_condition(const Poly &b) {
    if (b.is_zero() || parity(b) != Parity::Even) return false;
    const Poly b2 = b.square();
    return gcd(b2, sigma(b2)).is_one();
}

CensusReport gcd_condition_census(unsigned max_degree, const ScanOptions &opts) {
    const auto t0 = std::chrono::steady_clock::now();
    check_budget("census degree", max_degree, Budgets::kCensus, Budgets::kSieveMaxDegree, opts.allow_over_budget);
    CensusReport report;
    report.max_degree = max_degree;
    if (max_degree == 0) {
        report.cumulative_fraction = Rational{0, 1};
        return report;
    }
    const int threads = thread_count(opts);
    const kernels::FactorSieve sieve = make_sieve(max_degree, threads);
    std::vector<std::uint64_t> even(max_degree + 1, 0);
    std::vector<std::uint64_t> sat(max_degree + 1, 0);
    const Word hi = Word{2} << max_degree;

#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t> local_even(max_degree + 1, 0);
        std::vector<std::uint64_t> local_sat(max_degree + 1, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 2; i < static_cast<std::int64_t>(hi); ++i) {
            const auto b = static_cast<Word>(i);
            if (word::is_odd(b)) continue;
            const auto d = static_cast<unsigned>(word::degree(b));
            ++local_even[d];
            const kernels::WordFactors f = sieve.factor(b);
            // gcd(B^2, s) = 1 iff gcd(B, s) = 1.
            if (word::gcd(kernels::sigma_of_square(f.view()), b) == 1) ++local_sat[d];
        }
#pragma omp critical(census_merge)
        for (unsigned d = 0; d <= max_degree; ++d) {
            even[d] += local_even[d];
            sat[d] += local_sat[d];
        }
    }

    std::uint64_t total_even = 0;
    std::uint64_t total_sat = 0;
    for (unsigned d = 1; d <= max_degree; ++d) {
        report.per_degree.push_back({d, even[d], sat[d]});
        total_even += even[d];
        total_sat += sat[d];
    }
    report.cumulative_fraction = Rational::of(total_sat, total_even);
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

}  // namespace gf2perfect
