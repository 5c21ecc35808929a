#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "gf2perfect/classify.hpp"
#include "gf2perfect/kernels/sieve.hpp"
#include "gf2perfect/search.hpp"
#include "gf2perfect/theorem.hpp"

namespace gf2perfect {

using word::Word;

std::string_view to_string(PrimeMode m) noexcept { return m == PrimeMode::StrictOdd ? "strict-odd" : "relaxed"; }

PrimeMode parse_prime_mode(std::string_view s) {
    if (s == "strict-odd" || s == "strict") return PrimeMode::StrictOdd;
    if (s == "relaxed") return PrimeMode::Relaxed;
    throw std::invalid_argument("unknown prime mode '" + std::string(s) + "' (strict-odd | relaxed)");
}

std::string_view to_string(Rejection r) noexcept {
    switch (r) {
        case Rejection::BZero: return "b-zero";
        case Rejection::BNotEven: return "b-not-even";
        case Rejection::GcdConditionFails: return "gcd-condition-fails";
        case Rejection::RTooLarge: return "r-too-large";
    }
    return "unknown";
}

HypothesisFailures &HypothesisFailures::operator+=(const HypothesisFailures &o) noexcept {
    b_odd += o.b_odd;
    gcd_condition += o.gcd_condition;
    prime_divides_b += o.prime_divides_b;
    prime_even += o.prime_even;
    duplicate_prime += o.duplicate_prime;
    return *this;
}

namespace {

struct Local {
    std::vector<TheoremSolution> solutions;
    HypothesisFailures failures;
    std::uint64_t qualifying_b = 0;
    std::uint64_t sets = 0;
};

void record(Local &out, Word b, std::initializer_list<Word> primes) {
    std::vector<Poly> ps;
    Poly a = Poly::from_word(b).square();
    for (Word p : primes) {
        ps.push_back(Poly::from_word(p));
        a = a * ps.back();
    }
    std::sort(ps.begin(), ps.end());
    if (!is_perfect(a)) throw std::logic_error("word kernel emitted a non-perfect " + to_hex(a));
    out.solutions.push_back({Poly::from_word(b), std::move(ps), a, classify_perfect(a)});
}

void scan_b(Word b, const kernels::FactorSieve &sieve, std::span<const Word> primes, PrimeMode mode, Local &out) {
    if (word::is_odd(b)) {
        ++out.failures.b_odd;
        return;
    }
    const kernels::WordFactors fb = sieve.factor(b);
    const Word s = kernels::sigma_of_square(fb.view());
    if (word::gcd(s, b) != 1) {
        ++out.failures.gcd_condition;
        return;
    }
    ++out.qualifying_b;
    const Word b2 = word::square(b);

    std::vector<Word> adm;
    std::vector<Word> residue;
    for (Word p : primes) {
        if (word::divides(p, b)) {
            ++out.failures.prime_divides_b;
        } else if (mode == PrimeMode::StrictOdd && !word::is_odd(p)) {
            ++out.failures.prime_even;
        } else {
            adm.push_back(p);
            residue.push_back(word::mod(p, s));
        }
    }
    const std::uint64_t n = adm.size();
    // Multisets of size 2 and 3 with a repeated prime: n + n^2.
    out.failures.duplicate_prime += n + n * n;

    // s (P1+1)...(Pr+1) = B^2 P1...Pr, and gcd(B^2, s) = 1 forces s | P1...Pr.
    ++out.sets;
    if (s == b2) record(out, b, {});
    for (std::size_t i = 0; i < n; ++i) {
        const Word pi = adm[i];
        ++out.sets;
        if (residue[i] == 0 && word::clmul(s, pi ^ 1) == word::clmul(b2, pi)) record(out, b, {pi});
        for (std::size_t j = i + 1; j < n; ++j) {
            const Word pj = adm[j];
            const Word rij = word::mod(word::clmul(residue[i], residue[j]), s);
            ++out.sets;
            const Word pij = word::clmul(pi, pj);
            const Word qij = word::clmul(pi ^ 1, pj ^ 1);
            if (rij == 0 && word::clmul(s, qij) == word::clmul(b2, pij)) record(out, b, {pi, pj});
            for (std::size_t k = j + 1; k < n; ++k) {
                ++out.sets;
                if (word::mod(word::clmul(rij, residue[k]), s) != 0) continue;
                const Word pk = adm[k];
                if (word::clmul(s, word::clmul(qij, pk ^ 1)) == word::clmul(b2, word::clmul(pij, pk))) {
                    record(out, b, {pi, pj, pk});
                }
            }
        }
    }
}

}  // namespace

TheoremReport theorem_bruteforce(unsigned b_max_degree, unsigned prime_max_degree, PrimeMode mode,
                                 PrimeTable &table, const ScanOptions &opts) {
    const auto t0 = std::chrono::steady_clock::now();
    check_budget("theorem B degree", b_max_degree, Budgets::kTheoremB, 20, opts.allow_over_budget);
    check_budget("theorem prime degree", prime_max_degree, Budgets::kTheoremP, 20, opts.allow_over_budget);
    if (2 * b_max_degree + 3 * prime_max_degree > 63) {
        throw BudgetError("2*b_max_degree + 3*prime_max_degree must not exceed 63 (word products)");
    }
    TheoremReport report;
    report.b_max_degree = b_max_degree;
    report.prime_max_degree = prime_max_degree;
    report.mode = mode;

    const int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
    const std::vector<Word> primes = table.words_up_to(std::max(1U, prime_max_degree));
    const std::vector<Word> small = table.words_up_to(std::max(1U, b_max_degree / 2));
    const kernels::FactorSieve sieve(b_max_degree, small, threads);
    std::vector<Word> used_primes;
    if (prime_max_degree > 0) used_primes = primes;

    std::vector<Local> locals(static_cast<std::size_t>(threads));
    const auto hi = static_cast<std::int64_t>(Word{2} << b_max_degree);
    if (b_max_degree > 0) {
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16)
        for (std::int64_t b = 2; b < hi; ++b) {
            scan_b(static_cast<Word>(b), sieve, used_primes, mode, locals[static_cast<std::size_t>(omp_get_thread_num())]);
        }
    }
    for (auto &l : locals) {
        report.hypothesis_failures += l.failures;
        report.qualifying_b += l.qualifying_b;
        report.prime_sets_tested += l.sets;
        std::move(l.solutions.begin(), l.solutions.end(), std::back_inserter(report.solutions));
    }
    std::sort(report.solutions.begin(), report.solutions.end());
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace gf2perfect
