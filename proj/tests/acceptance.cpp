// One PASS/FAIL line per acceptance criterion. With an argument, runs only
// that criterion; exit status is nonzero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gf2perfect/classify.hpp"
#include "gf2perfect/lemmas.hpp"
#include "gf2perfect/report.hpp"
#include "gf2perfect/search.hpp"
#include "gf2perfect/sigma.hpp"
#include "gf2perfect/theorem.hpp"
#include "support.hpp"

using namespace gf2perfect;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char *title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::set<std::uint64_t> expected_scan_set() {
    std::set<std::uint64_t> s{0x6, 0x78, 0x7f80};
    for (const auto &e : catalogue().perfects) {
        if (e.degree <= 24) s.insert(e.value.word());
    }
    return s;
}

Outcome scan_matches(const SearchReport &r) {
    std::set<std::uint64_t> got;
    for (const auto &f : r.found) got.insert(f.value.word());
    const bool ok = got == expected_scan_set() && got.size() == r.found.size() && r.unknown_count() == 0;
    return {ok, std::string(to_string(r.mode)) + " deg " + std::to_string(r.max_degree) + ": " +
                    std::to_string(r.found.size()) + " found, " + std::to_string(r.unknown_count()) + " unknown"};
}

Outcome criterion1() {
    std::multiset<std::size_t> degrees;
    bool ok = true;
    for (const auto &e : catalogue().perfects) {
        ok = ok && sigma(e.value) == e.value;
        degrees.insert(e.value.deg());
    }
    ok = ok && degrees == std::multiset<std::size_t>{5, 5, 11, 11, 11, 11, 15, 15, 16, 20, 20};
    return {ok, "11 sporadics perfect, degrees match"};
}

Outcome criterion2() {
    for (unsigned n = 1; n <= 12; ++n) {
        if (!is_perfect(trivial_perfect(n))) return {false, "T(" + std::to_string(n) + ") not perfect"};
    }
    return {true, "T(1..12) perfect, max degree " + std::to_string(trivial_perfect(12).deg())};
}

Outcome criterion3() {
    const Outcome full = scan_matches(search_perfect(20, SearchMode::Full));
    const Outcome pruned = scan_matches(search_perfect(24, SearchMode::PrunedEven));
    return {full.pass && pruned.pass, full.detail + "; " + pruned.detail + "; expected set of " +
                                          std::to_string(expected_scan_set().size())};
}

Outcome criterion4() {
    const CensusReport r = gcd_condition_census(21);
    const bool ok = r.cumulative_fraction > Rational::of(68, 100);
    return {ok, "cumulative " + r.cumulative_fraction.to_string() + " = " +
                    std::to_string(r.cumulative_fraction.to_double())};
}

Outcome criterion5() {
    bool ok = true;
    std::string detail;
    for (CanadayPart p : {CanadayPart::F, CanadayPart::C, CanadayPart::E, CanadayPart::B, CanadayPart::D}) {
        const LemmaCheckReport r = check_canaday(p);
        ok = ok && r.pass;
        detail += std::string(detail.empty() ? "" : ", ") + std::string(to_string(p)) + "=" + (r.pass ? "pass" : "FAIL");
        if (!r.pass) detail += " (" + std::to_string(r.witnesses.size()) + " witnesses, " +
                               std::to_string(r.expected.size()) + " expected)";
    }
    return {ok, detail};
}

Outcome criterion6() {
    std::mt19937_64 rng(gf2perfect::testing::kTestSeed);
    for (int i = 0; i < 10000; ++i) {
        const Poly a = gf2perfect::testing::random_poly(rng, 16);
        const std::uint64_t e = 2 * (1 + rng() % 32);
        const GeometricSplit s = geometric_split(a, e);
        if (s.lhs != s.rhs) return {false, "geometric split fails at " + to_hex(a)};
    }
    int pairs = 0;
    while (pairs < 10000) {
        const Poly a = gf2perfect::testing::random_nonconstant(rng, 24);
        const Poly b = gf2perfect::testing::random_nonconstant(rng, 24);
        if (!gcd(a, b).is_one()) continue;
        ++pairs;
        if (sigma(a * b) != sigma(a) * sigma(b)) return {false, "multiplicativity fails"};
    }
    for (std::uint64_t v = 1; v < (1U << 13); ++v) {
        if (sigma(Poly::from_word(v)) != sigma_naive(Poly::from_word(v))) return {false, "naive sigma mismatch"};
    }
    return {true, "10000 splits, 10000 coprime pairs, 8191 exhaustive"};
}

Outcome criterion7() {
    PrimeTable table;
    const TheoremReport relaxed = theorem_bruteforce(8, 9, PrimeMode::Relaxed, table);
    const TheoremReport strict = theorem_bruteforce(8, 9, PrimeMode::StrictOdd, table);
    bool agree = true;
    std::size_t checked = 0;
    for (const TheoremReport *rep : {&relaxed, &strict}) {
        for (std::uint64_t v = 2; v < 128; ++v) {
            const Poly b = Poly::from_word(v);
            if (!satisfies_gcd_condition(b)) continue;
            ++checked;
            std::vector<TheoremSolution> slice;
            for (const auto &s : rep->solutions) {
                if (s.b == b) slice.push_back(s);
            }
            std::vector<TheoremSolution> structured;
            for (auto &s : solve_structured(b, 3, rep->mode, table)) {
                bool nameable = true;
                for (const auto &p : s.primes) nameable = nameable && p.deg() <= 9;
                if (nameable) structured.push_back(std::move(s));
            }
            agree = agree && structured == slice;
        }
    }
    const bool ok = theorem_report_passes(relaxed) && theorem_report_passes(strict) && agree;
    return {ok, "relaxed " + std::to_string(relaxed.solutions.size()) + ", strict " +
                    std::to_string(strict.solutions.size()) + ", structured agreement on " + std::to_string(checked) +
                    " slices " + (agree ? "ok" : "FAILED")};
}

Outcome criterion8() {
    PrimeTable table;
    auto runs = [&](int workers) {
        const ScanOptions o{workers, false};
        std::string s = to_json(search_perfect(20, SearchMode::Full, o), {});
        s += to_json(search_perfect(24, SearchMode::PrunedEven, o), {});
        s += to_json(gcd_condition_census(21, o), {});
        s += to_json(theorem_bruteforce(8, 9, PrimeMode::Relaxed, table, o), {});
        s += to_json(theorem_bruteforce(8, 9, PrimeMode::StrictOdd, table, o), {});
        return s;
    };
    const std::string one = runs(1);
    const std::string eight = runs(8);
    return {one == eight, std::to_string(one.size()) + " bytes of JSON, workers 1 vs 8 " +
                              (one == eight ? "identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> criteria{
        {1, "sporadic catalogue", 1.0, criterion1},
        {2, "trivial family T(1..12)", 10.0, criterion2},
        {3, "reduced-scale exhaustive search", 1800.0, criterion3},
        {4, "gcd-condition census", 1200.0, criterion4},
        {5, "Canaday bounded checks", 300.0, criterion5},
        {6, "identity suite", 120.0, criterion6},
        {7, "r <= 3 classification", 900.0, criterion7},
        {8, "determinism across worker counts", 3600.0, criterion8},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_pass = true;
    for (const auto &c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = o.pass && in_time;
        all_pass = all_pass && pass;
        std::printf("criterion %d: %s  %s (%s; %.2fs of %.0fs%s)\n", c.id, pass ? "PASS" : "FAIL", c.title,
                    o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", TOO SLOW");
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
