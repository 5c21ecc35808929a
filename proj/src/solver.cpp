#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "gf2perfect/classify.hpp"
#include "gf2perfect/factorize.hpp"
#include "gf2perfect/search.hpp"
#include "gf2perfect/sigma.hpp"
#include "gf2perfect/theorem.hpp"

namespace gf2perfect {

namespace {

bool admissible(const Poly &q, const Poly &b, PrimeMode mode) {
    if (q.is_zero() || q.degree() < Degree(1)) return false;
    if (mode == PrimeMode::StrictOdd && parity(q) != Parity::Odd) return false;
    if (divides(q, b)) return false;
    return is_irreducible(q);
}

/// c / (c + rhs) when the division is exact and nonzero.
std::optional<Poly> forced_prime(const Poly &c, const Poly &rhs) {
    const Poly den = c + rhs;
    if (den.is_zero()) return std::nullopt;
    auto [q, r] = divrem(c, den);
    if (!r.is_zero() || q.is_zero()) return std::nullopt;
    return q;
}

}  // namespace

std::vector<TheoremSolution> solve_structured(const Poly &b, unsigned r_max, PrimeMode mode, PrimeTable &table) {
    if (b.is_zero()) throw HypothesisError(Rejection::BZero, "B must be nonzero");
    if (parity(b) != Parity::Even) throw HypothesisError(Rejection::BNotEven, "B must be even: " + format(b));
    if (!satisfies_gcd_condition(b)) {
        throw HypothesisError(Rejection::GcdConditionFails, "gcd(B^2, sigma(B^2)) != 1 for B = " + format(b));
    }
    if (r_max > 3) throw HypothesisError(Rejection::RTooLarge, "r must be at most 3");

    const Poly b2 = b.square();
    const Factorization fs = factor(sigma(b2));
    std::vector<TheoremSolution> out;
    if (std::any_of(fs.factors().begin(), fs.factors().end(), [](const PrimePower &pp) { return pp.exponent != 1; })) {
        return out;
    }
    if (fs.omega() > r_max) return out;
    std::vector<Poly> known;
    Poly c = Poly::one();
    for (const auto &pp : fs.factors()) {
        if (!admissible(pp.prime, b, mode)) return out;
        known.push_back(pp.prime);
        c = c * (pp.prime + Poly::one());
    }
    const std::set<Poly> known_set(known.begin(), known.end());
    const unsigned m_max = r_max - static_cast<unsigned>(known.size());

    std::set<std::vector<Poly>> candidates;
    if (c == b2) candidates.insert(known);
    if (m_max >= 1) {
        if (auto q = forced_prime(c, b2); q && !known_set.contains(*q) && admissible(*q, b, mode)) {
            auto ps = known;
            ps.push_back(*q);
            candidates.insert(ps);
        }
    }
    if (m_max >= 2 && !(c + b2).is_zero()) {
        // The smaller missing prime has degree at most deg C - deg(C + B^2).
        const std::size_t bound = c.deg() - (c + b2).deg();
        if (bound > PrimeTable::kMaxDegree) throw std::length_error("missing-prime degree bound exceeds the table");
        for (const Poly &q1 : table.primes_up_to(bound)) {
            if (known_set.contains(q1) || !admissible(q1, b, mode)) continue;
            const Poly c1 = c * (q1 + Poly::one());
            auto q2 = forced_prime(c1, b2 * q1);
            if (!q2 || *q2 == q1 || known_set.contains(*q2) || !admissible(*q2, b, mode)) continue;
            auto ps = known;
            ps.push_back(q1);
            ps.push_back(*q2);
            candidates.insert(ps);
        }
    }
    // C + B^2 = 0 leaves only {x, x+1}, which an even B always shares a factor with.

    for (auto ps : candidates) {
        std::sort(ps.begin(), ps.end());
        Poly a = b2;
        for (const auto &p : ps) a = a * p;
        if (!is_perfect(a)) throw std::logic_error("structured solver produced a non-perfect " + to_hex(a));
        std::string name = classify_perfect(a);
        out.push_back({b, std::move(ps), std::move(a), std::move(name)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gf2perfect
