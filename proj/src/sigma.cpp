#include "gf2perfect/sigma.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace gf2perfect {

Poly geometric_sum(const Poly &a, std::uint64_t e) {
    // S_e(a) = 1 + a S_{e-1}(a) for even e > 0, and
    // S_e(a) = (1 + a) S_{(e-1)/2}(a^2) for odd e.
    if (e == 0) return Poly::one();
    if (e % 2 == 0) return Poly::one() + a * geometric_sum(a, e - 1);
    return (Poly::one() + a) * geometric_sum(a.square(), (e - 1) / 2);
}

Poly sigma_prime_power(const Poly &p, std::uint64_t e) { return geometric_sum(p, e); }

Poly sigma(const Factorization &f) {
    Poly r = Poly::one();
    for (const auto &pp : f.factors()) r = r * sigma_prime_power(pp.prime, pp.exponent);
    return r;
}

Poly sigma(const Poly &a) {
    if (a.is_zero()) throw std::domain_error("sigma(0) is undefined");
    return sigma(factor(a));
}

SigmaResult sigma_with_factors(const Poly &a, std::uint64_t seed) {
    if (a.is_zero()) throw std::domain_error("sigma(0) is undefined");
    Factorization f = factor(a, seed);
    Poly v = sigma(f);
    return {std::move(v), std::move(f)};
}

Poly sigma_naive(const Poly &a, std::size_t degree_bound) {
    if (a.is_zero()) throw std::domain_error("sigma(0) is undefined");
    if (a.deg() > degree_bound) {
        throw std::length_error("sigma_naive is limited to degree " + std::to_string(degree_bound));
    }
    const Factorization f = factor(a);
    const auto &fs = f.factors();
    // Odometer over exponent tuples (e_1..e_k), 0 <= e_i <= exponent_i.
    std::vector<std::uint32_t> exps(fs.size(), 0);
    Poly total;
    for (;;) {
        Poly d = Poly::one();
        for (std::size_t i = 0; i < fs.size(); ++i) d = d * pow(fs[i].prime, exps[i]);
        total = total + d;
        std::size_t i = 0;
        while (i < fs.size() && exps[i] == fs[i].exponent) exps[i++] = 0;
        if (i == fs.size()) break;
        ++exps[i];
    }
    return total;
}

GeometricSplit geometric_split(const Poly &a, std::uint64_t e) {
    if (e == 0 || e % 2 != 0) throw std::invalid_argument("geometric_split needs an even positive exponent");
    const auto n = static_cast<unsigned>(std::countr_zero(e));
    const std::uint64_t k = e >> n;
    const std::uint64_t two_n = std::uint64_t{1} << n;
    GeometricSplit out;
    // lhs term by term, independent of the recursive geometric_sum.
    Poly power = Poly::one();
    Poly acc = Poly::one();
    for (std::uint64_t i = 1; i <= e; ++i) {
        power = power * a;
        acc = acc + power;
    }
    out.lhs = acc + Poly::one();
    out.rhs = a * pow(a + Poly::one(), two_n - 1) * pow(geometric_sum(a, k - 1), two_n);
    return out;
}

}  // namespace gf2perfect
