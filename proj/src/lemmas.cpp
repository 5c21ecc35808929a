#include "gf2perfect/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <stdexcept>

#include "gf2perfect/classify.hpp"
#include "gf2perfect/factorize.hpp"
#include "gf2perfect/scan.hpp"
#include "gf2perfect/sigma.hpp"

namespace gf2perfect {

namespace {

void require(const char *what, std::uint64_t value, std::uint64_t limit) {
    if (value > limit) {
        throw BudgetError(std::string(what) + " " + std::to_string(value) + " exceeds the limit " +
                          std::to_string(limit));
    }
}

/// a / (x+1) for a with a(1) = 0: bit i of the quotient is the parity of bits above i.
Poly div_x_plus_one(const Poly &a) {
    std::vector<Poly::Limb> limbs(a.limbs().begin(), a.limbs().end());
    Poly::Limb carry = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
        Poly::Limb s = limbs[i];
        for (unsigned k = 1; k < 64; k *= 2) s ^= s >> k;
        s ^= carry;
        carry = (s & 1) ? ~Poly::Limb{0} : 0;
        limbs[i] = s;
    }
    // limbs now hold suffix parities; shift right by one bit.
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        const Poly::Limb next = i + 1 < limbs.size() ? limbs[i + 1] : 0;
        limbs[i] = (limbs[i] >> 1) | (next << 63);
    }
    return Poly::from_limbs(std::move(limbs));
}

/// x (x+1)^beta + 1.
Poly shifted_mersenne(std::uint64_t beta) { return pow(Poly::x_plus_one(), beta).shifted(1) + Poly::one(); }

// Complete polynomial of degree h-1 = (x+1)^(2^n - 1) c^(2^n) with c complete.
LemmaCheckReport part_b(const LemmaBounds &bounds) {
    require("h bound", bounds.b_h_max, 1U << 16);
    LemmaCheckReport r;
    r.bounds = {{"h_max", bounds.b_h_max}};
    for (std::uint64_t h = 1; h <= bounds.b_h_max; ++h) {
        ++r.cases_checked;
        Poly rest = Poly::all_ones(h - 1);
        std::uint64_t v = 0;
        while (!rest.eval1()) {
            rest = div_x_plus_one(rest);
            ++v;
        }
        bool ok = std::has_single_bit(v + 1);
        for (std::uint64_t k = v + 1; ok && k > 1; k /= 2) {
            auto root = rest.exact_sqrt();
            if (!root) {
                ok = false;
            } else {
                rest = *root;
            }
        }
        if (!ok || !is_complete(rest)) r.witnesses.push_back("h=" + std::to_string(h));
    }
    return r;
}

LemmaCheckReport part_c(const LemmaBounds &bounds) {
    require("beta bound", bounds.c_beta_max, 4096);
    LemmaCheckReport r;
    r.bounds = {{"beta_max", bounds.c_beta_max}};
    for (std::uint64_t beta = 1; beta <= bounds.c_beta_max; ++beta) {
        ++r.cases_checked;
        const Poly m = shifted_mersenne(beta);
        if (is_complete(m) && is_irreducible(m)) r.witnesses.push_back(std::to_string(beta));
    }
    for (std::uint64_t beta : {1, 3}) {
        if (beta <= bounds.c_beta_max) r.expected.push_back(std::to_string(beta));
    }
    return r;
}

LemmaCheckReport part_d(const LemmaBounds &bounds) {
    require("degree bound", bounds.d_degree_max, 64);
    LemmaCheckReport r;
    r.bounds = {{"degree_max", bounds.d_degree_max}};
    for (std::uint64_t d = 2; d <= bounds.d_degree_max; d += 2) {
        ++r.cases_checked;
        const Poly c = Poly::all_ones(d);
        const Factorization f = factor(c);
        const bool all_mersenne = std::all_of(f.factors().begin(), f.factors().end(),
                                              [](const PrimePower &pp) { return is_mersenne(pp.prime); });
        if (all_mersenne) r.witnesses.push_back(f.to_string());
    }
    const Poly q2 = catalogue().get("Q2");
    const Poly q4b = catalogue().get("Q4b");
    const Poly q3 = catalogue().get("Q3a") * catalogue().get("Q3b");
    for (const Poly *p : {&q2, &q4b, &q3}) {
        if (p->deg() <= bounds.d_degree_max) r.expected.push_back(factor(*p).to_string());
    }
    return r;
}

LemmaCheckReport part_e(const LemmaBounds &bounds) {
    require("prime degree bound", bounds.e_prime_degree_max, 16);
    require("exponent bound", bounds.e_exponent_max, 64);
    LemmaCheckReport r;
    r.bounds = {{"prime_degree_max", bounds.e_prime_degree_max}, {"exponent_max", bounds.e_exponent_max}};
    PrimeTable table;
    std::map<Poly, std::string> seen;
    for (const Poly &p : table.primes_up_to(bounds.e_prime_degree_max)) {
        for (std::uint64_t e = 2; e <= bounds.e_exponent_max; e += 2) {
            ++r.cases_checked;
            const std::string label = "(" + format(p) + ")^" + std::to_string(e);
            auto [it, fresh] = seen.emplace(sigma_prime_power(p, e), label);
            if (!fresh) r.witnesses.push_back("sigma(" + it->second + ") = sigma(" + label + ")");
        }
    }
    return r;
}

LemmaCheckReport part_f(const LemmaBounds &bounds) {
    require("m bound", bounds.f_m_max, 16);
    LemmaCheckReport r;
    r.bounds = {{"m_max", bounds.f_m_max}};
    for (std::uint64_t m = 1; m <= bounds.f_m_max; ++m) {
        ++r.cases_checked;
        if (is_irreducible(shifted_mersenne((std::uint64_t{1} << m) - 1))) r.witnesses.push_back(std::to_string(m));
    }
    for (std::uint64_t m : {1, 2}) {
        if (m <= bounds.f_m_max) r.expected.push_back(std::to_string(m));
    }
    return r;
}

}  // namespace

std::string_view to_string(CanadayPart p) noexcept {
    switch (p) {
        case CanadayPart::B: return "b";
        case CanadayPart::C: return "c";
        case CanadayPart::D: return "d";
        case CanadayPart::E: return "e";
        case CanadayPart::F: return "f";
    }
    return "?";
}

CanadayPart parse_canaday_part(std::string_view s) {
    if (s.size() == 1) {
        switch (std::tolower(static_cast<unsigned char>(s[0]))) {
            case 'b': return CanadayPart::B;
            case 'c': return CanadayPart::C;
            case 'd': return CanadayPart::D;
            case 'e': return CanadayPart::E;
            case 'f': return CanadayPart::F;
            default: break;
        }
    }
    throw std::invalid_argument("unknown lemma part '" + std::string(s) + "' (b | c | d | e | f)");
}

LemmaCheckReport check_canaday(CanadayPart part, const LemmaBounds &bounds) {
    LemmaCheckReport r;
    switch (part) {
        case CanadayPart::B: r = part_b(bounds); break;
        case CanadayPart::C: r = part_c(bounds); break;
        case CanadayPart::D: r = part_d(bounds); break;
        case CanadayPart::E: r = part_e(bounds); break;
        case CanadayPart::F: r = part_f(bounds); break;
    }
    r.part = part;
    r.pass = r.witnesses == r.expected;
    return r;
}

}  // namespace gf2perfect
