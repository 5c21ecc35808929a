#include "gf2perfect/classify.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "gf2perfect/factorize.hpp"
#include "gf2perfect/sigma.hpp"

namespace gf2perfect {

std::string_view to_string(Parity p) noexcept { return p == Parity::Odd ? "odd" : "even"; }

Parity parity(const Poly &a) {
    if (a.is_zero()) throw std::domain_error("parity of zero");
    return (a.eval0() && a.eval1()) ? Parity::Odd : Parity::Even;
}

bool is_mersenne(const Poly &a) {
    if (a.is_zero()) throw std::domain_error("is_mersenne of zero");
    Poly rest = a + Poly::one();
    if (rest.is_zero()) return false;
    for (const Poly &lin : {Poly::x(), Poly::x_plus_one()}) {
        for (;;) {
            auto [q, r] = divrem(rest, lin);
            if (!r.is_zero()) break;
            rest = std::move(q);
        }
    }
    return rest.is_one();
}

bool is_complete(const Poly &a) {
    if (a.is_zero()) throw std::domain_error("is_complete of zero");
    return a.popcount() == a.deg() + 1;
}

bool is_complete_in(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("is_complete_in of zero");
    if (b.deg() < 1) throw std::domain_error("is_complete_in needs deg b >= 1");
    if (a.deg() % b.deg() != 0) return false;
    return a == geometric_sum(b, a.deg() / b.deg());
}

bool is_perfect(const Poly &a) {
    if (a.is_zero() || a.is_one()) return true;
    return sigma(a) == a;
}

Poly trivial_perfect(unsigned n, unsigned max_n) {
    if (n > max_n) throw std::out_of_range("T(n) above the configured budget n <= " + std::to_string(max_n));
    return pow(Poly::from_word(0b110), (std::uint64_t{1} << n) - 1);
}

std::optional<unsigned> trivial_index(const Poly &a) {
    if (a.is_zero()) return std::nullopt;
    // deg T(n) = 2^(n+1) - 2.
    const std::size_t d = a.deg() + 2;
    if ((d & (d - 1)) != 0) return std::nullopt;
    const auto n = static_cast<unsigned>(std::bit_width(d) - 2);
    if (n > kTrivialPerfectBudget) return std::nullopt;
    if (trivial_perfect(n) == a) return n;
    return std::nullopt;
}

SquareDecomposition square_decompose(const Poly &a) {
    if (a.is_zero()) throw std::domain_error("square_decompose of zero");
    SquareDecomposition out{Poly::one(), Poly::one()};
    for (const auto &part : squarefree_decompose(a)) {
        if (part.exponent == 1) {
            out.s = part.prime;
        } else {
            out.b = out.b * pow(part.prime, part.exponent / 2);
        }
    }
    out.coprime = gcd(out.b, out.s).is_one();
    out.b_even = parity(out.b) == Parity::Even;
    return out;
}

const Poly &SporadicCatalogue::get(std::string_view name) const {
    for (const auto &e : perfects) {
        if (e.name == name) return e.value;
    }
    for (const auto &p : primes) {
        if (p.name == name) return p.value;
    }
    throw std::out_of_range("no catalogue entry named " + std::string(name));
}

std::optional<std::string_view> SporadicCatalogue::name_of(const Poly &a) const {
    for (const auto &e : perfects) {
        if (e.value == a) return e.name;
    }
    return std::nullopt;
}

namespace {

struct Row {
    std::string_view name;
    std::string_view factored;
    std::uint64_t hex;
};

constexpr std::array<Row, 11> kPerfects{{
    {"M5a", "x(x+1)^2(x^2+x+1)", 0x36},
    {"M5b", "x^2(x+1)(x^2+x+1)", 0x24},
    {"M11a", "x(x+1)^2(x^2+x+1)^2(x^4+x+1)", 0x9a6},
    {"M11b", "x^2(x+1)(x^2+x+1)^2(x^4+x+1)", 0xec4},
    {"M11c", "x^3(x+1)^4(x^4+x^3+1)", 0xc48},
    {"M11d", "x^4(x+1)^3(x^4+x^3+x^2+x+1)", 0xa50},
    {"M15a", "x^3(x+1)^6(x^3+x+1)(x^3+x^2+1)", 0xcd98},
    {"M15b", "x^6(x+1)^3(x^3+x+1)(x^3+x^2+1)", 0xa140},
    {"M16", "x^4(x+1)^4(x^4+x^3+1)(x^4+x^3+x^2+x+1)", 0x10670},
    {"M20a", "x^4(x+1)^6(x^3+x+1)(x^3+x^2+1)(x^4+x^3+x^2+x+1)", 0x11ab10},
    {"M20b", "x^6(x+1)^4(x^3+x+1)(x^3+x^2+1)(x^4+x^3+1)", 0x10c1c0},
}};

constexpr std::array<Row, 6> kPrimes{{
    {"Q2", "x^2+x+1", 0x7},
    {"Q3a", "x^3+x+1", 0xb},
    {"Q3b", "x^3+x^2+1", 0xd},
    {"Q4a", "x^4+x^3+1", 0x19},
    {"Q4b", "x^4+x^3+x^2+x+1", 0x1f},
    {"Q4c", "x^4+x+1", 0x13},
}};

Poly checked(const Row &row) {
    Poly p = parse(row.factored);
    if (p.word() != row.hex || !p.fits_word()) {
        std::fprintf(stderr, "catalogue entry %.*s does not match its hex literal\n", static_cast<int>(row.name.size()),
                     row.name.data());
        std::abort();
    }
    return p;
}

SporadicCatalogue build_catalogue() {
    SporadicCatalogue c;
    for (std::size_t i = 0; i < kPerfects.size(); ++i) {
        Poly p = checked(kPerfects[i]);
        const std::size_t d = p.deg();
        c.perfects[i] = CatalogueEntry{kPerfects[i].name, kPerfects[i].factored, std::move(p), d};
    }
    for (std::size_t i = 0; i < kPrimes.size(); ++i) c.primes[i] = NamedPrime{kPrimes[i].name, checked(kPrimes[i])};
    return c;
}

}  // namespace

const SporadicCatalogue &catalogue() {
    static const SporadicCatalogue c = build_catalogue();
    return c;
}

}  // namespace gf2perfect
