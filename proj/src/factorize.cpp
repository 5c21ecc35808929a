#include "gf2perfect/factorize.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace gf2perfect {

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

int moebius(std::size_t n) {
    int mu = 1;
    for (std::size_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        n /= q;
        if (n % q == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

bool is_irreducible_word(word::Word p) {
    const int d = word::degree(p);
    if (d == 1) return true;
    if ((p & 1) == 0 || (std::popcount(p) & 1) == 0) return false;
    const word::Word x = 2;
    const auto qs = prime_divisors(static_cast<std::size_t>(d));
    // h = x^(2^k) mod p for k = 1..d.
    word::Word h = x;
    std::vector<word::Word> powers(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 1; k <= d; ++k) {
        h = word::mul_mod(h, h, p);
        powers[static_cast<std::size_t>(k)] = h;
    }
    if (powers[static_cast<std::size_t>(d)] != x) return false;
    for (std::size_t q : qs) {
        const word::Word t = powers[static_cast<std::size_t>(d) / q] ^ x;
        if (word::gcd(p, t) != 1) return false;
    }
    return true;
}

// Musser/Yun square-free factorization for F2: pairwise coprime square-free
// parts z_i with a = prod z_i^i.
void yun(const Poly &f, std::uint32_t scale, std::vector<PrimePower> &out) {
    if (f.deg() == 0) return;
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    std::uint32_t i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.push_back({std::move(z), i * scale});
        ++i;
        c = c / y;
        w = std::move(y);
    }
    if (!c.is_one()) {
        auto root = c.exact_sqrt();
        if (!root) throw std::logic_error("square-free split left a non-square cofactor");
        yun(*root, scale * 2, out);
    }
}

class EqualDegreeSplitter {
  public:
    explicit EqualDegreeSplitter(std::uint64_t seed) : rng_(seed) {}

    // g is square-free with every irreducible factor of degree d.
    void split(const Poly &g, std::size_t d, std::vector<Poly> &out) {
        if (g.deg() == d) {
            out.push_back(g);
            return;
        }
        for (std::uint64_t k = 1;; ++k) {
            const Poly u = separator(k, g.deg());
            const Poly t = gcd(trace(u, d, g), g);
            if (!t.is_one() && t.deg() < g.deg()) {
                split(t, d, out);
                split(g / t, d, out);
                return;
            }
        }
    }

  private:
    static constexpr std::uint64_t kDeterministicTries = 64;
    std::mt19937_64 rng_;

    // x*c for c = 1, 2, 3, ... (as bit patterns), then pseudorandom elements.
    Poly separator(std::uint64_t k, std::size_t mod_degree) {
        if (k <= kDeterministicTries) {
            const Poly u = Poly::from_word(k).shifted(1);
            if (u.deg() < mod_degree) return u;
        }
        std::vector<Poly::Limb> limbs((mod_degree + 63) / 64, 0);
        for (auto &l : limbs) l = rng_();
        const std::size_t top = mod_degree % 64;
        if (top != 0) limbs.back() &= (Poly::Limb{1} << top) - 1;
        return Poly::from_limbs(std::move(limbs));
    }

    // u + u^2 + ... + u^(2^(d-1)) mod g.
    static Poly trace(const Poly &u, std::size_t d, const Poly &g) {
        Poly term = u % g;
        Poly acc = term;
        for (std::size_t i = 1; i < d; ++i) {
            term = term.square() % g;
            acc = acc + term;
        }
        return acc;
    }
};

// Distinct-degree then equal-degree splitting of a square-free polynomial.
void factor_squarefree(const Poly &f, EqualDegreeSplitter &edf, std::vector<Poly> &out) {
    if (f.deg() == 0) return;
    const Poly x = Poly::x();
    Poly rest = f;
    Poly h = x % rest;
    for (std::size_t d = 1; !rest.is_one() && 2 * d <= rest.deg(); ++d) {
        h = h.square() % rest;
        const Poly t = gcd(h + x, rest);
        if (t.is_one()) continue;
        edf.split(t, d, out);
        rest = rest / t;
        if (!rest.is_one()) h = h % rest;
    }
    if (!rest.is_one()) out.push_back(rest);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) {
    std::sort(factors.begin(), factors.end(), [](const PrimePower &a, const PrimePower &b) { return a.prime < b.prime; });
    for (auto &pp : factors) {
        if (pp.exponent == 0) continue;
        if (!factors_.empty() && factors_.back().prime == pp.prime) {
            factors_.back().exponent += pp.exponent;
        } else {
            factors_.push_back(std::move(pp));
        }
    }
}

std::uint32_t Factorization::valuation(const Poly &prime) const {
    const auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                                     [](const PrimePower &pp, const Poly &p) { return pp.prime < p; });
    return (it != factors_.end() && it->prime == prime) ? it->exponent : 0;
}

Poly Factorization::product() const {
    Poly r = Poly::one();
    for (const auto &pp : factors_) r = r * pow(pp.prime, pp.exponent);
    return r;
}

std::string Factorization::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto &pp : factors_) {
        if (pp.prime == Poly::x()) {
            out += "x";
        } else {
            out += "(" + format(pp.prime) + ")";
        }
        if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
    }
    return out;
}

bool is_irreducible(const Poly &p) {
    if (p.is_zero() || p.deg() == 0) throw std::domain_error("irreducibility is undefined for constants");
    if (p.fits_word()) return is_irreducible_word(p.word());
    const std::size_t d = p.deg();
    if (!p.eval0() || !p.eval1()) return false;
    const Poly x = Poly::x();
    const auto qs = prime_divisors(d);
    std::vector<std::size_t> checkpoints;
    for (std::size_t q : qs) checkpoints.push_back(d / q);
    std::sort(checkpoints.begin(), checkpoints.end());
    Poly h = x;
    std::size_t k = 0;
    for (std::size_t cp : checkpoints) {
        h = frobenius_mod(h, cp - k, p);
        k = cp;
        if (!gcd(h + x, p).is_one()) return false;
    }
    h = frobenius_mod(h, d - k, p);
    return h == x;
}

std::vector<PrimePower> squarefree_decompose(const Poly &a) {
    if (a.is_zero()) throw std::domain_error("square-free decomposition of zero");
    std::vector<PrimePower> yun_parts;
    yun(a, 1, yun_parts);
    // Regroup by the binary digits of each multiplicity.
    std::map<std::uint32_t, Poly> by_power;
    for (const auto &pp : yun_parts) {
        for (std::uint32_t bit = 0; bit < 32; ++bit) {
            if (((pp.exponent >> bit) & 1U) == 0) continue;
            const std::uint32_t m = std::uint32_t{1} << bit;
            auto [it, inserted] = by_power.try_emplace(m, Poly::one());
            it->second = it->second * pp.prime;
        }
    }
    std::vector<PrimePower> out;
    for (auto &[m, part] : by_power) out.push_back({std::move(part), m});
    return out;
}

Factorization factor(const Poly &a, std::uint64_t seed) {
    if (a.is_zero()) throw std::domain_error("factorization of zero");
    std::vector<PrimePower> yun_parts;
    yun(a, 1, yun_parts);
    EqualDegreeSplitter edf(seed);
    std::vector<PrimePower> factors;
    for (const auto &part : yun_parts) {
        std::vector<Poly> primes;
        factor_squarefree(part.prime, edf, primes);
        for (auto &p : primes) factors.push_back({std::move(p), part.exponent});
    }
    return Factorization(std::move(factors));
}

std::size_t omega(const Poly &a) { return factor(a).omega(); }

std::uint32_t valuation(const Poly &p, const Poly &a) {
    if (a.is_zero()) throw std::domain_error("valuation of zero");
    if (p.is_zero() || p.deg() == 0) throw std::domain_error("valuation needs a nonconstant prime");
    std::uint32_t v = 0;
    Poly rest = a;
    for (;;) {
        auto [q, r] = divrem(rest, p);
        if (!r.is_zero()) return v;
        ++v;
        rest = std::move(q);
    }
}

std::uint64_t necklace_count(std::size_t d) {
    if (d == 0) return 0;
    std::int64_t sum = 0;
    for (std::size_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        sum += moebius(e) * (std::int64_t{1} << (d / e));
    }
    return static_cast<std::uint64_t>(sum) / d;
}

// ---------------------------------------------------------------------------
// PrimeTable

PrimeTable::PrimeTable(std::filesystem::path cache_file) : cache_file_(std::move(cache_file)) {
    std::ifstream in(*cache_file_, std::ios::binary);
    if (!in) return;
    std::stringstream buf;
    buf << in.rdbuf();
    if (auto parsed = deserialize(buf.str())) {
        by_degree_ = std::move(*parsed);
        loaded_from_cache_ = true;
    }
}

std::vector<Poly> PrimeTable::enumerate_degree(std::size_t d) const {
    std::vector<Poly> out;
    const word::Word lo = word::Word{1} << d;
    const word::Word hi = word::Word{1} << (d + 1);
    if (d <= crossover_) {
        // Mark every product of a lower-degree prime with a cofactor.
        std::vector<bool> composite(static_cast<std::size_t>(lo), false);
        for (std::size_t pd = 1; 2 * pd <= d; ++pd) {
            for (const Poly &p : by_degree_[pd - 1]) {
                const word::Word pw = p.word();
                const word::Word qlo = word::Word{1} << (d - pd);
                for (word::Word q = qlo; q < 2 * qlo; ++q) composite[static_cast<std::size_t>(word::clmul(pw, q) - lo)] = true;
            }
        }
        for (word::Word v = lo; v < hi; ++v) {
            if (!composite[static_cast<std::size_t>(v - lo)]) out.push_back(Poly::from_word(v));
        }
    } else if (d == 1) {
        out = {Poly::x(), Poly::x_plus_one()};
    } else {
        for (word::Word v = lo | 1; v < hi; v += 2) {
            if (is_irreducible_word(v)) out.push_back(Poly::from_word(v));
        }
    }
    return out;
}

void PrimeTable::extend_to(std::size_t d) {
    if (d <= max_degree()) return;
    if (d > kMaxDegree) throw std::out_of_range("prime table degree limit is " + std::to_string(kMaxDegree));
    while (max_degree() < d) by_degree_.push_back(enumerate_degree(max_degree() + 1));
    if (cache_file_) save();
}

const std::vector<Poly> &PrimeTable::primes_of_degree(std::size_t d) {
    if (d == 0) throw std::domain_error("primes have degree >= 1");
    extend_to(d);
    return by_degree_[d - 1];
}

std::vector<Poly> PrimeTable::primes_up_to(std::size_t d) {
    extend_to(d);
    std::vector<Poly> out;
    for (std::size_t k = 0; k < d; ++k) out.insert(out.end(), by_degree_[k].begin(), by_degree_[k].end());
    return out;
}

std::vector<word::Word> PrimeTable::words_up_to(std::size_t d) {
    if (d > 63) throw std::out_of_range("word primes need degree <= 63");
    std::vector<word::Word> out;
    for (const Poly &p : primes_up_to(d)) out.push_back(p.word());
    return out;
}

std::string PrimeTable::serialize() const {
    std::string out = "# " + std::string(kFormatTag) + " max_degree=" + std::to_string(max_degree()) + "\n";
    for (std::size_t k = 0; k < by_degree_.size(); ++k) {
        for (const Poly &p : by_degree_[k]) out += std::to_string(k + 1) + " " + to_hex(p) + "\n";
    }
    return out;
}

std::optional<std::vector<std::vector<Poly>>> PrimeTable::deserialize(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    const std::string prefix = "# " + std::string(kFormatTag) + " max_degree=";
    if (header.rfind(prefix, 0) != 0) return std::nullopt;
    std::size_t max_degree = 0;
    try {
        max_degree = std::stoul(header.substr(prefix.size()));
    } catch (const std::exception &) {
        return std::nullopt;
    }
    if (max_degree > kMaxDegree) return std::nullopt;
    std::vector<std::vector<Poly>> table(max_degree);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::size_t d = 0;
        std::string hex;
        if (!(row >> d >> hex) || d == 0 || d > max_degree) return std::nullopt;
        try {
            Poly p = parse(hex);
            if (p.is_zero() || p.deg() != d || !is_irreducible(p)) return std::nullopt;
            if (!table[d - 1].empty() && !(table[d - 1].back() < p)) return std::nullopt;
            table[d - 1].push_back(std::move(p));
        } catch (const ParseError &) {
            return std::nullopt;
        }
    }
    for (std::size_t d = 1; d <= max_degree; ++d) {
        if (table[d - 1].size() != necklace_count(d)) return std::nullopt;
    }
    return table;
}

void PrimeTable::save() const {
    const auto &path = *cache_file_;
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write prime cache " + tmp.string());
        out << serialize();
    }
    std::filesystem::rename(tmp, path);
}

std::vector<Poly> primes_of_degree(std::size_t d, PrimeTable &table) { return table.primes_of_degree(d); }

}  // namespace gf2perfect
