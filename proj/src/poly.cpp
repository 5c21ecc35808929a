#include "gf2perfect/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "gf2perfect/word.hpp"

namespace gf2perfect {

namespace {

using Limb = Poly::Limb;
constexpr std::size_t kBits = Poly::kLimbBits;

// Upper bound on degrees produced by the parser, so a stray exponent cannot
// request gigabytes.
constexpr std::size_t kMaxParsedDegree = std::size_t{1} << 24;

bool test_bit(const std::vector<Limb> &a, std::size_t i) noexcept {
    return ((a[i / kBits] >> (i % kBits)) & 1U) != 0;
}

void trim(std::vector<Limb> &a) noexcept {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a ^= d * x^s. The caller guarantees a is long enough for the top bit of d.
void xor_shifted(std::vector<Limb> &a, std::span<const Limb> d, std::size_t s) noexcept {
    const std::size_t ws = s / kBits;
    const unsigned bs = static_cast<unsigned>(s % kBits);
    for (std::size_t i = 0; i < d.size(); ++i) {
        a[i + ws] ^= d[i] << bs;
        if (bs != 0 && i + ws + 1 < a.size()) a[i + ws + 1] ^= d[i] >> (kBits - bs);
    }
}

std::size_t top_bit(const std::vector<Limb> &a) noexcept {
    return (a.size() - 1) * kBits + static_cast<std::size_t>(std::bit_width(a.back())) - 1;
}

// Reduces a modulo d in place; if quotient is given, collects it there.
void reduce_in_place(std::vector<Limb> &a, const Poly &d, std::vector<Limb> *quotient) {
    trim(a);
    const std::size_t dd = d.deg();
    if (a.empty() || top_bit(a) < dd) return;
    if (quotient != nullptr) quotient->assign((top_bit(a) - dd) / kBits + 1, 0);
    for (std::size_t bit = top_bit(a) + 1; bit-- > dd;) {
        if (!test_bit(a, bit)) continue;
        const std::size_t s = bit - dd;
        xor_shifted(a, d.limbs(), s);
        if (quotient != nullptr) (*quotient)[s / kBits] |= Limb{1} << (s % kBits);
    }
    trim(a);
}

// Spreads the 32 bits of v into the even positions of a 64-bit word.
constexpr Limb spread32(Limb v) noexcept {
    v &= 0xffffffffULL;
    v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
    v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
    v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
    v = (v | (v << 2)) & 0x3333333333333333ULL;
    v = (v | (v << 1)) & 0x5555555555555555ULL;
    return v;
}

// Inverse of spread32: gathers the even-position bits into the low 32.
constexpr Limb gather_even(Limb v) noexcept {
    v &= 0x5555555555555555ULL;
    v = (v | (v >> 1)) & 0x3333333333333333ULL;
    v = (v | (v >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
    v = (v | (v >> 4)) & 0x00ff00ff00ff00ffULL;
    v = (v | (v >> 8)) & 0x0000ffff0000ffffULL;
    v = (v | (v >> 16)) & 0x00000000ffffffffULL;
    return v;
}

constexpr Limb kOddBits = 0xaaaaaaaaaaaaaaaaULL;

}  // namespace

Poly Poly::from_word(Limb bits) { return Poly(std::vector<Limb>{bits}); }

Poly Poly::from_limbs(std::vector<Limb> limbs) { return Poly(std::move(limbs)); }

Poly Poly::monomial(std::size_t exponent) {
    std::vector<Limb> v(exponent / kBits + 1, 0);
    v.back() = Limb{1} << (exponent % kBits);
    return Poly(std::move(v));
}

Poly Poly::all_ones(std::size_t d) {
    std::vector<Limb> v(d / kBits + 1, ~Limb{0});
    const std::size_t rem = (d + 1) % kBits;
    if (rem != 0) v.back() = (Limb{1} << rem) - 1;
    return Poly(std::move(v));
}

void Poly::trim() noexcept { gf2perfect::trim(limbs_); }

Degree Poly::degree() const noexcept {
    if (limbs_.empty()) return Degree::neg_inf();
    return Degree(top_bit(limbs_));
}

bool Poly::coeff(std::size_t i) const noexcept {
    if (i / kBits >= limbs_.size()) return false;
    return test_bit(limbs_, i);
}

std::size_t Poly::popcount() const noexcept {
    std::size_t n = 0;
    for (Limb l : limbs_) n += static_cast<std::size_t>(std::popcount(l));
    return n;
}

Poly operator+(const Poly &a, const Poly &b) {
    const auto &longer = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto &shorter = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    std::vector<Limb> r = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) r[i] ^= shorter[i];
    return Poly(std::move(r));
}

Poly operator*(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (&a == &b || a.limbs_ == b.limbs_) return a.square();
    std::vector<Limb> r(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        const Limb ai = a.limbs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            const word::Wide w = word::clmul_wide(ai, b.limbs_[j]);
            r[i + j] ^= w.lo;
            r[i + j + 1] ^= w.hi;
        }
    }
    return Poly(std::move(r));
}

std::pair<Poly, Poly> divrem(const Poly &a, const Poly &d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Limb> rem(a.limbs().begin(), a.limbs().end());
    std::vector<Limb> quo;
    reduce_in_place(rem, d, &quo);
    return {Poly::from_limbs(std::move(quo)), Poly::from_limbs(std::move(rem))};
}

Poly operator/(const Poly &a, const Poly &d) { return divrem(a, d).first; }

Poly operator%(const Poly &a, const Poly &d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Limb> rem(a.limbs().begin(), a.limbs().end());
    reduce_in_place(rem, d, nullptr);
    return Poly::from_limbs(std::move(rem));
}

std::strong_ordering operator<=>(const Poly &a, const Poly &b) noexcept {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Limb> r(limbs_.size() + k / kBits + 1, 0);
    xor_shifted(r, limbs_, k);
    return Poly(std::move(r));
}

Poly Poly::square() const {
    std::vector<Limb> r(limbs_.size() * 2, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        r[2 * i] = spread32(limbs_[i]);
        r[2 * i + 1] = spread32(limbs_[i] >> 32);
    }
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    std::vector<Limb> r(limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) r[i] = (limbs_[i] & kOddBits) >> 1;
    return Poly(std::move(r));
}

std::optional<Poly> Poly::exact_sqrt() const {
    std::vector<Limb> r((limbs_.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if ((limbs_[i] & kOddBits) != 0) return std::nullopt;
        r[i / 2] |= gather_even(limbs_[i]) << (32 * (i % 2));
    }
    return Poly(std::move(r));
}

Poly add(const Poly &a, const Poly &b) { return a + b; }
Poly mul(const Poly &a, const Poly &b) { return a * b; }

bool divides(const Poly &d, const Poly &a) { return (a % d).is_zero(); }

Poly gcd(const Poly &a, const Poly &b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Poly u = a;
    Poly v = b;
    while (!v.is_zero()) {
        Poly r = u % v;
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Poly pow(const Poly &a, std::uint64_t e) {
    Poly result = Poly::one();
    Poly base = a;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1;
        if (e != 0) base = base.square();
    }
    return result;
}

Poly mul_mod(const Poly &a, const Poly &b, const Poly &m) { return (a * b) % m; }

Poly pow_mod(const Poly &a, std::uint64_t e, const Poly &m) {
    if (m.is_zero() || m.deg() < 1) throw std::domain_error("pow_mod needs a modulus of degree >= 1");
    Poly result = Poly::one();
    Poly base = a % m;
    while (e != 0) {
        if (e & 1U) result = mul_mod(result, base, m);
        e >>= 1;
        if (e != 0) base = base.square() % m;
    }
    return result;
}

Poly frobenius_mod(const Poly &a, std::size_t k, const Poly &m) {
    if (m.is_zero() || m.deg() < 1) throw std::domain_error("frobenius_mod needs a modulus of degree >= 1");
    Poly r = a % m;
    for (std::size_t i = 0; i < k; ++i) r = r.square() % m;
    return r;
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly parse_all() {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        Poly p = expr();
        skip_ws();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    static bool starts_atom(char c) { return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c)); }

    Poly expr() {
        Poly sum = product();
        for (;;) {
            skip_ws();
            if (peek() != '+') return sum;
            ++pos_;
            sum = sum + product();
        }
    }

    Poly product() {
        Poly prod = power();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
            } else if (!starts_atom(peek())) {
                return prod;
            }
            Poly rhs = power();
            check_degree(prod.degree() + rhs.degree(), pos_);
            prod = prod * rhs;
        }
    }

    Poly power() {
        Poly base = atom();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        const std::size_t epos = pos_;
        const std::uint64_t e = uint_literal();
        if (!base.is_zero() && base.deg() > 0) {
            if (e > kMaxParsedDegree / base.deg()) throw ParseError("exponent too large", epos);
        }
        if (base == Poly::x()) return Poly::monomial(static_cast<std::size_t>(e));
        return pow(base, e);
    }

    Poly atom() {
        skip_ws();
        if (at_end()) throw ParseError("expected a term", pos_);
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return Poly::x();
        }
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            Poly inner = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("unbalanced '(' opened at " + std::to_string(open), pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t npos = pos_;
            const std::uint64_t v = uint_literal();
            if (v > 1) throw ParseError("coefficient must be 0 or 1", npos);
            return v == 1 ? Poly::one() : Poly::zero();
        }
        throw ParseError(std::string("malformed term '") + c + "'", pos_);
    }

    std::uint64_t uint_literal() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an unsigned integer", start);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc{} || v > kMaxParsedDegree) throw ParseError("integer out of range", start);
        return v;
    }

    static void check_degree(Degree d, std::size_t at) {
        if (!d.is_neg_inf() && d.value() > kMaxParsedDegree) throw ParseError("product degree too large", at);
    }
};

Poly parse_hex(std::string_view text, std::size_t offset) {
    std::string digits;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!std::isxdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("invalid hex digit '") + c + "'", offset + i);
        }
        digits.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (digits.empty()) throw ParseError("empty hex literal", offset);
    std::vector<Limb> limbs((digits.size() + 15) / 16, 0);
    for (std::size_t k = 0; k < digits.size(); ++k) {
        const char c = digits[digits.size() - 1 - k];
        const Limb v = static_cast<Limb>(c <= '9' ? c - '0' : c - 'a' + 10);
        limbs[k / 16] |= v << (4 * (k % 16));
    }
    return Poly::from_limbs(std::move(limbs));
}

}  // namespace

Poly parse(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    if (text.size() >= first + 2 && text[first] == '0' && (text[first + 1] == 'x' || text[first + 1] == 'X')) {
        // "0x" followed by a hex digit is a hex literal; otherwise it is 0*x.
        const std::size_t next = first + 2;
        if (next < text.size() && std::isxdigit(static_cast<unsigned char>(text[next]))) {
            return parse_hex(text.substr(next), next);
        }
    }
    return Parser(text).parse_all();
}

std::string format(const Poly &p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.deg() + 1; i-- > 0;) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += '1';
        } else if (i == 1) {
            out += 'x';
        } else {
            out += "x^";
            out += std::to_string(i);
        }
    }
    return out;
}

std::string to_hex(const Poly &p) {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (p.is_zero()) return "0x0";
    std::string out = "0x";
    const auto limbs = p.limbs();
    bool leading = true;
    for (std::size_t i = limbs.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            const unsigned v = static_cast<unsigned>((limbs[i] >> (4 * nib)) & 15U);
            if (leading && v == 0) continue;
            leading = false;
            out += kDigits[v];
        }
    }
    return out;
}

}  // namespace gf2perfect
