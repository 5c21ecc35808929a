#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2perfect {

/// Degree of a binary polynomial. The zero polynomial has degree NEG_INF,
/// which orders below every finite degree and absorbs under addition.
class Degree {
  public:
    static constexpr Degree neg_inf() noexcept { return Degree(); }
    constexpr explicit Degree(std::size_t d) noexcept : value_(d), finite_(true) {}

    constexpr bool is_neg_inf() const noexcept { return !finite_; }

    /// Finite degree; throws std::domain_error for NEG_INF.
    std::size_t value() const {
        if (!finite_) throw std::domain_error("degree of the zero polynomial is NEG_INF");
        return value_;
    }

    friend constexpr bool operator==(Degree, Degree) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }
    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return neg_inf();
        return Degree(a.value_ + b.value_);
    }

  private:
    constexpr Degree() noexcept = default;
    std::size_t value_ = 0;
    bool finite_ = false;
};

/// Thrown by parse() with the byte offset of the offending character.
class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string &what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// A polynomial over F2, bit i of the packed limbs being the coefficient of x^i.
///
/// Limbs are trimmed so the top limb is nonzero; the zero polynomial has no
/// limbs. Every nonzero value is monic (the only nonzero coefficient is 1), so
/// there is no normalization step anywhere in the library. Values are
/// immutable once built and safe to share between threads.
class Poly {
  public:
    using Limb = std::uint64_t;
    static constexpr std::size_t kLimbBits = 64;

    Poly() = default;

    static Poly zero() { return {}; }
    static Poly one() { return from_word(1); }
    static Poly x() { return from_word(2); }
    static Poly x_plus_one() { return from_word(3); }
    static Poly from_word(Limb bits);
    static Poly from_limbs(std::vector<Limb> limbs);
    static Poly monomial(std::size_t exponent);
    /// 1 + x + ... + x^d.
    static Poly all_ones(std::size_t d);

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_one() const noexcept { return limbs_.size() == 1 && limbs_[0] == 1; }
    Degree degree() const noexcept;
    /// Degree of a nonzero polynomial; throws std::domain_error on zero.
    std::size_t deg() const { return degree().value(); }
    bool coeff(std::size_t i) const noexcept;
    std::size_t popcount() const noexcept;
    std::span<const Limb> limbs() const noexcept { return limbs_; }
    bool fits_word() const noexcept { return limbs_.size() <= 1; }
    /// Low limb; only meaningful when fits_word().
    Limb word() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }

    /// Value at 0 and at 1.
    bool eval0() const noexcept { return coeff(0); }
    bool eval1() const noexcept { return (popcount() & 1U) != 0; }

    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator/(const Poly &a, const Poly &d);
    friend Poly operator%(const Poly &a, const Poly &d);
    friend bool operator==(const Poly &, const Poly &) = default;
    /// Orders by (degree, hex value).
    friend std::strong_ordering operator<=>(const Poly &a, const Poly &b) noexcept;

    Poly shifted(std::size_t k) const;  // times x^k
    Poly square() const;
    /// Formal derivative; in characteristic 2 only odd-index terms survive.
    Poly derivative() const;
    /// c with c^2 == *this, when every set bit has even index.
    std::optional<Poly> exact_sqrt() const;

  private:
    explicit Poly(std::vector<Limb> limbs) : limbs_(std::move(limbs)) { trim(); }
    void trim() noexcept;

    std::vector<Limb> limbs_;
};

Poly add(const Poly &a, const Poly &b);
Poly mul(const Poly &a, const Poly &b);
/// (quotient, remainder) with a = q*d + r and deg r < deg d.
/// Throws std::domain_error when d is zero.
std::pair<Poly, Poly> divrem(const Poly &a, const Poly &d);
/// True iff d divides a. d must be nonzero.
bool divides(const Poly &d, const Poly &a);
/// Throws std::domain_error for gcd(0, 0).
Poly gcd(const Poly &a, const Poly &b);
Poly pow(const Poly &a, std::uint64_t e);
/// a^e mod m by square-and-multiply. m must have degree >= 1.
Poly pow_mod(const Poly &a, std::uint64_t e, const Poly &m);
/// a^(2^k) mod m by k modular squarings.
Poly frobenius_mod(const Poly &a, std::size_t k, const Poly &m);
Poly mul_mod(const Poly &a, const Poly &b, const Poly &m);

/// Parses the polynomial grammar: sums of 'x', 'x^n', '0', '1', with
/// juxtaposition or '*' as product and '^' on parenthesized groups, or a
/// '0x'-prefixed hex literal. Whitespace is ignored and duplicate terms cancel.
Poly parse(std::string_view text);
/// Canonical text: descending exponents, "1" for the constant term, "0" for zero.
std::string format(const Poly &p);
/// Lowercase hex with 0x prefix; zero is "0x0".
std::string to_hex(const Poly &p);

}  // namespace gf2perfect
