#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2perfect {

/// Bounded checks of Canaday's lemmas on complete and Mersenne polynomials.
enum class CanadayPart { B, C, D, E, F };

std::string_view to_string(CanadayPart p) noexcept;
/// Accepts "b".."f" (either case). Throws std::invalid_argument otherwise.
CanadayPart parse_canaday_part(std::string_view s);

struct LemmaBounds {
    std::uint64_t b_h_max = 4096;        // (b): complete polynomials of degree h-1, h <= bound
    std::uint64_t c_beta_max = 64;       // (c): x(x+1)^beta + 1, beta <= bound
    std::uint64_t d_degree_max = 24;     // (d): complete polynomials of even degree <= bound
    std::uint64_t e_prime_degree_max = 8;
    std::uint64_t e_exponent_max = 16;   // (e): exponents 2m <= bound
    std::uint64_t f_m_max = 12;          // (f): x(x+1)^(2^m - 1) + 1, m <= bound
};

struct LemmaCheckReport {
    CanadayPart part = CanadayPart::F;
    /// Named bounds actually used, in a fixed order.
    std::vector<std::pair<std::string, std::uint64_t>> bounds;
    std::uint64_t cases_checked = 0;
    /// Values satisfying the lemma's property; for (b) and (e) these are counterexamples.
    std::vector<std::string> witnesses;
    std::vector<std::string> expected;
    bool pass = false;
};

LemmaCheckReport check_canaday(CanadayPart part, const LemmaBounds &bounds = {});

}  // namespace gf2perfect
