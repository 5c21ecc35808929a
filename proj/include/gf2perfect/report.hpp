#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf2perfect/lemmas.hpp"
#include "gf2perfect/search.hpp"
#include "gf2perfect/theorem.hpp"

namespace gf2perfect {

inline constexpr const char *kVersion = "1.0.0";

struct RenderOptions {
    std::uint64_t seed = 0;
    /// Elapsed time is left out unless asked for, so repeated runs match byte for byte.
    bool timing = false;
};

/// Catalogue names the brute force must find at the default bounds; nullopt at other bounds.
std::optional<std::vector<std::string>> expected_theorem_names(unsigned b_max_degree, unsigned prime_max_degree,
                                                               PrimeMode mode);
/// Every solution is named and, at the default bounds, the names equal the expected set.
bool theorem_report_passes(const TheoremReport &r);

// JSON field order is fixed: tool, version, seed, command, then the report fields.
std::string to_json(const SearchReport &r, const RenderOptions &o);
std::string to_json(const CensusReport &r, const RenderOptions &o);
std::string to_json(const LemmaCheckReport &r, const RenderOptions &o);
std::string to_json(const TheoremReport &r, const RenderOptions &o);

std::string to_text(const SearchReport &r, const RenderOptions &o);
std::string to_text(const CensusReport &r, const RenderOptions &o);
std::string to_text(const LemmaCheckReport &r, const RenderOptions &o);
std::string to_text(const TheoremReport &r, const RenderOptions &o);

}  // namespace gf2perfect
