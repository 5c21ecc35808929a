#pragma once

// Serial implementations on the general Poly path. They share no code with the
// word kernels and serve as ground truth in tests and as the benchmark baseline.

#include "gf2perfect/search.hpp"
#include "gf2perfect/theorem.hpp"

namespace gf2perfect::reference {

SearchReport search_perfect(unsigned max_degree, SearchMode mode);
CensusReport gcd_condition_census(unsigned max_degree);
TheoremReport theorem_bruteforce(unsigned b_max_degree, unsigned prime_max_degree, PrimeMode mode,
                                 PrimeTable &table);

}  // namespace gf2perfect::reference
