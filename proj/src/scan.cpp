#include "gf2perfect/scan.hpp"

namespace gf2perfect {

void check_budget(const char *what, unsigned value, unsigned budget, unsigned hard_limit, bool allow_over_budget) {
    if (value > hard_limit) {
        throw BudgetError(std::string(what) + " " + std::to_string(value) + " exceeds the hard limit " +
                          std::to_string(hard_limit));
    }
    if (value > budget && !allow_over_budget) {
        throw BudgetError(std::string(what) + " " + std::to_string(value) + " exceeds the default budget " +
                          std::to_string(budget) + " (pass an explicit override to run it)");
    }
}

}  // namespace gf2perfect
