#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charsum {

/// A configuration value violates a precondition. CLI maps this to exit 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A requested enumeration would exceed the iteration budget. Exit 1 as well.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Multiply/power with saturation at 2^63-1, enough to compare against any budget.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_pow(std::uint64_t base, unsigned exp);

/// Enumeration budgets are iteration counts, not time, so runs are
/// reproducible across machines.
struct Budget {
    std::uint64_t max_iterations = 100'000'000;  // inner-loop steps
    std::uint64_t table_size = std::uint64_t{1} << 16;  // largest admissible field

    void require_iterations(std::uint64_t predicted, const std::string& what) const {
        if (predicted > max_iterations)
            throw BudgetError(what + ": predicted " + std::to_string(predicted) +
                              " iterations exceed budget " + std::to_string(max_iterations));
    }
    void require_table(std::uint64_t q, const std::string& what) const {
        if (q > table_size)
            throw BudgetError(what + ": field size " + std::to_string(q) +
                              " exceeds table budget " + std::to_string(table_size));
    }
};

}  // namespace charsum
