#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monconv {

struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct index_range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct divergent_series_error : std::domain_error {
    using std::domain_error::domain_error;
};

class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, double count, double budget)
        : std::runtime_error(what + ": " + std::to_string(count) + " exceeds budget " +
                             std::to_string(budget)),
          count_(count), budget_(budget) {}

    double count() const noexcept { return count_; }
    double budget() const noexcept { return budget_; }

private:
    double count_;
    double budget_;
};

// Default enumeration budget, overridable through MONCONV_BUDGET.
std::uint64_t default_budget();

}  // namespace monconv
