#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kronlab {

// Violated precondition on a public operation. The CLI maps these to exit code 2.
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A search or enumeration would exceed its configured size budget (CLI exit code 3).
struct budget_error : std::runtime_error {
    budget_error(const std::string& what, std::string count)
        : std::runtime_error(what), candidate_count(std::move(count)) {}

    std::string candidate_count;  // decimal count of candidates that broke the budget
};

}  // namespace kronlab
