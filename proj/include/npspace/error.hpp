#pragma once

#include <stdexcept>
#include <string>

namespace npspace {

/// Malformed input: unknown vertex ids, schema violations, empty sequences.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A precondition of an operation does not hold for otherwise well-formed input.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

} // namespace npspace
