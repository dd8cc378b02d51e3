#pragma once

#include <stdexcept>
#include <string>

namespace rulehide {

/// Malformed input text (basket or rules file). Carries the 1-based file
/// line number the problem was found on.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A parameter outside its documented range (support fraction, confidence,
/// safety margin, oracle size guard).
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition (unknown item id, no-op
/// delete, mixed-size candidate level, stale frequent collection).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rulehide
