#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casebcl {

// Caller violated an operation's precondition (wrong polarity, state not in
// the model, malformed term, ...).
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An exhaustive procedure was asked to run beyond its documented bound.
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, std::size_t bound)
        : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}

    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

// Lexical or syntactic error in formula text. position is a 0-based byte
// offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("at " + std::to_string(position) + ": " + message),
          message_(message), position_(position) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

// Input documents (case bases, models, signatures) that do not conform to
// their JSON schema or name unknown factors.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace casebcl
