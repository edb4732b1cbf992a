#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chordext {

/// Bad argument: out-of-range vertex, malformed sequence, unknown name.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The arguments are well formed but violate an operation's precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A result that should hold by construction did not hold.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// graph6 decoding failure; offset() is the byte position of the fault.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace chordext
