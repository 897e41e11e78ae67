#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chipkit {

/// Malformed graph6/digraph6/JSON input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, std::size_t offset) :
        std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        _offset(offset)
    {
    }

    auto offset() const -> std::size_t { return _offset; }

private:
    std::size_t _offset;
};

/// Well-formed input that breaks a structural invariant (loop, duplicate edge, bad index).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generator or operation called with infeasible parameters.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact solver was asked to work beyond its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string & what, long long requested, long long cap) :
        std::runtime_error(what + ": size " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        _requested(requested),
        _cap(cap)
    {
    }

    auto requested() const -> long long { return _requested; }
    auto cap() const -> long long { return _cap; }

private:
    long long _requested, _cap;
};

/// A bounded search ran out of its node budget before reaching a definite answer.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied inconsistent auxiliary input (e.g. a missing sub-colouring).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}
