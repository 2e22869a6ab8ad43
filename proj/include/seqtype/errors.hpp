#pragma once

#include <stdexcept>
#include <string>

namespace seqtype {

// Degenerate input: a determinant that must not vanish is zero, h-values
// collide, a tuple fails the general-position polynomials.
class general_position_error : public std::runtime_error {
public:
    explicit general_position_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Structurally bad input: dimension mismatches, non-square matrices,
// out-of-range parameters.
class invalid_argument_error : public std::invalid_argument {
public:
    explicit invalid_argument_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// An exact construction refused to run because the predicted entry sizes
// exceed the configured bit budget.
class guardrail_error : public std::runtime_error {
public:
    guardrail_error(const std::string& what, double predicted_bits)
        : std::runtime_error(what), predicted_bits(predicted_bits) {}
    double predicted_bits;
};

// A built object failed its own exact re-verification.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what)
        : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace seqtype
