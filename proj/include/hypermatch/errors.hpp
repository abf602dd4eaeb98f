#pragma once

#include <stdexcept>
#include <string>

namespace hm {

// Raised when an input is too sparse/small for the partition-listing procedure to keep its
// completeness guarantee (no qualifying seed set, or a live branch stalls with unassigned
// vertices and no reliable vertex). The asymptotic preconditions rule this out; at small n
// we surface it instead of guessing.
class DegenerateInput : public std::runtime_error {
public:
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the matching-extraction loop cannot make progress that the asymptotic regime
// promises (no qualifying removal edge, deficiency conditions broken, brute budget blown).
class RegimeViolation : public std::runtime_error {
public:
    explicit RegimeViolation(const std::string& what) : std::runtime_error(what) {}
};

// Instance / certificate file problems. line == 0 means "not line-addressable".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// Random instance generation failed to hit its target within the attempt budget.
class GenerationFailure : public std::runtime_error {
public:
    explicit GenerationFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hm
