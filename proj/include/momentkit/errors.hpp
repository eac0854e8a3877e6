#pragma once

#include <stdexcept>
#include <string>

namespace momentkit {

// Division by zero, zero-denominator construction, parameters outside a
// function's mathematical domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Series reciprocal / division requires a unit constant coefficient.
class NonUnitConstantTerm : public std::domain_error {
public:
    explicit NonUnitConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// A sequence has fewer terms than an operation needs.
class InsufficientTerms : public std::invalid_argument {
public:
    InsufficientTerms(const std::string& what, std::size_t have, std::size_t need)
        : std::invalid_argument(what + " (have " + std::to_string(have) +
                                ", need " + std::to_string(need) + ")"),
          have(have), need(need) {}
    std::size_t have, need;
};

// A continued fraction has fewer coefficient levels than an expansion order needs.
class InsufficientCoefficients : public std::invalid_argument {
public:
    InsufficientCoefficients(const std::string& what, std::size_t have, std::size_t need)
        : std::invalid_argument(what + " (have " + std::to_string(have) +
                                " levels, need " + std::to_string(need) + ")"),
          have(have), need(need) {}
    std::size_t have, need;
};

// Continued-fraction peeling hit a vanishing coefficient: no expansion of the
// requested kind exists at this depth.
class Breakdown : public std::runtime_error {
public:
    explicit Breakdown(std::size_t level)
        : std::runtime_error("continued fraction breakdown at level " + std::to_string(level)),
          level(level) {}
    std::size_t level;
};

// A leading Hankel determinant vanished where an algorithm requires it nonzero.
class SingularHankel : public std::runtime_error {
public:
    explicit SingularHankel(std::size_t n)
        : std::runtime_error("singular leading Hankel determinant at order " + std::to_string(n)),
          n(n) {}
    std::size_t n;
};

// An internal exact cross-check failed; indicates inconsistent caller input
// (or a bug), never a rounding effect.
class VerificationFailure : public std::logic_error {
public:
    explicit VerificationFailure(const std::string& what) : std::logic_error(what) {}
};

// Numerical integration failed to converge to the requested tolerance.
class QuadratureFailure : public std::runtime_error {
public:
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration size exceeds the configured safety bound.
class BoundExceeded : public std::invalid_argument {
public:
    BoundExceeded(const std::string& what, std::size_t n, std::size_t bound)
        : std::invalid_argument(what + " (n = " + std::to_string(n) +
                                ", bound = " + std::to_string(bound) + ")"),
          n(n), bound(bound) {}
    std::size_t n, bound;
};

// A growth diagnostic met a non-positive term where positivity is required.
class NonPositiveTerm : public std::domain_error {
public:
    explicit NonPositiveTerm(std::size_t index)
        : std::domain_error("non-positive term at index " + std::to_string(index)),
          index(index) {}
    std::size_t index;
};

} // namespace momentkit
