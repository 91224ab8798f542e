#ifndef CUR_ERRORS_HPP
#define CUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cur {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument: dimension mismatch, out-of-range rank, non-finite input.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Iterative method exceeded its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// A linear system that must be nonsingular was not.
class SingularityError : public Error {
public:
    using Error::Error;
};

// LU met a structurally zero pivot column.
class DegeneratePivotError : public Error {
public:
    using Error::Error;
};

// C or R factor numerically rank deficient.
class RankDeficiencyError : public Error {
public:
    using Error::Error;
};

// Malformed input file.
class ParseError : public Error {
public:
    using Error::Error;
};

// Oracle request exceeds the combinatorial budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace cur

#endif
