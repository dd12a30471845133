#pragma once

#include <stdexcept>
#include <string>

namespace protogame {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An expression referenced a parameter that is not bound.
class UnboundParamError : public Error {
public:
    explicit UnboundParamError(const std::string &name)
        : Error("unbound parameter: " + name), param(name) {}
    std::string param;
};

/// A payoff was requested for an assignment outside the model's outcome universe.
class InfeasibleOutcomeError : public Error {
    using Error::Error;
};

/// A parameter set violates the model's declared constraints.
class ConstraintViolationError : public Error {
    using Error::Error;
};

/// The sampler ran out of draws before finding a satisfying point.
class SamplerBudgetError : public Error {
public:
    explicit SamplerBudgetError(const std::string &what) : Error("unsatisfied-after-budget: " + what) {}
};

/// Catalog lookup with a name that is neither canonical nor an alias.
class UnknownProtocolError : public Error {
    using Error::Error;
};

/// Malformed value construction (bad probability sum, duplicate action, ...).
class ModelError : public Error {
    using Error::Error;
};

/// Lexical, syntactic or semantic error in a gamespec document.
/// Line and column are 1-based and point into the source text.
class ParseError : public Error {
public:
    ParseError(int line_, int column_, const std::string &message, std::string token_ = "")
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + message +
                (token_.empty() ? "" : " (near '" + token_ + "')")),
          line(line_), column(column_), token(std::move(token_)) {}
    int line;
    int column;
    std::string token;
};

/// Bad command line or params file usage.
class UsageError : public Error {
    using Error::Error;
};

} // namespace protogame
