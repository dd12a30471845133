#pragma once

#include <map>
#include <memory>
#include <string>

#include "protogame/rational.hpp"

namespace protogame {

/// Complete binding of parameter names to exact values.
using ParamSet = std::map<std::string, Rational>;

/// Immutable arithmetic expression over rational literals and named
/// parameters. Nodes are shared, so copies are cheap; structural equality
/// is decidable and evaluation under a complete ParamSet is exact.
class Expr {
public:
    enum class Kind { literal, param, negate, add, subtract, multiply };

    Expr() : Expr(lit(Rational(0))) {}

    static Expr lit(Rational value);
    static Expr var(std::string name);

    Expr operator-() const;
    Expr operator+(const Expr &rhs) const;
    Expr operator-(const Expr &rhs) const;
    Expr operator*(const Expr &rhs) const;

    Kind kind() const;
    const Rational &literal_value() const;    // literal nodes only
    const std::string &param_name() const;    // param nodes only
    Expr left() const;                        // negate/add/subtract/multiply
    Expr right() const;                       // add/subtract/multiply

    /// Exact value under a complete binding; throws UnboundParamError.
    Rational eval(const ParamSet &params) const;

    bool operator==(const Expr &rhs) const;

    /// Canonical text with minimal parentheses; re-parsing the result in the
    /// gamespec grammar reproduces the same text.
    std::string to_string() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline Expr operator+(long long lhs, const Expr &rhs) { return Expr::lit(Rational(lhs)) + rhs; }
inline Expr operator-(long long lhs, const Expr &rhs) { return Expr::lit(Rational(lhs)) - rhs; }
inline Expr operator*(long long lhs, const Expr &rhs) { return Expr::lit(Rational(lhs)) * rhs; }

} // namespace protogame
