#include "protogame/expr.hpp"

#include "protogame/errors.hpp"

namespace protogame {

struct Expr::Node {
    Kind kind;
    Rational value;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

Expr Expr::lit(Rational value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::literal;
    node->value = std::move(value);
    return Expr(std::move(node));
}

Expr Expr::var(std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::param;
    node->name = std::move(name);
    return Expr(std::move(node));
}

Expr Expr::operator-() const {
    auto node = std::make_shared<Node>();
    node->kind = Kind::negate;
    node->lhs = node_;
    return Expr(std::move(node));
}

Expr Expr::operator+(const Expr &rhs) const {
    auto node = std::make_shared<Node>();
    node->kind = Kind::add;
    node->lhs = node_;
    node->rhs = rhs.node_;
    return Expr(std::move(node));
}

Expr Expr::operator-(const Expr &rhs) const {
    auto node = std::make_shared<Node>();
    node->kind = Kind::subtract;
    node->lhs = node_;
    node->rhs = rhs.node_;
    return Expr(std::move(node));
}

Expr Expr::operator*(const Expr &rhs) const {
    auto node = std::make_shared<Node>();
    node->kind = Kind::multiply;
    node->lhs = node_;
    node->rhs = rhs.node_;
    return Expr(std::move(node));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational &Expr::literal_value() const { return node_->value; }
const std::string &Expr::param_name() const { return node_->name; }
Expr Expr::left() const { return Expr(node_->lhs); }
Expr Expr::right() const { return Expr(node_->rhs); }

Rational Expr::eval(const ParamSet &params) const {
    const Node &n = *node_;
    switch (n.kind) {
        case Kind::literal: return n.value;
        case Kind::param: {
            auto it = params.find(n.name);
            if (it == params.end()) throw UnboundParamError(n.name);
            return it->second;
        }
        case Kind::negate: return -Expr(n.lhs).eval(params);
        case Kind::add: return Expr(n.lhs).eval(params) + Expr(n.rhs).eval(params);
        case Kind::subtract: return Expr(n.lhs).eval(params) - Expr(n.rhs).eval(params);
        case Kind::multiply: return Expr(n.lhs).eval(params) * Expr(n.rhs).eval(params);
    }
    throw Error("corrupt expression node");
}

bool Expr::operator==(const Expr &rhs) const {
    if (node_ == rhs.node_) return true;
    if (node_->kind != rhs.node_->kind) return false;
    switch (node_->kind) {
        case Kind::literal: return literal_value() == rhs.literal_value();
        case Kind::param: return param_name() == rhs.param_name();
        case Kind::negate: return left() == rhs.left();
        default: return left() == rhs.left() && right() == rhs.right();
    }
}

namespace {

int precedence_of(Expr::Kind kind) {
    switch (kind) {
        case Expr::Kind::add:
        case Expr::Kind::subtract: return 1;
        case Expr::Kind::multiply: return 2;
        case Expr::Kind::negate: return 3;
        default: return 4;
    }
}

void print_node(const Expr &e, int parent_prec, bool right_operand, std::string &out) {
    int prec = precedence_of(e.kind());
    // left-associative grammar: a right operand at equal precedence needs
    // parentheses (a - (b - c), a * (b * c))
    bool parens = prec < parent_prec || (prec == parent_prec && right_operand && prec <= 2);
    if (parens) out.push_back('(');
    switch (e.kind()) {
        case Expr::Kind::literal:
            out += e.literal_value().to_string();
            break;
        case Expr::Kind::param:
            out += e.param_name();
            break;
        case Expr::Kind::negate:
            out.push_back('-');
            print_node(e.left(), 3, false, out);
            break;
        case Expr::Kind::add:
            print_node(e.left(), 1, false, out);
            out += " + ";
            print_node(e.right(), 1, true, out);
            break;
        case Expr::Kind::subtract:
            print_node(e.left(), 1, false, out);
            out += " - ";
            print_node(e.right(), 1, true, out);
            break;
        case Expr::Kind::multiply:
            print_node(e.left(), 2, false, out);
            out += " * ";
            print_node(e.right(), 2, true, out);
            break;
    }
    if (parens) out.push_back(')');
}

} // namespace

std::string Expr::to_string() const {
    std::string out;
    print_node(*this, 0, false, out);
    return out;
}

} // namespace protogame
