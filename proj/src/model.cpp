#include "protogame/model.hpp"

#include <algorithm>
#include <set>

#include "protogame/errors.hpp"

namespace protogame {

const char *relation_text(Relation r) {
    switch (r) {
        case Relation::less: return "<";
        case Relation::less_equal: return "<=";
        case Relation::equal: return "=";
    }
    return "?";
}

bool Constraint::satisfied(const ParamSet &params) const {
    Rational l = left.eval(params);
    Rational r = right.eval(params);
    switch (relation) {
        case Relation::less: return l < r;
        case Relation::less_equal: return l <= r;
        case Relation::equal: return l == r;
    }
    return false;
}

std::string Constraint::to_string() const {
    return left.to_string() + " " + relation_text(relation) + " " + right.to_string();
}

std::string OutcomeAssignment::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto &atom : atoms) {
        if (!first) out += ", ";
        out += atom;
        first = false;
    }
    out += "}";
    return out;
}

bool OutcomeCanonicalLess::operator()(const OutcomeAssignment &a, const OutcomeAssignment &b) const {
    for (const auto &atom : sorted_atoms) {
        bool in_a = a.contains(atom);
        bool in_b = b.contains(atom);
        if (in_a != in_b) return !in_a;
    }
    return false;
}

std::vector<std::string> PayoffModel::sorted_atom_names() const {
    std::vector<std::string> names;
    names.reserve(atoms.size());
    for (const auto &atom : atoms) names.push_back(atom.name);
    std::sort(names.begin(), names.end());
    return names;
}

bool PayoffModel::has_atom(const std::string &n) const {
    return std::any_of(atoms.begin(), atoms.end(), [&](const EventAtom &a) { return a.name == n; });
}

bool PayoffModel::has_param(const std::string &n) const {
    return std::any_of(params.begin(), params.end(), [&](const Param &p) { return p.name == n; });
}

bool PayoffModel::is_feasible(const OutcomeAssignment &q) const {
    return std::find(outcomes.begin(), outcomes.end(), q) != outcomes.end();
}

namespace {

void collect_params(const Expr &e, std::set<std::string> &out) {
    switch (e.kind()) {
        case Expr::Kind::literal: return;
        case Expr::Kind::param:
            out.insert(e.param_name());
            return;
        case Expr::Kind::negate:
            collect_params(e.left(), out);
            return;
        default:
            collect_params(e.left(), out);
            collect_params(e.right(), out);
            return;
    }
}

} // namespace

void PayoffModel::finalize() {
    std::set<std::string> param_names;
    for (const auto &p : params) {
        if (!param_names.insert(p.name).second)
            throw ModelError(name + ": duplicate parameter '" + p.name + "'");
    }
    std::set<std::string> atom_names;
    for (const auto &a : atoms) {
        if (!atom_names.insert(a.name).second)
            throw ModelError(name + ": duplicate event '" + a.name + "'");
        if (param_names.count(a.name))
            throw ModelError(name + ": event '" + a.name + "' collides with a parameter");
    }
    auto check_expr = [&](const Expr &e, const std::string &where) {
        std::set<std::string> used;
        collect_params(e, used);
        for (const auto &u : used) {
            if (!param_names.count(u))
                throw ModelError(name + ": " + where + " references undeclared parameter '" + u + "'");
        }
    };
    for (const auto &c : constraints) {
        check_expr(c.left, "constraint");
        check_expr(c.right, "constraint");
    }
    for (const auto &r : rules) {
        if (!atom_names.count(r.trigger))
            throw ModelError(name + ": rule triggers undeclared event '" + r.trigger + "'");
        check_expr(r.amount, "rule amount");
    }
    if (outcomes.empty()) throw ModelError(name + ": empty outcome universe");
    for (const auto &q : outcomes) {
        for (const auto &atom : q.atoms) {
            if (!atom_names.count(atom))
                throw ModelError(name + ": outcome uses undeclared event '" + atom + "'");
        }
    }
    OutcomeCanonicalLess less{sorted_atom_names()};
    std::sort(outcomes.begin(), outcomes.end(), less);
    for (size_t i = 1; i < outcomes.size(); ++i) {
        if (outcomes[i] == outcomes[i - 1])
            throw ModelError(name + ": duplicate outcome " + outcomes[i].to_string());
    }
    if (!outcomes.front().empty())
        throw ModelError(name + ": outcome universe must contain the empty assignment");
}

Rational eval_expr(const Expr &expr, const ParamSet &params) { return expr.eval(params); }

ConstraintVerdict check_constraints(const ParamSet &params, const std::vector<Constraint> &constraints) {
    ConstraintVerdict verdict;
    for (size_t i = 0; i < constraints.size(); ++i) {
        if (!constraints[i].satisfied(params)) {
            verdict.all_satisfied = false;
            verdict.violated = constraints[i];
            verdict.violated_index = i;
            return verdict;
        }
    }
    return verdict;
}

Rational income_total(const PayoffModel &model, PartyId party, const OutcomeAssignment &q,
                      const ParamSet &params) {
    Rational total(0);
    for (const auto &rule : model.rules) {
        if (rule.party == party && rule.kind == RuleKind::income && q.contains(rule.trigger))
            total += rule.amount.eval(params);
    }
    return total;
}

Rational expense_total(const PayoffModel &model, PartyId party, const OutcomeAssignment &q,
                       const ParamSet &params) {
    Rational total(0);
    for (const auto &rule : model.rules) {
        if (rule.party == party && rule.kind == RuleKind::expense && q.contains(rule.trigger))
            total += rule.amount.eval(params);
    }
    return total;
}

Rational payoff(const PayoffModel &model, PartyId party, const OutcomeAssignment &q,
                const ParamSet &params) {
    if (!model.is_feasible(q))
        throw InfeasibleOutcomeError(model.name + ": infeasible outcome " + q.to_string());
    ConstraintVerdict verdict = check_constraints(params, model.constraints);
    if (!verdict.all_satisfied)
        throw ConstraintViolationError(model.name + ": parameters violate " +
                                       verdict.violated->to_string());
    return income_total(model, party, q, params) - expense_total(model, party, q, params);
}

Expr payoff_expr(const PayoffModel &model, PartyId party, const OutcomeAssignment &q) {
    std::optional<Expr> acc;
    for (const auto &rule : model.rules) {
        if (rule.party != party || !q.contains(rule.trigger)) continue;
        if (rule.kind == RuleKind::income) {
            acc = acc ? *acc + rule.amount : rule.amount;
        } else {
            acc = acc ? *acc - rule.amount : -rule.amount;
        }
    }
    return acc ? *acc : Expr::lit(Rational(0));
}

const std::vector<OutcomeAssignment> &enumerate_outcomes(const PayoffModel &model) {
    return model.outcomes;
}

std::vector<SpectrumEntry> payoff_spectrum(const PayoffModel &model, PartyId party,
                                           const ParamSet &params) {
    std::vector<SpectrumEntry> entries;
    entries.reserve(model.outcomes.size());
    for (const auto &q : model.outcomes) entries.push_back({q, payoff(model, party, q, params)});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const SpectrumEntry &a, const SpectrumEntry &b) { return a.value < b.value; });
    return entries;
}

} // namespace protogame
