#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "protogame/expr.hpp"

namespace protogame {

/// The two protocol participants. Every model has exactly these two.
enum class PartyId { A, B };

inline PartyId other(PartyId p) { return p == PartyId::A ? PartyId::B : PartyId::A; }
inline const char *party_name(PartyId p) { return p == PartyId::A ? "A" : "B"; }

struct Party {
    PartyId id;
    std::string display_name;
};

enum class ParamRole {
    utility_of_own_secret,
    utility_of_other_secret,
    utility_of_joint_output,
    amplification_factor,
    other,
};

struct Param {
    std::string name;
    ParamRole role = ParamRole::other;
};

enum class Relation { less, less_equal, equal };

const char *relation_text(Relation r);

/// left REL right over the model's parameters; satisfiability under a
/// complete ParamSet is decided by exact comparison.
struct Constraint {
    Expr left;
    Relation relation;
    Expr right;

    bool satisfied(const ParamSet &params) const;
    std::string to_string() const;
};

/// A named boolean event that can hold at a terminal outcome
/// ("A received B's secret", "M was selected by A", ...).
struct EventAtom {
    std::string name;
    std::string description;
    std::optional<PartyId> subject;
};

/// A terminal outcome: the set of event atoms that hold. Kept as a sorted
/// set of names so the canonical (atom-name bitvector) order is derivable.
struct OutcomeAssignment {
    std::set<std::string> atoms;

    bool contains(const std::string &atom) const { return atoms.count(atom) > 0; }
    bool empty() const { return atoms.empty(); }
    std::string to_string() const;

    bool operator==(const OutcomeAssignment &rhs) const = default;
    // name-lexicographic; canonical report order uses OutcomeCanonicalLess instead
    bool operator<(const OutcomeAssignment &rhs) const { return atoms < rhs.atoms; }
};

/// Canonical order: outcomes compared as bitvectors indexed by the
/// alphabetically sorted atom names of the owning model, false < true.
struct OutcomeCanonicalLess {
    std::vector<std::string> sorted_atoms;
    bool operator()(const OutcomeAssignment &a, const OutcomeAssignment &b) const;
};

enum class RuleKind { income, expense };

/// One additive payoff rule: `party` gains (income) or loses (expense)
/// `amount` whenever `trigger` holds at the terminal outcome.
struct PayoffRule {
    PartyId party;
    RuleKind kind;
    std::string trigger;
    Expr amount;
};

/// A protocol's payoff formalism: parameters with constraints, event atoms,
/// additive income/expense rules, and the explicit universe of terminal
/// outcomes. Construct via `validate`d aggregate initialization helpers;
/// `finalize()` checks the declared invariants and sorts the universe.
struct PayoffModel {
    std::string name;
    Party party_a{PartyId::A, "A"};
    Party party_b{PartyId::B, "B"};
    std::vector<Param> params;
    std::vector<Constraint> constraints;
    std::vector<EventAtom> atoms;
    std::vector<PayoffRule> rules;
    std::vector<OutcomeAssignment> outcomes;  // canonical order after finalize()

    /// Validates name uniqueness, rule/constraint references, the outcome
    /// universe (non-empty, duplicate-free, contains the empty assignment,
    /// atoms declared) and sorts outcomes canonically. Throws ModelError.
    void finalize();

    bool has_atom(const std::string &name) const;
    bool has_param(const std::string &name) const;
    bool is_feasible(const OutcomeAssignment &q) const;
    std::vector<std::string> sorted_atom_names() const;
};

/// Result of checking a constraint list: either everything holds or the
/// first violated constraint (by list order) is reported.
struct ConstraintVerdict {
    bool all_satisfied = true;
    std::optional<Constraint> violated;
    size_t violated_index = 0;
};

Rational eval_expr(const Expr &expr, const ParamSet &params);

ConstraintVerdict check_constraints(const ParamSet &params, const std::vector<Constraint> &constraints);

/// Sum of triggered income amounts for `party` at `q`. Does not check feasibility.
Rational income_total(const PayoffModel &model, PartyId party, const OutcomeAssignment &q,
                      const ParamSet &params);
Rational expense_total(const PayoffModel &model, PartyId party, const OutcomeAssignment &q,
                       const ParamSet &params);

/// incomes minus expenses; requires q feasible and params satisfying the
/// model constraints (throws InfeasibleOutcomeError / ConstraintViolationError).
Rational payoff(const PayoffModel &model, PartyId party, const OutcomeAssignment &q,
                const ParamSet &params);

/// Symbolic form of the payoff at q: triggered income amounts added,
/// triggered expense amounts subtracted, in rule order; literal 0 if none.
Expr payoff_expr(const PayoffModel &model, PartyId party, const OutcomeAssignment &q);

/// The outcome universe in canonical deterministic order.
const std::vector<OutcomeAssignment> &enumerate_outcomes(const PayoffModel &model);

struct SpectrumEntry {
    OutcomeAssignment outcome;
    Rational value;
};

/// One entry per feasible outcome, sorted ascending by value; ties keep the
/// canonical outcome order.
std::vector<SpectrumEntry> payoff_spectrum(const PayoffModel &model, PartyId party,
                                           const ParamSet &params);

} // namespace protogame
