#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "protogame/model.hpp"

namespace protogame {

/// A party's finite action menu, with the protocol-following action marked.
struct ActionSet {
    PartyId party;
    std::vector<std::string> actions;
    std::string honest;

    bool has(const std::string &action) const;
    size_t index_of(const std::string &action) const;  // throws ModelError when absent
};

/// Probability distribution over terminal outcomes; probabilities are
/// strictly positive exact rationals summing to 1.
struct OutcomeDistribution {
    struct Branch {
        OutcomeAssignment outcome;
        Rational probability;
    };
    std::vector<Branch> branches;

    static OutcomeDistribution sure(OutcomeAssignment outcome);
    /// Validates positivity and the exact sum; throws ModelError.
    void validate(const PayoffModel &model) const;
};

/// A pure action pair, first party A then party B.
using ActionProfile = std::pair<std::string, std::string>;

enum class GameVariant { rational, naive, custom };

const char *variant_text(GameVariant v);

/// One-shot strategic form of a protocol: each party picks a behaviour
/// policy and the outcome map yields the resulting distribution over
/// terminal outcomes of the underlying payoff model.
struct StrategicGame {
    std::string name;          // "rational", "naive", "with_abort", ...
    GameVariant variant = GameVariant::custom;
    std::shared_ptr<const PayoffModel> model;
    ActionSet actions_a;
    ActionSet actions_b;
    std::map<ActionProfile, OutcomeDistribution> outcome_map;

    ActionProfile honest_profile() const { return {actions_a.honest, actions_b.honest}; }
    const ActionSet &actions(PartyId p) const { return p == PartyId::A ? actions_a : actions_b; }
    const OutcomeDistribution &outcome(const ActionProfile &profile) const;

    /// Checks totality of the outcome map, honest membership, action name
    /// uniqueness and branch validity. Throws ModelError.
    void validate() const;
};

struct DeviationWitness {
    PartyId party;
    std::string action;       // the improving deviation
    Rational payoff_before;   // deviator's expected payoff at the profile
    Rational payoff_after;    // after unilaterally switching to `action`
};

struct NashVerdict {
    bool holds = true;
    std::optional<DeviationWitness> witness;
};

struct Classification {
    bool zero_sum = true;
    bool non_positive_sum = true;
    std::optional<OutcomeAssignment> positive_sum_witness;
    bool closed = true;
    std::optional<std::pair<OutcomeAssignment, PartyId>> closedness_violation;
};

enum class Dominance { strict, weak, none };

const char *dominance_text(Dominance d);

/// Probability-weighted exact payoff of `party` at `profile`.
Rational expected_payoff(const StrategicGame &game, const ActionProfile &profile, PartyId party,
                         const ParamSet &params);

/// Nash check with weak inequalities: holds iff no unilateral deviation
/// strictly improves the deviator. A failing verdict carries the deviation
/// with the largest improvement (ties: party A first, then action order).
NashVerdict is_nash(const StrategicGame &game, const ActionProfile &profile, const ParamSet &params);

/// Does action s dominate action t for `party`? Strict: better against every
/// opponent action; weak: never worse and better somewhere.
Dominance dominance(const StrategicGame &game, PartyId party, const std::string &s,
                    const std::string &t, const ParamSet &params);

/// Zero-sum / non-positive-sum / closedness over the model's whole outcome
/// universe. Closed: a positive income for one party implies a positive
/// expense for the other at the same outcome.
Classification classify(const StrategicGame &game, const ParamSet &params);

/// All pure Nash profiles in canonical (A index, B index) order. Computed by
/// best-response tables, independently of is_nash.
std::vector<ActionProfile> equilibria(const StrategicGame &game, const ParamSet &params);

} // namespace protogame
