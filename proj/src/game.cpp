#include "protogame/game.hpp"

#include <algorithm>
#include <set>

#include "protogame/errors.hpp"

namespace protogame {

bool ActionSet::has(const std::string &action) const {
    return std::find(actions.begin(), actions.end(), action) != actions.end();
}

size_t ActionSet::index_of(const std::string &action) const {
    auto it = std::find(actions.begin(), actions.end(), action);
    if (it == actions.end())
        throw ModelError("unknown action '" + action + "' for party " + party_name(party));
    return static_cast<size_t>(it - actions.begin());
}

OutcomeDistribution OutcomeDistribution::sure(OutcomeAssignment outcome) {
    return OutcomeDistribution{{{std::move(outcome), Rational(1)}}};
}

void OutcomeDistribution::validate(const PayoffModel &model) const {
    if (branches.empty()) throw ModelError("empty outcome distribution");
    Rational total(0);
    for (const auto &branch : branches) {
        if (!(branch.probability > Rational(0)))
            throw ModelError("branch probability must be strictly positive");
        if (!model.is_feasible(branch.outcome))
            throw ModelError("distribution branch " + branch.outcome.to_string() +
                             " is not a feasible outcome of " + model.name);
        total += branch.probability;
    }
    if (total != Rational(1))
        throw ModelError("branch probabilities sum to " + total.to_string() + ", expected 1");
}

const char *variant_text(GameVariant v) {
    switch (v) {
        case GameVariant::rational: return "rational";
        case GameVariant::naive: return "naive";
        case GameVariant::custom: return "custom";
    }
    return "?";
}

const char *dominance_text(Dominance d) {
    switch (d) {
        case Dominance::strict: return "strict";
        case Dominance::weak: return "weak";
        case Dominance::none: return "none";
    }
    return "?";
}

const OutcomeDistribution &StrategicGame::outcome(const ActionProfile &profile) const {
    auto it = outcome_map.find(profile);
    if (it == outcome_map.end())
        throw ModelError(name + ": outcome map has no entry for (" + profile.first + ", " +
                         profile.second + ")");
    return it->second;
}

void StrategicGame::validate() const {
    if (model == nullptr) throw ModelError(name + ": game without a payoff model");
    for (const ActionSet *set : {&actions_a, &actions_b}) {
        if (set->actions.empty())
            throw ModelError(name + ": empty action set for party " + party_name(set->party));
        std::set<std::string> seen(set->actions.begin(), set->actions.end());
        if (seen.size() != set->actions.size())
            throw ModelError(name + ": duplicate action name for party " + party_name(set->party));
        if (!set->has(set->honest))
            throw ModelError(name + ": honest action '" + set->honest + "' not in action set");
    }
    for (const auto &a : actions_a.actions) {
        for (const auto &b : actions_b.actions) {
            outcome(ActionProfile{a, b}).validate(*model);
        }
    }
    if (outcome_map.size() != actions_a.actions.size() * actions_b.actions.size())
        throw ModelError(name + ": outcome map has entries outside the action sets");
}

Rational expected_payoff(const StrategicGame &game, const ActionProfile &profile, PartyId party,
                         const ParamSet &params) {
    game.actions_a.index_of(profile.first);
    game.actions_b.index_of(profile.second);
    Rational total(0);
    for (const auto &branch : game.outcome(profile).branches)
        total += branch.probability * payoff(*game.model, party, branch.outcome, params);
    return total;
}

NashVerdict is_nash(const StrategicGame &game, const ActionProfile &profile, const ParamSet &params) {
    NashVerdict verdict;
    std::optional<Rational> best_improvement;
    for (PartyId party : {PartyId::A, PartyId::B}) {
        const std::string &current = party == PartyId::A ? profile.first : profile.second;
        game.actions(party).index_of(current);
        Rational before = expected_payoff(game, profile, party, params);
        for (const auto &action : game.actions(party).actions) {
            if (action == current) continue;
            ActionProfile deviated = profile;
            (party == PartyId::A ? deviated.first : deviated.second) = action;
            Rational after = expected_payoff(game, deviated, party, params);
            if (after > before) {
                Rational improvement = after - before;
                if (!best_improvement || improvement > *best_improvement) {
                    best_improvement = improvement;
                    verdict.witness = DeviationWitness{party, action, before, after};
                }
            }
        }
    }
    verdict.holds = !verdict.witness.has_value();
    return verdict;
}

Dominance dominance(const StrategicGame &game, PartyId party, const std::string &s,
                    const std::string &t, const ParamSet &params) {
    if (s == t) throw ModelError("dominance requires two distinct actions");
    game.actions(party).index_of(s);
    game.actions(party).index_of(t);
    bool all_strict = true;
    bool all_weak = true;
    bool some_strict = false;
    for (const auto &opponent_action : game.actions(other(party)).actions) {
        auto build = [&](const std::string &own) {
            return party == PartyId::A ? ActionProfile{own, opponent_action}
                                       : ActionProfile{opponent_action, own};
        };
        Rational with_s = expected_payoff(game, build(s), party, params);
        Rational with_t = expected_payoff(game, build(t), party, params);
        if (with_s > with_t) {
            some_strict = true;
        } else {
            all_strict = false;
            if (with_s < with_t) all_weak = false;
        }
    }
    if (all_strict) return Dominance::strict;
    if (all_weak && some_strict) return Dominance::weak;
    return Dominance::none;
}

Classification classify(const StrategicGame &game, const ParamSet &params) {
    const PayoffModel &model = *game.model;
    Classification result;
    std::optional<Rational> worst_sum;  // witness is the largest positive sum
    for (const auto &q : model.outcomes) {
        Rational sum = payoff(model, PartyId::A, q, params) + payoff(model, PartyId::B, q, params);
        if (!sum.is_zero()) result.zero_sum = false;
        if (sum > Rational(0)) {
            result.non_positive_sum = false;
            if (!worst_sum || sum > *worst_sum) {
                worst_sum = sum;
                result.positive_sum_witness = q;
            }
        }
        for (PartyId party : {PartyId::A, PartyId::B}) {
            if (income_total(model, party, q, params) > Rational(0) &&
                !(expense_total(model, other(party), q, params) > Rational(0))) {
                if (result.closed) {
                    result.closed = false;
                    result.closedness_violation = {q, party};
                }
            }
        }
    }
    return result;
}

std::vector<ActionProfile> equilibria(const StrategicGame &game, const ParamSet &params) {
    // best-response route, kept independent of is_nash
    const auto &as = game.actions_a.actions;
    const auto &bs = game.actions_b.actions;
    std::vector<std::vector<Rational>> pay_a(as.size(), std::vector<Rational>(bs.size()));
    std::vector<std::vector<Rational>> pay_b(as.size(), std::vector<Rational>(bs.size()));
    for (size_t i = 0; i < as.size(); ++i) {
        for (size_t j = 0; j < bs.size(); ++j) {
            ActionProfile profile{as[i], bs[j]};
            pay_a[i][j] = expected_payoff(game, profile, PartyId::A, params);
            pay_b[i][j] = expected_payoff(game, profile, PartyId::B, params);
        }
    }
    std::vector<Rational> best_a(bs.size());  // best A payoff against each B action
    for (size_t j = 0; j < bs.size(); ++j) {
        best_a[j] = pay_a[0][j];
        for (size_t i = 1; i < as.size(); ++i)
            if (pay_a[i][j] > best_a[j]) best_a[j] = pay_a[i][j];
    }
    std::vector<Rational> best_b(as.size());
    for (size_t i = 0; i < as.size(); ++i) {
        best_b[i] = pay_b[i][0];
        for (size_t j = 1; j < bs.size(); ++j)
            if (pay_b[i][j] > best_b[i]) best_b[i] = pay_b[i][j];
    }
    std::vector<ActionProfile> result;
    for (size_t i = 0; i < as.size(); ++i) {
        for (size_t j = 0; j < bs.size(); ++j) {
            if (pay_a[i][j] == best_a[j] && pay_b[i][j] == best_b[i])
                result.push_back({as[i], bs[j]});
        }
    }
    return result;
}

} // namespace protogame
