#include "protogame/auditor.hpp"

#include <algorithm>

#include "protogame/errors.hpp"

namespace protogame {

namespace {

bool step_holds(ChainSep sep, const Rational &left, const Rational &right) {
    switch (sep) {
        case ChainSep::less: return left < right;
        case ChainSep::less_equal: return left <= right;
        case ChainSep::equal: return left == right;
        case ChainSep::unordered: return true;
    }
    return false;
}

} // namespace

const PairwiseOrderReport::Cell &PairwiseOrderReport::cell(size_t row, size_t col) const {
    for (const auto &c : cells) {
        if (c.row == row && c.col == col) return c;
        if (c.row == col && c.col == row) return c;
    }
    throw Error("pairwise order report: no such cell");
}

std::optional<std::vector<size_t>> PairwiseOrderReport::consistent_total_order() const {
    std::vector<size_t> below(entries.size(), 0);  // how many entries sit below each one
    for (const auto &c : cells) {
        if (c.order == Order::always_less) {
            ++below[c.col];
        } else if (c.order == Order::always_greater) {
            ++below[c.row];
        } else {
            return std::nullopt;
        }
    }
    std::vector<size_t> order(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return below[a] < below[b]; });
    // a strict total order has distinct below-counts 0..n-1
    for (size_t i = 0; i < order.size(); ++i) {
        if (below[order[i]] != i) return std::nullopt;
    }
    return order;
}

AuditReport audit_chain(const ChainClaim &claim, const PayoffModel &model, long long seed,
                        long long n_samples, const SamplerBounds &bounds) {
    if (claim.entries.size() < 2 || claim.separators.size() != claim.entries.size() - 1)
        throw ModelError("malformed chain claim");
    AuditReport report;
    report.kind = "chain";
    auto samples = sample_params(model.constraints, model.params, seed, n_samples, bounds);
    for (size_t s = 0; s < samples.size(); ++s) {
        const ParamSet &params = samples[s];
        for (size_t i = 0; i < claim.separators.size(); ++i) {
            if (claim.separators[i] == ChainSep::unordered) continue;
            Rational left = claim.entries[i].eval(params);
            Rational right = claim.entries[i + 1].eval(params);
            if (!step_holds(claim.separators[i], left, right)) {
                report.holds = false;
                report.samples_used = static_cast<long long>(s) + 1;
                AuditReport::ChainCounterexample cx;
                cx.params = params;
                cx.separator_index = i;
                cx.separator = claim.separators[i];
                cx.left_text = claim.entries[i].to_string();
                cx.right_text = claim.entries[i + 1].to_string();
                cx.left_value = left;
                cx.right_value = right;
                report.chain_counterexample = std::move(cx);
                report.notes = "step " + std::to_string(i) + " fails: " +
                               report.chain_counterexample->left_text + " " +
                               chain_sep_text(claim.separators[i]) + " " +
                               report.chain_counterexample->right_text + " with " +
                               left.to_string() + " vs " + right.to_string();
                return report;
            }
        }
    }
    report.samples_used = n_samples;
    report.notes = "every ordered step held on all samples";
    return report;
}

PairwiseOrderReport corrected_chain_search(const std::vector<Expr> &values, const PayoffModel &model,
                                           long long seed, long long n_samples,
                                           const SamplerBounds &bounds) {
    if (values.size() < 2) throw ModelError("pairwise order search needs at least two expressions");
    PairwiseOrderReport report;
    report.samples_used = n_samples;
    for (const auto &value : values) report.entries.push_back(value.to_string());

    auto samples = sample_params(model.constraints, model.params, seed, n_samples, bounds);
    for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = i + 1; j < values.size(); ++j) {
            PairwiseOrderReport::Cell cell;
            cell.row = i;
            cell.col = j;
            bool saw_less = false, saw_greater = false, saw_equal = false;
            for (const auto &params : samples) {
                Rational left = values[i].eval(params);
                Rational right = values[j].eval(params);
                if (left < right) {
                    if (!saw_less) cell.witness_low = params;
                    saw_less = true;
                } else if (left > right) {
                    if (!saw_greater) cell.witness_high = params;
                    saw_greater = true;
                } else {
                    if (!saw_equal) cell.witness_equal = params;
                    saw_equal = true;
                }
            }
            if (saw_less && !saw_greater && !saw_equal) {
                cell.order = PairwiseOrderReport::Order::always_less;
            } else if (saw_greater && !saw_less && !saw_equal) {
                cell.order = PairwiseOrderReport::Order::always_greater;
            } else if (saw_equal && !saw_less && !saw_greater) {
                cell.order = PairwiseOrderReport::Order::always_equal;
            } else {
                cell.order = PairwiseOrderReport::Order::varies;
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

AuditReport audit_fairness(const StrategicGame &game, const FairnessImplication &implication,
                           long long seed, long long n_samples, const SamplerBounds &bounds) {
    AuditReport report;
    report.kind = "fairness";
    const PayoffModel &model = *game.model;
    auto samples = sample_params(model.constraints, model.params, seed, n_samples, bounds);

    PartyId honest = implication.honest_party;
    const std::string &honest_action = game.actions(honest).honest;
    const auto &opponent_actions = game.actions(other(honest)).actions;

    for (size_t s = 0; s < samples.size(); ++s) {
        const ParamSet &params = samples[s];
        Rational antecedent = implication.antecedent_amount.eval(params);
        Rational consequent = implication.consequent_amount.eval(params);
        for (const auto &opponent_action : opponent_actions) {
            ActionProfile profile = honest == PartyId::A
                                        ? ActionProfile{honest_action, opponent_action}
                                        : ActionProfile{opponent_action, honest_action};
            for (const auto &branch : game.outcome(profile).branches) {
                Rational opp_income =
                    income_total(model, implication.antecedent_party, branch.outcome, params);
                if (opp_income != antecedent) continue;
                Rational honest_income =
                    income_total(model, implication.consequent_party, branch.outcome, params);
                if (honest_income == consequent) continue;
                report.holds = false;
                report.samples_used = static_cast<long long>(s) + 1;
                AuditReport::FairnessCounterexample cx;
                cx.params = params;
                cx.profile = profile;
                cx.branch = branch.outcome;
                cx.antecedent_value = antecedent;
                cx.consequent_value = consequent;
                cx.honest_income = honest_income;
                report.fairness_counterexample = std::move(cx);
                report.notes = "profile (" + profile.first + ", " + profile.second + ") branch " +
                               branch.outcome.to_string() + ": opponent income " +
                               antecedent.to_string() + " reached but honest income is " +
                               honest_income.to_string() + ", expected " + consequent.to_string();
                return report;
            }
        }
    }
    report.samples_used = n_samples;
    report.notes = "implication held for every opponent action, branch and sample";
    return report;
}

AuditReport audit_equilibrium_claim(const StrategicGame &game, const ActionProfile &profile,
                                    bool expect_nash, long long seed, long long n_samples,
                                    const SamplerBounds &bounds) {
    AuditReport report;
    report.kind = "nash";
    const PayoffModel &model = *game.model;
    auto samples = sample_params(model.constraints, model.params, seed, n_samples, bounds);
    for (size_t s = 0; s < samples.size(); ++s) {
        NashVerdict verdict = is_nash(game, profile, samples[s]);
        if (verdict.holds == expect_nash) continue;
        report.holds = false;
        report.samples_used = static_cast<long long>(s) + 1;
        AuditReport::NashMismatch mismatch;
        mismatch.params = samples[s];
        mismatch.observed_nash = verdict.holds;
        mismatch.witness = verdict.witness;
        report.nash_mismatch = std::move(mismatch);
        report.notes = std::string("profile is ") + (verdict.holds ? "" : "not ") +
                       "an equilibrium, claimed " + (expect_nash ? "to be one" : "not to be one");
        if (verdict.witness) {
            report.notes += "; deviation " + std::string(party_name(verdict.witness->party)) + " -> " +
                            verdict.witness->action + " improves " +
                            verdict.witness->payoff_before.to_string() + " to " +
                            verdict.witness->payoff_after.to_string();
        }
        return report;
    }
    report.samples_used = n_samples;
    report.notes = expect_nash ? "equilibrium on every sample" : "non-equilibrium on every sample";
    return report;
}

PreferenceReport audit_preferences(const ProtocolEntry &entry, const ParamSet &params) {
    auto verdict = check_constraints(params, entry.model->constraints);
    if (!verdict.all_satisfied)
        throw ConstraintViolationError(entry.name + ": parameters violate " +
                                       verdict.violated->to_string());
    PreferenceReport report;
    auto add_rows = [&](PartyId party, const std::vector<PreferencePair> &pairs,
                        const std::map<std::string, Expr> &quantities) {
        for (const auto &pair : pairs) {
            PreferenceReport::Row row;
            row.party = party;
            row.lower = pair.lower;
            row.higher = pair.higher;
            auto lo = quantities.find(pair.lower);
            auto hi = quantities.find(pair.higher);
            if (lo != quantities.end() && hi != quantities.end()) {
                Rational lo_value = lo->second.eval(params);
                Rational hi_value = hi->second.eval(params);
                row.has_quantities = true;
                row.confirmed = lo_value <= hi_value;
                row.lower_value = lo_value.to_string();
                row.higher_value = hi_value.to_string();
                if (!row.confirmed) report.all_confirmed = false;
            }
            report.rows.push_back(std::move(row));
        }
    };
    add_rows(PartyId::A, entry.preferences.pairs_a, entry.preferences.quantities_a);
    add_rows(PartyId::B, entry.preferences.pairs_b, entry.preferences.quantities_b);
    return report;
}

} // namespace protogame
