#pragma once

#include <optional>
#include <string>
#include <vector>

#include "protogame/catalog.hpp"
#include "protogame/claims.hpp"
#include "protogame/sampler.hpp"

namespace protogame {

/// Verdict for one audited claim. Refutations are exact: the stored
/// counterexample re-evaluates to the reported violation under the model's
/// own constraints, so more samples can never turn a refutation around.
struct AuditReport {
    struct ChainCounterexample {
        ParamSet params;
        size_t separator_index = 0;
        ChainSep separator = ChainSep::less;
        std::string left_text;
        std::string right_text;
        Rational left_value;
        Rational right_value;
    };
    struct FairnessCounterexample {
        ParamSet params;
        ActionProfile profile;
        OutcomeAssignment branch;
        Rational antecedent_value;
        Rational consequent_value;
        Rational honest_income;
    };
    struct NashMismatch {
        ParamSet params;
        bool observed_nash = false;
        std::optional<DeviationWitness> witness;
    };

    std::string claim_id;
    std::string kind;  // "chain" | "fairness" | "nash"
    long long samples_used = 0;
    bool holds = true;  // holds-on-all-samples vs refuted
    std::optional<ChainCounterexample> chain_counterexample;
    std::optional<FairnessCounterexample> fairness_counterexample;
    std::optional<NashMismatch> nash_mismatch;
    std::string notes;
};

/// Pairwise order observed between two expressions across all samples.
struct PairwiseOrderReport {
    enum class Order { always_less, always_greater, always_equal, varies };

    struct Cell {
        size_t row = 0;  // indices into `entries`
        size_t col = 0;
        Order order = Order::varies;
        // populated for `varies`: one witness per observed direction
        std::optional<ParamSet> witness_low;   // left < right
        std::optional<ParamSet> witness_high;  // left > right
        std::optional<ParamSet> witness_equal;
    };

    std::vector<std::string> entries;  // printed expressions
    std::vector<Cell> cells;           // upper triangle, row < col
    long long samples_used = 0;

    const Cell &cell(size_t row, size_t col) const;

    /// When every pair is strictly ordered the same way on all samples,
    /// returns the entry indices sorted ascending; otherwise nullopt.
    std::optional<std::vector<size_t>> consistent_total_order() const;
};

/// Evaluates each ordered adjacent pair of the chain on every sampled
/// ParamSet; refuted on the first exact violation. Unordered separators are
/// skipped. Sampler errors propagate.
AuditReport audit_chain(const ChainClaim &claim, const PayoffModel &model, long long seed,
                        long long n_samples, const SamplerBounds &bounds = SamplerBounds{});

/// Pairwise order matrix over `values` under the model's constraints.
PairwiseOrderReport corrected_chain_search(const std::vector<Expr> &values, const PayoffModel &model,
                                           long long seed, long long n_samples,
                                           const SamplerBounds &bounds = SamplerBounds{});

/// Pins the honest party to its honest action and checks, for every opponent
/// action, sample and outcome branch: antecedent income reached => consequent
/// income reached in the same branch.
AuditReport audit_fairness(const StrategicGame &game, const FairnessImplication &implication,
                           long long seed, long long n_samples,
                           const SamplerBounds &bounds = SamplerBounds{});

/// Runs is_nash per sample and compares with the claimed truth value.
AuditReport audit_equilibrium_claim(const StrategicGame &game, const ActionProfile &profile,
                                    bool expect_nash, long long seed, long long n_samples,
                                    const SamplerBounds &bounds = SamplerBounds{});

/// One row per documented preference pair; rows with quantity mappings are
/// checked numerically under `params`, the rest are echoed report-only.
struct PreferenceReport {
    struct Row {
        PartyId party;
        std::string lower;
        std::string higher;
        bool has_quantities = false;
        bool confirmed = true;  // meaningful only when has_quantities
        std::string lower_value;
        std::string higher_value;
    };
    std::vector<Row> rows;
    bool all_confirmed = true;
};

PreferenceReport audit_preferences(const ProtocolEntry &entry, const ParamSet &params);

} // namespace protogame
