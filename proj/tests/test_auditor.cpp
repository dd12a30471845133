#include <algorithm>
#include <map>

#include "doctest.h"

#include "protogame/auditor.hpp"
#include "protogame/errors.hpp"

using namespace protogame;

namespace {

const ChainClaim &chain_by_id(const ProtocolEntry &entry, const std::string &id) {
    for (const auto &claim : entry.claims) {
        if (claim.id == id) return std::get<ChainClaim>(claim.body);
    }
    throw std::runtime_error("no such claim: " + id);
}

const FairnessClaim &fairness_by_id(const ProtocolEntry &entry, const std::string &id) {
    for (const auto &claim : entry.claims) {
        if (claim.id == id) return std::get<FairnessClaim>(claim.body);
    }
    throw std::runtime_error("no such claim: " + id);
}

} // namespace

TEST_CASE("fair exchange chains hold on 1000 samples") {
    const auto &entry = get_protocol("fair_exchange");
    for (const char *id : {"chain0", "chain1"}) {
        auto report = audit_chain(chain_by_id(entry, id), *entry.model, 42, 1000);
        CHECK(report.holds);
        CHECK(report.samples_used == 1000);
    }
}

TEST_CASE("stated oblivious transfer A-chain is refuted exactly") {
    const auto &entry = get_protocol("oblivious_transfer");
    auto report = audit_chain(chain_by_id(entry, "chain1"), *entry.model, 42, 1000);
    REQUIRE_FALSE(report.holds);
    REQUIRE(report.chain_counterexample.has_value());
    const auto &cx = *report.chain_counterexample;
    // (k-1)*u_A < 0 is the failing step for any k > 1
    CHECK(cx.separator_index == 1);
    CHECK(cx.left_value > Rational(0));
    CHECK(cx.right_value == Rational(0));
    // counterexample validity: satisfies the constraints, violates the step
    CHECK(check_constraints(cx.params, entry.model->constraints).all_satisfied);
    const auto &claim = chain_by_id(entry, "chain1");
    CHECK(claim.entries[1].eval(cx.params) >= claim.entries[2].eval(cx.params));
}

TEST_CASE("degenerate chain 0 <= 0 holds") {
    const auto &entry = get_protocol("fair_exchange");
    ChainClaim claim{PartyId::A,
                     {Expr::lit(Rational(0)), Expr::lit(Rational(0))},
                     {ChainSep::less_equal},
                     "degenerate"};
    CHECK(audit_chain(claim, *entry.model, 1, 50).holds);
}

TEST_CASE("corrected order search recovers -u < 0 < (k-1)u < ku") {
    const auto &entry = get_protocol("oblivious_transfer");
    Expr u = Expr::var("u_A"), k = Expr::var("k");
    std::vector<Expr> values{-u, (k - Expr::lit(Rational(1))) * u, Expr::lit(Rational(0)), k * u};
    auto report = corrected_chain_search(values, *entry.model, 42, 1000);
    auto order = report.consistent_total_order();
    REQUIRE(order.has_value());
    CHECK(*order == std::vector<size_t>{0, 2, 1, 3});  // -u, 0, (k-1)u, ku
}

TEST_CASE("s2pc pair ((k-1)u + u_AB - u_AA, 0) varies with valid witnesses both ways") {
    const auto &entry = get_protocol("s2pc");
    Expr u = Expr::var("u_g"), k = Expr::var("k");
    Expr left = (k - Expr::lit(Rational(1))) * u + Expr::var("u_AB") - Expr::var("u_AA");
    std::vector<Expr> values{left, Expr::lit(Rational(0))};
    auto report = corrected_chain_search(values, *entry.model, 42, 1000);
    const auto &cell = report.cell(0, 1);
    REQUIRE(cell.order == PairwiseOrderReport::Order::varies);
    REQUIRE(cell.witness_low.has_value());
    REQUIRE(cell.witness_high.has_value());
    CHECK(check_constraints(*cell.witness_low, entry.model->constraints).all_satisfied);
    CHECK(check_constraints(*cell.witness_high, entry.model->constraints).all_satisfied);
    CHECK(left.eval(*cell.witness_low) < Rational(0));
    CHECK(left.eval(*cell.witness_high) > Rational(0));
}

TEST_CASE("identical expressions compare always equal") {
    const auto &entry = get_protocol("fair_exchange");
    Expr x = Expr::var("u_AB");
    auto report = corrected_chain_search({x, x}, *entry.model, 7, 100);
    CHECK(report.cell(0, 1).order == PairwiseOrderReport::Order::always_equal);
}

TEST_CASE("fairness holds on rational fair exchange, fails on naive with the documented witness") {
    const auto &entry = get_protocol("fair_exchange");
    const auto &impl = fairness_by_id(entry, "fairness0").implication;  // honest A, rational
    CHECK(audit_fairness(entry.game("rational"), impl, 42, 200).holds);

    auto naive = audit_fairness(entry.game("naive"), impl, 42, 200);
    REQUIRE_FALSE(naive.holds);
    REQUIRE(naive.fairness_counterexample.has_value());
    CHECK(naive.fairness_counterexample->profile == ActionProfile{"follow", "withhold"});
    CHECK(check_constraints(naive.fairness_counterexample->params, entry.model->constraints)
              .all_satisfied);
}

TEST_CASE("fairness holds vacuously when the antecedent never fires") {
    const auto &entry = get_protocol("oblivious_transfer");
    const auto &impl = fairness_by_id(entry, "fairness0").implication;  // honest B
    auto report = audit_fairness(entry.game("rational"), impl, 42, 200);
    CHECK(report.holds);
}

TEST_CASE("honest profiles audit as equilibria on all rational variants") {
    for (const auto &entry : catalog()) {
        const auto &game = entry.game("rational");
        auto report = audit_equilibrium_claim(game, game.honest_profile(), true, 42, 200);
        CHECK(report.holds);
    }
}

TEST_CASE("with-abort oblivious transfer refutes the equilibrium expectation") {
    const auto &entry = get_protocol("oblivious_transfer");
    const auto &game = entry.game("with_abort");
    auto report = audit_equilibrium_claim(game, game.honest_profile(), true, 42, 100);
    REQUIRE_FALSE(report.holds);
    REQUIRE(report.nash_mismatch.has_value());
    REQUIRE(report.nash_mismatch->witness.has_value());
    const auto &witness = *report.nash_mismatch->witness;
    CHECK(witness.party == PartyId::A);
    CHECK(witness.action == "abort");
    CHECK(witness.payoff_after == Rational(0));
    // abort lifts A from -u_A/2 to 0
    Rational u_A = report.nash_mismatch->params.at("u_A");
    CHECK(witness.payoff_before == Rational(-1, 2) * u_A);
    // the same claim with the documented expectation holds
    CHECK(audit_equilibrium_claim(game, game.honest_profile(), false, 42, 100).holds);
}

TEST_CASE("single-action game audits as an equilibrium") {
    const auto &entry = get_protocol("fair_exchange");
    StrategicGame game;
    game.name = "lone";
    game.model = entry.model;
    game.actions_a = {PartyId::A, {"follow"}, "follow"};
    game.actions_b = {PartyId::B, {"follow"}, "follow"};
    game.outcome_map.emplace(ActionProfile{"follow", "follow"},
                             OutcomeDistribution::sure(OutcomeAssignment{}));
    game.validate();
    CHECK(audit_equilibrium_claim(game, {"follow", "follow"}, true, 3, 50).holds);
}

TEST_CASE("audits are deterministic and refutations are monotone in sample count") {
    const auto &entry = get_protocol("oblivious_transfer");
    const auto &claim = chain_by_id(entry, "chain1");
    auto a = audit_chain(claim, *entry.model, 11, 200);
    auto b = audit_chain(claim, *entry.model, 11, 200);
    CHECK(a.holds == b.holds);
    CHECK(a.samples_used == b.samples_used);
    CHECK(a.chain_counterexample->params == b.chain_counterexample->params);
    CHECK(a.notes == b.notes);

    auto more = audit_chain(claim, *entry.model, 11, 800);
    CHECK_FALSE(more.holds);
    CHECK(more.chain_counterexample->params == a.chain_counterexample->params);
}

TEST_CASE("chain values match the payoff spectrum over the covered outcomes") {
    // which outcomes each documented chain spans
    std::map<std::string, bool> skip_empty{{"coin_flipping", true}};
    struct Case {
        const char *protocol;
        const char *claim;
        PartyId party;
    };
    for (const Case &c : {Case{"fair_exchange", "chain0", PartyId::A},
                          Case{"fair_exchange", "chain1", PartyId::B},
                          Case{"s2pc", "chain0", PartyId::A},
                          Case{"s2pc", "chain2", PartyId::B},
                          Case{"coin_flipping", "chain0", PartyId::A},
                          Case{"coin_flipping", "chain1", PartyId::B},
                          Case{"oblivious_transfer", "chain0", PartyId::B},
                          Case{"oblivious_transfer", "chain1", PartyId::A}}) {
        const auto &entry = get_protocol(c.protocol);
        const auto &claim = chain_by_id(entry, c.claim);
        auto samples = sample_params(entry.model->constraints, entry.model->params, 23, 25);
        for (const auto &params : samples) {
            std::vector<Rational> chain_values;
            for (const auto &e : claim.entries) chain_values.push_back(e.eval(params));
            std::vector<Rational> spectrum_values;
            for (const auto &q : enumerate_outcomes(*entry.model)) {
                if (skip_empty.count(c.protocol) && q.empty()) continue;
                spectrum_values.push_back(payoff(*entry.model, c.party, q, params));
            }
            std::sort(chain_values.begin(), chain_values.end());
            std::sort(spectrum_values.begin(), spectrum_values.end());
            CHECK(chain_values == spectrum_values);
        }
    }
}

TEST_CASE("preference audit confirms the s2pc ranking numerically") {
    const auto &entry = get_protocol("s2pc");
    ParamSet params{{"u_g", Rational(1)},  {"k", Rational(2)},     {"u_AB", Rational(3, 2)},
                    {"u_AA", Rational(3)}, {"u_BA", Rational(3, 2)}, {"u_BB", Rational(3)}};
    auto report = audit_preferences(entry, params);
    CHECK(report.all_confirmed);
    size_t quantified = 0;
    for (const auto &row : report.rows) {
        if (row.has_quantities) {
            ++quantified;
            CHECK(row.confirmed);
        }
    }
    CHECK(quantified == 6);  // three pairs per party

    ParamSet bad = params;
    bad["u_AB"] = Rational(5, 2);
    CHECK_THROWS_AS(audit_preferences(entry, bad), ConstraintViolationError);
}

TEST_CASE("preference audit echoes rankings without quantity mappings") {
    const auto &entry = get_protocol("bit_commitment");
    auto samples = sample_params(entry.model->constraints, entry.model->params, 2, 1);
    auto report = audit_preferences(entry, samples.front());
    CHECK(report.all_confirmed);
    REQUIRE(report.rows.size() == 2);
    for (const auto &row : report.rows) CHECK_FALSE(row.has_quantities);
}
