#include <fstream>

#include "doctest.h"

#include "protogame/auditor.hpp"
#include "protogame/errors.hpp"
#include "protogame/gamespec.hpp"
#include "protogame/runner.hpp"

using namespace protogame;
using nlohmann::json;

namespace {

// a user-defined protocol: sender pays to transmit, receiver gains on
// arrival, transmission succeeds with probability 2/3
const char *kLossyChannelDoc = R"(protocol "lossy_channel"

party S
party R

param c
param w
constraint 0 < c
constraint c < w

event delivered "the message arrived" by R
event paid "the sender paid for transmission" by S

expense S c when paid
income R w when delivered
expense S w when delivered

outcome { }
outcome { paid }
outcome { delivered, paid }

game main custom
  action S : send | skip honest send
  action R : listen honest listen
  map (send, listen) -> { delivered, paid } @ 2/3, { paid } @ 1/3
  map (skip, listen) -> { } @ 1

claim chain S : -w - c < -c < 0 expected
claim chain R : 0 < w expected
claim fairness main S : R w => S w rejected
claim nash main (send, listen) rejected
)";

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

} // namespace

TEST_CASE("a user-defined chance game evaluates and verifies end to end") {
    ElaboratedSpec spec = elaborate(parse(kLossyChannelDoc));
    ParamSet params{{"c", Rational(1)}, {"w", Rational(6)}};

    // sender: 2/3 (-6 - 1) + 1/3 (-1) = -5
    CHECK(expected_payoff(spec.game("main"), {"send", "listen"}, PartyId::A, params) ==
          Rational(-5));
    CHECK(expected_payoff(spec.game("main"), {"send", "listen"}, PartyId::B, params) ==
          Rational(4));
    // skipping yields 0 > -5, so honest sending is not an equilibrium
    auto verdict = is_nash(spec.game("main"), {"send", "listen"}, params);
    REQUIRE_FALSE(verdict.holds);
    CHECK(verdict.witness->action == "skip");

    write_file("/tmp/protogame_lossy.gamespec", kLossyChannelDoc);
    auto result = run({"verify", "/tmp/protogame_lossy.gamespec", "--samples", "100"});
    CHECK(result.exit_code == 0);  // every claim carries the matching flag
    json report = json::parse(result.output);
    CHECK(report["claims_matched"] == true);
    CHECK(report["target"]["kind"] == "file");
    REQUIRE(report["audits"].size() == 4);

    // the canonical form of a user document is stable too
    std::string canon = export_document(parse(kLossyChannelDoc));
    CHECK(export_document(parse(canon)) == canon);
}

TEST_CASE("chain claims support <= and = separators") {
    ElaboratedSpec spec = elaborate(parse(
        "protocol \"seps\"\nparty A\nparty B\nparam u\nconstraint 0 < u\n"
        "event e \"e\"\nincome A u when e\noutcome { }\noutcome { e }\n"
        "claim chain A : 0 <= u = u | 2 * u expected\n"));
    REQUIRE(spec.claims.size() == 1);
    const auto &chain = std::get<ChainClaim>(spec.claims[0].body);
    REQUIRE(chain.separators.size() == 3);
    CHECK(chain.separators[0] == ChainSep::less_equal);
    CHECK(chain.separators[1] == ChainSep::equal);
    CHECK(chain.separators[2] == ChainSep::unordered);
    CHECK(audit_chain(chain, *spec.model, 5, 100).holds);

    // 0 <= u fails once u may be negative: drop the positivity constraint
    ElaboratedSpec unconstrained = elaborate(parse(
        "protocol \"seps\"\nparty A\nparty B\nparam u\n"
        "event e \"e\"\nincome A u when e\noutcome { }\noutcome { e }\n"
        "claim chain A : 0 <= u expected\n"));
    auto audit = audit_chain(std::get<ChainClaim>(unconstrained.claims[0].body),
                             *unconstrained.model, 5, 200);
    CHECK_FALSE(audit.holds);
    CHECK(audit.chain_counterexample->left_value > audit.chain_counterexample->right_value);
}

TEST_CASE("sampler handles upper-bound-only and negative intervals") {
    std::vector<Param> decls = {{"a", ParamRole::other}, {"b", ParamRole::other}};
    std::vector<Constraint> cons = {
        {Expr::var("a"), Relation::less, Expr::lit(Rational(-2))},
        {Expr::var("b"), Relation::less, Expr::var("a")}};
    auto samples = sample_params(cons, decls, 123, 50);
    for (const auto &params : samples) {
        CHECK(params.at("a") < Rational(-2));
        CHECK(params.at("b") < params.at("a"));
    }
}

TEST_CASE("claims without flags default to expected") {
    ElaboratedSpec spec = elaborate(parse(
        "protocol \"flags\"\nparty A\nparty B\nparam u\nconstraint 0 < u\n"
        "event e \"e\"\nincome A u when e\noutcome { }\noutcome { e }\n"
        "claim chain A : 0 < u\n"));
    CHECK(spec.claims[0].expected_to_hold);
}
