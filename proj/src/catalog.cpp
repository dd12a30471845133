#include "protogame/catalog.hpp"

#include <algorithm>

#include "protogame/errors.hpp"

namespace protogame {

namespace {

Expr v(const std::string &name) { return Expr::var(name); }
Expr lit(long long n) { return Expr::lit(Rational(n)); }

Constraint lt(Expr a, Expr b) { return {std::move(a), Relation::less, std::move(b)}; }

OutcomeAssignment oc(std::initializer_list<std::string> atoms) {
    OutcomeAssignment q;
    for (const auto &a : atoms) q.atoms.insert(a);
    return q;
}

std::vector<OutcomeAssignment> all_subsets(const std::vector<std::string> &atoms) {
    std::vector<OutcomeAssignment> out;
    out.reserve(1ull << atoms.size());
    for (size_t mask = 0; mask < (1ull << atoms.size()); ++mask) {
        OutcomeAssignment q;
        for (size_t i = 0; i < atoms.size(); ++i) {
            if (mask & (1ull << i)) q.atoms.insert(atoms[i]);
        }
        out.push_back(std::move(q));
    }
    return out;
}

PayoffRule income(PartyId p, Expr amount, std::string trigger) {
    return {p, RuleKind::income, std::move(trigger), std::move(amount)};
}
PayoffRule expense(PartyId p, Expr amount, std::string trigger) {
    return {p, RuleKind::expense, std::move(trigger), std::move(amount)};
}

/// Builds a game whose outcome map defaults every profile to the empty
/// outcome; `overrides` then pin specific profiles.
StrategicGame make_game(std::string name, GameVariant variant,
                        std::shared_ptr<const PayoffModel> model, ActionSet a, ActionSet b,
                        std::map<ActionProfile, OutcomeDistribution> overrides) {
    StrategicGame game;
    game.name = std::move(name);
    game.variant = variant;
    game.model = std::move(model);
    game.actions_a = std::move(a);
    game.actions_b = std::move(b);
    for (const auto &aa : game.actions_a.actions) {
        for (const auto &bb : game.actions_b.actions) {
            ActionProfile profile{aa, bb};
            auto it = overrides.find(profile);
            game.outcome_map.emplace(profile, it != overrides.end()
                                                  ? it->second
                                                  : OutcomeDistribution::sure(oc({})));
        }
    }
    game.validate();
    return game;
}

ProtocolClaim chain(PartyId party, std::vector<Expr> entries, std::vector<ChainSep> seps,
                    std::string source, bool expected_to_hold) {
    ProtocolClaim claim;
    claim.expected_to_hold = expected_to_hold;
    claim.body = ChainClaim{party, std::move(entries), std::move(seps), std::move(source)};
    return claim;
}

ProtocolClaim fairness(std::string game, PartyId honest, PartyId ante_party, Expr ante,
                       PartyId cons_party, Expr cons, bool expected_to_hold) {
    ProtocolClaim claim;
    claim.expected_to_hold = expected_to_hold;
    claim.body = FairnessClaim{std::move(game), FairnessImplication{honest, ante_party, std::move(ante),
                                                                    cons_party, std::move(cons)}};
    return claim;
}

ProtocolClaim nash(std::string game, ActionProfile profile, bool expected_to_hold) {
    ProtocolClaim claim;
    claim.expected_to_hold = expected_to_hold;
    claim.body = NashClaim{std::move(game), std::move(profile)};
    return claim;
}

std::vector<ChainSep> seps_all_less(size_t n) { return std::vector<ChainSep>(n, ChainSep::less); }

ProtocolEntry build_fair_exchange() {
    ProtocolEntry entry;
    entry.name = "fair_exchange";
    entry.description =
        "Two parties exchange secrets; when the guarantees hold, neither can obtain "
        "the other's secret without giving up its own.";

    auto model = std::make_shared<PayoffModel>();
    model->name = "fair_exchange";
    model->params = {{"u_AA", ParamRole::utility_of_own_secret},
                     {"u_AB", ParamRole::utility_of_other_secret},
                     {"u_BB", ParamRole::utility_of_own_secret},
                     {"u_BA", ParamRole::utility_of_other_secret}};
    model->constraints = {lt(lit(0), v("u_AA")), lt(v("u_AA"), v("u_AB")),
                          lt(lit(0), v("u_BB")), lt(v("u_BB"), v("u_BA"))};
    model->atoms = {{"recv_A_MB", "A holds B's secret", PartyId::A},
                    {"recv_B_MA", "B holds A's secret", PartyId::B}};
    model->rules = {income(PartyId::A, v("u_AB"), "recv_A_MB"),
                    expense(PartyId::A, v("u_AA"), "recv_B_MA"),
                    income(PartyId::B, v("u_BA"), "recv_B_MA"),
                    expense(PartyId::B, v("u_BB"), "recv_A_MB")};
    model->outcomes = all_subsets({"recv_A_MB", "recv_B_MA"});
    model->finalize();
    entry.model = model;

    ActionSet acts_a{PartyId::A, {"follow", "withhold"}, "follow"};
    ActionSet acts_b{PartyId::B, {"follow", "withhold"}, "follow"};
    OutcomeAssignment both = oc({"recv_A_MB", "recv_B_MA"});
    entry.games.push_back(make_game(
        "rational", GameVariant::rational, model, acts_a, acts_b,
        {{{"follow", "follow"}, OutcomeDistribution::sure(both)}}));
    entry.games.push_back(make_game(
        "naive", GameVariant::naive, model, acts_a, acts_b,
        {{{"follow", "follow"}, OutcomeDistribution::sure(both)},
         {{"follow", "withhold"}, OutcomeDistribution::sure(oc({"recv_B_MA"}))},
         {{"withhold", "follow"}, OutcomeDistribution::sure(oc({"recv_A_MB"}))}}));

    entry.claims = {
        chain(PartyId::A, {-v("u_AA"), lit(0), v("u_AB") - v("u_AA"), v("u_AB")}, seps_all_less(3),
              "documented payoff chain, party A", true),
        chain(PartyId::B, {-v("u_BB"), lit(0), v("u_BA") - v("u_BB"), v("u_BA")}, seps_all_less(3),
              "documented payoff chain, party B", true),
        fairness("rational", PartyId::A, PartyId::B, v("u_BA"), PartyId::A, v("u_AB"), true),
        fairness("rational", PartyId::B, PartyId::A, v("u_AB"), PartyId::B, v("u_BA"), true),
        fairness("naive", PartyId::A, PartyId::B, v("u_BA"), PartyId::A, v("u_AB"), false),
        fairness("naive", PartyId::B, PartyId::A, v("u_AB"), PartyId::B, v("u_BA"), false),
        nash("rational", {"follow", "follow"}, true),
        nash("naive", {"follow", "follow"}, false),
    };

    entry.preferences.pairs_a = {{"privacy", "correctness"}};
    entry.preferences.pairs_b = {{"privacy", "correctness"}};
    return entry;
}

ProtocolEntry build_s2pc() {
    ProtocolEntry entry;
    entry.name = "s2pc";
    entry.description =
        "Joint computation of a shared output from two secret inputs; inputs must not "
        "leak and output receipt must be mutual.";

    auto model = std::make_shared<PayoffModel>();
    model->name = "s2pc";
    model->params = {{"u_g", ParamRole::utility_of_joint_output},
                     {"k", ParamRole::amplification_factor},
                     {"u_AB", ParamRole::utility_of_other_secret},
                     {"u_AA", ParamRole::utility_of_own_secret},
                     {"u_BA", ParamRole::utility_of_other_secret},
                     {"u_BB", ParamRole::utility_of_own_secret}};
    model->constraints = {lt(lit(0), v("u_g")),          lt(lit(1), v("k")),
                          lt(v("u_g"), v("u_AB")),       lt(v("u_AB"), v("k") * v("u_g")),
                          lt(v("k") * v("u_g"), v("u_AA")), lt(v("u_g"), v("u_BA")),
                          lt(v("u_BA"), v("k") * v("u_g")), lt(v("k") * v("u_g"), v("u_BB"))};
    model->atoms = {{"recv_A_MB", "A holds B's input", PartyId::A},
                    {"recv_A_g", "A holds the joint output", PartyId::A},
                    {"recv_B_MA", "B holds A's input", PartyId::B},
                    {"recv_B_g", "B holds the joint output", PartyId::B}};
    model->rules = {income(PartyId::A, v("u_AB"), "recv_A_MB"),
                    income(PartyId::A, v("k") * v("u_g"), "recv_A_g"),
                    expense(PartyId::A, v("u_AA"), "recv_B_MA"),
                    expense(PartyId::A, v("u_g"), "recv_B_g"),
                    income(PartyId::B, v("u_BA"), "recv_B_MA"),
                    income(PartyId::B, v("k") * v("u_g"), "recv_B_g"),
                    expense(PartyId::B, v("u_BB"), "recv_A_MB"),
                    expense(PartyId::B, v("u_g"), "recv_A_g")};
    model->outcomes = all_subsets({"recv_A_MB", "recv_A_g", "recv_B_MA", "recv_B_g"});
    model->finalize();
    entry.model = model;

    ActionSet acts_a{PartyId::A, {"follow", "abort", "substitute", "grab"}, "follow"};
    ActionSet acts_b{PartyId::B, {"follow", "abort", "substitute", "grab"}, "follow"};
    OutcomeAssignment both_g = oc({"recv_A_g", "recv_B_g"});
    entry.games.push_back(make_game(
        "rational", GameVariant::rational, model, acts_a, acts_b,
        {{{"follow", "follow"}, OutcomeDistribution::sure(both_g)}}));
    entry.games.push_back(make_game(
        "naive", GameVariant::naive, model, acts_a, acts_b,
        {{{"follow", "follow"}, OutcomeDistribution::sure(both_g)},
         {{"abort", "follow"}, OutcomeDistribution::sure(oc({"recv_A_g"}))},
         {{"substitute", "follow"}, OutcomeDistribution::sure(both_g)},
         {{"grab", "follow"}, OutcomeDistribution::sure(oc({"recv_A_MB", "recv_A_g"}))},
         {{"follow", "abort"}, OutcomeDistribution::sure(oc({"recv_B_g"}))},
         {{"follow", "substitute"}, OutcomeDistribution::sure(both_g)},
         {{"follow", "grab"}, OutcomeDistribution::sure(oc({"recv_B_MA", "recv_B_g"}))}}));

    // sixteen-entry chain; the comma groups carry the unordered separator
    auto entries_for = [&](const std::string &u_ij, const std::string &u_ii) {
        Expr u = v("u_g"), k = v("k"), uij = v(u_ij), uii = v(u_ii);
        Expr km1u = (k - lit(1)) * u;
        Expr ku = k * u;
        return std::vector<Expr>{-u - uii,      -uii,          uij - uii - u, km1u - uii,
                                 ku - uii,      -u,            uij - uii,     km1u + uij - uii,
                                 lit(0),        ku + uij - uii, uij - u,      uij,
                                 km1u,          ku,            km1u + uij,    ku + uij};
    };
    const ChainSep L = ChainSep::less, U = ChainSep::unordered;
    std::vector<ChainSep> stated{L, L, L, L, L, U, U, L, U, L, L, U, L, L, L};
    // steps 4, 7 and 9 are not implied by the constraints and fail on
    // witnesses; the implied variant leaves them unordered
    std::vector<ChainSep> implied = stated;
    implied[4] = implied[7] = implied[9] = U;

    entry.claims = {
        chain(PartyId::A, entries_for("u_AB", "u_AA"), stated, "stated sixteen-value order, party A",
              false),
        chain(PartyId::A, entries_for("u_AB", "u_AA"), implied,
              "constraint-implied steps of the sixteen-value order, party A", true),
        chain(PartyId::B, entries_for("u_BA", "u_BB"), stated, "stated sixteen-value order, party B",
              false),
        chain(PartyId::B, entries_for("u_BA", "u_BB"), implied,
              "constraint-implied steps of the sixteen-value order, party B", true),
        fairness("rational", PartyId::A, PartyId::B, v("k") * v("u_g"), PartyId::A,
                 v("k") * v("u_g"), true),
        fairness("rational", PartyId::A, PartyId::B, v("u_BA") + v("k") * v("u_g"), PartyId::A,
                 v("u_AB") + v("k") * v("u_g"), true),
        fairness("rational", PartyId::B, PartyId::A, v("k") * v("u_g"), PartyId::B,
                 v("k") * v("u_g"), true),
        fairness("rational", PartyId::B, PartyId::A, v("u_AB") + v("k") * v("u_g"), PartyId::B,
                 v("u_BA") + v("k") * v("u_g"), true),
        fairness("naive", PartyId::A, PartyId::B, v("k") * v("u_g"), PartyId::A, v("k") * v("u_g"),
                 false),
        fairness("naive", PartyId::A, PartyId::B, v("u_BA") + v("k") * v("u_g"), PartyId::A,
                 v("u_AB") + v("k") * v("u_g"), false),
        fairness("naive", PartyId::B, PartyId::A, v("k") * v("u_g"), PartyId::B, v("k") * v("u_g"),
                 false),
        fairness("naive", PartyId::B, PartyId::A, v("u_AB") + v("k") * v("u_g"), PartyId::B,
                 v("u_BA") + v("k") * v("u_g"), false),
        nash("rational", {"follow", "follow"}, true),
        nash("naive", {"follow", "follow"}, false),
    };

    entry.preferences.pairs_a = {{"exclusiveness", "voyeurism"},
                                 {"voyeurism", "correctness"},
                                 {"correctness", "privacy"}};
    entry.preferences.pairs_b = entry.preferences.pairs_a;
    entry.preferences.quantities_a = {{"exclusiveness", v("u_g")},
                                      {"voyeurism", v("u_AB")},
                                      {"correctness", v("k") * v("u_g")},
                                      {"privacy", v("u_AA")}};
    entry.preferences.quantities_b = {{"exclusiveness", v("u_g")},
                                      {"voyeurism", v("u_BA")},
                                      {"correctness", v("k") * v("u_g")},
                                      {"privacy", v("u_BB")}};
    return entry;
}

ProtocolEntry build_coin_flipping() {
    ProtocolEntry entry;
    entry.name = "coin_flipping";
    entry.description =
        "Joint generation of a shared random sequence; both parties must take part in "
        "the selection and learn the result together.";

    auto model = std::make_shared<PayoffModel>();
    model->name = "coin_flipping";
    model->params = {{"u_A", ParamRole::utility_of_joint_output},
                     {"u_B", ParamRole::utility_of_joint_output},
                     {"k", ParamRole::amplification_factor}};
    model->constraints = {lt(lit(0), v("u_A")), lt(lit(0), v("u_B")), lt(lit(1), v("k"))};
    model->atoms = {{"sel_A", "the sequence is selected by A", PartyId::A},
                    {"sel_B", "the sequence is selected by B", PartyId::B},
                    {"recv_A_M", "A holds the sequence", PartyId::A},
                    {"recv_B_M", "B holds the sequence", PartyId::B}};
    model->rules = {income(PartyId::A, v("u_A"), "sel_A"),
                    income(PartyId::A, v("k") * v("u_A"), "recv_A_M"),
                    expense(PartyId::A, v("k") * v("u_A"), "sel_B"),
                    expense(PartyId::A, v("u_A"), "recv_B_M"),
                    income(PartyId::B, v("u_B"), "sel_B"),
                    income(PartyId::B, v("k") * v("u_B"), "recv_B_M"),
                    expense(PartyId::B, v("k") * v("u_B"), "sel_A"),
                    expense(PartyId::B, v("u_B"), "recv_A_M")};
    OutcomeAssignment joint = oc({"sel_A", "sel_B", "recv_A_M", "recv_B_M"});
    model->outcomes = {oc({}),        oc({"sel_A"}),    oc({"sel_B"}),
                       oc({"recv_A_M"}), oc({"recv_B_M"}), joint};
    model->finalize();
    entry.model = model;

    ActionSet acts_a{PartyId::A, {"follow", "bias"}, "follow"};
    ActionSet acts_b{PartyId::B, {"follow", "bias"}, "follow"};
    entry.games.push_back(make_game(
        "rational", GameVariant::rational, model, acts_a, acts_b,
        {{{"follow", "follow"}, OutcomeDistribution::sure(joint)}}));
    entry.games.push_back(make_game(
        "naive", GameVariant::naive, model, acts_a, acts_b,
        {{{"follow", "follow"}, OutcomeDistribution::sure(joint)},
         {{"bias", "follow"}, OutcomeDistribution::sure(oc({"recv_A_M"}))},
         {{"follow", "bias"}, OutcomeDistribution::sure(oc({"recv_B_M"}))}}));

    entry.claims = {
        chain(PartyId::A, {(-v("k")) * v("u_A"), -v("u_A"), lit(0), v("u_A"), v("k") * v("u_A")},
              seps_all_less(4), "documented payoff chain, party A", true),
        chain(PartyId::B, {(-v("k")) * v("u_B"), -v("u_B"), lit(0), v("u_B"), v("k") * v("u_B")},
              seps_all_less(4), "documented payoff chain, party B", true),
        fairness("rational", PartyId::A, PartyId::B, v("k") * v("u_B"), PartyId::A,
                 v("k") * v("u_A"), true),
        fairness("rational", PartyId::B, PartyId::A, v("k") * v("u_A"), PartyId::B,
                 v("k") * v("u_B"), true),
        fairness("naive", PartyId::A, PartyId::B, v("k") * v("u_B"), PartyId::A, v("k") * v("u_A"),
                 false),
        fairness("naive", PartyId::B, PartyId::A, v("k") * v("u_A"), PartyId::B, v("k") * v("u_B"),
                 false),
        nash("rational", {"follow", "follow"}, true),
        nash("naive", {"follow", "follow"}, false),
    };

    entry.preferences.pairs_a = {{"exclusiveness", "correctness"},
                                 {"exclusiveness", "voyeurism"},
                                 {"privacy", "correctness"},
                                 {"privacy", "voyeurism"}};
    entry.preferences.pairs_b = entry.preferences.pairs_a;
    return entry;
}

ProtocolEntry build_oblivious_transfer() {
    ProtocolEntry entry;
    entry.name = "oblivious_transfer";
    entry.description =
        "A transfers a secret that reaches B with probability one half; A must not "
        "learn whether it arrived.";
    entry.notes = {"participation is assumed in the rational variant; the with_abort "
                   "variant drops that assumption"};

    auto model = std::make_shared<PayoffModel>();
    model->name = "oblivious_transfer";
    model->params = {{"u_A", ParamRole::utility_of_own_secret},
                     {"u_B", ParamRole::utility_of_other_secret},
                     {"k", ParamRole::amplification_factor}};
    model->constraints = {lt(lit(0), v("u_A")), lt(lit(0), v("u_B")), lt(lit(1), v("k"))};
    model->atoms = {{"recv_B_M", "B holds the secret", PartyId::B},
                    {"A_knows", "A knows whether the secret arrived", PartyId::A}};
    model->rules = {expense(PartyId::A, v("u_A"), "recv_B_M"),
                    income(PartyId::B, v("u_B"), "recv_B_M"),
                    income(PartyId::A, v("k") * v("u_A"), "A_knows"),
                    expense(PartyId::B, (v("k") + lit(1)) * v("u_B"), "A_knows")};
    model->outcomes = all_subsets({"recv_B_M", "A_knows"});
    model->finalize();
    entry.model = model;

    OutcomeDistribution half_transfer{
        {{oc({}), Rational(1, 2)}, {oc({"recv_B_M"}), Rational(1, 2)}}};
    ActionSet acts_a{PartyId::A, {"follow", "probe"}, "follow"};
    ActionSet acts_b{PartyId::B, {"follow", "extract"}, "follow"};
    entry.games.push_back(make_game(
        "rational", GameVariant::rational, model, acts_a, acts_b,
        {{{"follow", "follow"}, half_transfer}, {{"probe", "follow"}, half_transfer}}));
    ActionSet acts_a_abort{PartyId::A, {"follow", "probe", "abort"}, "follow"};
    entry.games.push_back(make_game(
        "with_abort", GameVariant::custom, model, acts_a_abort, acts_b,
        {{{"follow", "follow"}, half_transfer}, {{"probe", "follow"}, half_transfer}}));

    entry.claims = {
        chain(PartyId::B,
              {((-v("k")) - lit(1)) * v("u_B"), (-v("k")) * v("u_B"), lit(0), v("u_B")},
              seps_all_less(3), "documented payoff chain, party B", true),
        chain(PartyId::A, {-v("u_A"), (v("k") - lit(1)) * v("u_A"), lit(0), v("k") * v("u_A")},
              seps_all_less(3), "stated payoff chain, party A (fails; see corrected order)",
              false),
        fairness("rational", PartyId::B, PartyId::A, v("k") * v("u_A"), PartyId::B, v("u_B"), true),
        nash("rational", {"follow", "follow"}, true),
        nash("with_abort", {"follow", "follow"}, false),
    };

    entry.preferences.pairs_a = {{"exclusiveness", "voyeurism"}};
    entry.preferences.pairs_b = {{"correctness", "privacy"}};
    return entry;
}

ProtocolEntry build_bit_commitment() {
    ProtocolEntry entry;
    entry.name = "bit_commitment";
    entry.description =
        "A commits to a value that B cannot read before opening and A cannot change "
        "after committing.";

    auto model = std::make_shared<PayoffModel>();
    model->name = "bit_commitment";
    model->params = {{"u_A", ParamRole::utility_of_own_secret},
                     {"u_B", ParamRole::utility_of_other_secret},
                     {"k", ParamRole::amplification_factor}};
    model->constraints = {lt(lit(0), v("u_A")), lt(lit(0), v("u_B")), lt(lit(1), v("k"))};
    model->atoms = {{"recv_B_M_early", "B holds the committed value before opening", PartyId::B},
                    {"A_modifies", "A changes the committed value", PartyId::A}};
    model->rules = {expense(PartyId::A, v("k") * v("u_A"), "recv_B_M_early"),
                    income(PartyId::B, v("u_B"), "recv_B_M_early"),
                    income(PartyId::A, v("u_A"), "A_modifies"),
                    expense(PartyId::B, v("k") * v("u_B"), "A_modifies")};
    model->outcomes = all_subsets({"recv_B_M_early", "A_modifies"});
    model->finalize();
    entry.model = model;

    ActionSet acts_a{PartyId::A, {"follow", "modify"}, "follow"};
    ActionSet acts_b{PartyId::B, {"follow", "open_early"}, "follow"};
    entry.games.push_back(
        make_game("rational", GameVariant::rational, model, acts_a, acts_b, {}));
    entry.games.push_back(make_game(
        "naive", GameVariant::naive, model, acts_a, acts_b,
        {{{"modify", "follow"}, OutcomeDistribution::sure(oc({"A_modifies"}))},
         {{"follow", "open_early"}, OutcomeDistribution::sure(oc({"recv_B_M_early"}))},
         {{"modify", "open_early"},
          OutcomeDistribution::sure(oc({"recv_B_M_early", "A_modifies"}))}}));

    entry.claims = {
        nash("rational", {"follow", "follow"}, true),
        nash("naive", {"follow", "follow"}, false),
    };

    entry.preferences.pairs_a = {{"exclusiveness", "privacy"}};
    entry.preferences.pairs_b = {{"voyeurism", "correctness"}};
    return entry;
}

ProtocolEntry build_zero_knowledge() {
    ProtocolEntry entry;
    entry.name = "zero_knowledge";
    entry.description =
        "A convinces B of holding a secret without revealing it; a prover without the "
        "secret must not convince.";
    entry.notes = {"the dual-fraud outcome extends the documented three-value payoff table"};

    auto model = std::make_shared<PayoffModel>();
    model->name = "zero_knowledge";
    model->params = {{"u_A", ParamRole::utility_of_own_secret},
                     {"u_B", ParamRole::utility_of_other_secret},
                     {"k", ParamRole::amplification_factor}};
    model->constraints = {lt(lit(0), v("u_A")), lt(lit(0), v("u_B")), lt(lit(1), v("k"))};
    model->atoms = {{"recv_B_M", "B holds the secret", PartyId::B},
                    {"A_no_knowledge", "A completes the proof without holding the secret",
                     PartyId::A}};
    model->rules = {expense(PartyId::A, v("k") * v("u_A"), "recv_B_M"),
                    income(PartyId::B, v("u_B"), "recv_B_M"),
                    income(PartyId::A, v("u_A"), "A_no_knowledge"),
                    expense(PartyId::B, v("k") * v("u_B"), "A_no_knowledge")};
    model->outcomes = all_subsets({"recv_B_M", "A_no_knowledge"});
    model->finalize();
    entry.model = model;

    ActionSet acts_a{PartyId::A, {"follow", "fake"}, "follow"};
    ActionSet acts_b{PartyId::B, {"follow", "extract"}, "follow"};
    entry.games.push_back(
        make_game("rational", GameVariant::rational, model, acts_a, acts_b, {}));
    entry.games.push_back(make_game(
        "naive", GameVariant::naive, model, acts_a, acts_b,
        {{{"fake", "follow"}, OutcomeDistribution::sure(oc({"A_no_knowledge"}))},
         {{"follow", "extract"}, OutcomeDistribution::sure(oc({"recv_B_M"}))},
         {{"fake", "extract"},
          OutcomeDistribution::sure(oc({"recv_B_M", "A_no_knowledge"}))}}));

    entry.claims = {
        nash("rational", {"follow", "follow"}, true),
        nash("naive", {"follow", "follow"}, false),
    };

    entry.preferences.pairs_a = {{"exclusiveness", "privacy"}};
    entry.preferences.pairs_b = {{"voyeurism", "correctness"}};
    return entry;
}

std::vector<ProtocolEntry> build_catalog() {
    std::vector<ProtocolEntry> entries;
    entries.push_back(build_fair_exchange());
    entries.push_back(build_s2pc());
    entries.push_back(build_coin_flipping());
    entries.push_back(build_oblivious_transfer());
    entries.push_back(build_bit_commitment());
    entries.push_back(build_zero_knowledge());
    for (auto &entry : entries) assign_claim_ids(entry.claims);
    return entries;
}

} // namespace

const StrategicGame &ProtocolEntry::game(const std::string &variant_name) const {
    for (const auto &g : games) {
        if (g.name == variant_name) return g;
    }
    throw ModelError(name + ": no game variant '" + variant_name + "'");
}

bool ProtocolEntry::has_game(const std::string &variant_name) const {
    return std::any_of(games.begin(), games.end(),
                       [&](const StrategicGame &g) { return g.name == variant_name; });
}

const std::vector<ProtocolEntry> &catalog() {
    static const std::vector<ProtocolEntry> entries = build_catalog();
    return entries;
}

const std::vector<std::pair<std::string, std::string>> &catalog_aliases() {
    static const std::vector<std::pair<std::string, std::string>> aliases = {
        {"contract_signing", "fair_exchange"},
        {"certified_mail", "fair_exchange"},
    };
    return aliases;
}

const ProtocolEntry &get_protocol(const std::string &name_or_alias) {
    std::string name = name_or_alias;
    for (const auto &[alias, canonical] : catalog_aliases()) {
        if (alias == name_or_alias) name = canonical;
    }
    for (const auto &entry : catalog()) {
        if (entry.name == name) return entry;
    }
    std::string valid;
    for (const auto &entry : catalog()) valid += (valid.empty() ? "" : ", ") + entry.name;
    for (const auto &[alias, canonical] : catalog_aliases()) valid += ", " + alias;
    throw UnknownProtocolError("unknown protocol '" + name_or_alias + "' (valid: " + valid + ")");
}

std::vector<std::string> list_protocols() {
    std::vector<std::string> names;
    for (const auto &entry : catalog()) names.push_back(entry.name);
    return names;
}

} // namespace protogame
