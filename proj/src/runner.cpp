#include "protogame/runner.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "protogame/auditor.hpp"
#include "protogame/errors.hpp"

namespace protogame {

using nlohmann::ordered_json;

namespace {

constexpr const char *kToolName = "protogame";
constexpr const char *kToolVersion = "0.1.0";

// ---------------------------------------------------------------------------
// target resolution
// ---------------------------------------------------------------------------

struct TargetView {
    std::string kind;  // "catalog" | "file"
    std::string name;
    std::shared_ptr<const PayoffModel> model;
    const std::vector<StrategicGame> *games = nullptr;
    const std::vector<ProtocolClaim> *claims = nullptr;
    const ProtocolEntry *entry = nullptr;  // catalog targets only
    ElaboratedSpec owned;                  // file targets own their spec
};

bool is_catalog_name(const std::string &target) {
    for (const auto &name : list_protocols()) {
        if (name == target) return true;
    }
    for (const auto &[alias, canonical] : catalog_aliases()) {
        if (alias == target) return true;
    }
    return false;
}

TargetView resolve_target(const std::string &target) {
    TargetView view;
    if (is_catalog_name(target)) {
        const ProtocolEntry &entry = get_protocol(target);
        view.kind = "catalog";
        view.name = entry.name;
        view.model = entry.model;
        view.games = &entry.games;
        view.claims = &entry.claims;
        view.entry = &entry;
        return view;
    }
    bool looks_like_file = target.find('/') != std::string::npos ||
                           (target.size() > 9 && target.substr(target.size() - 9) == ".gamespec");
    std::ifstream in(target);
    if (!in.good()) {
        if (looks_like_file)
            throw UnknownProtocolError("cannot read spec file '" + target + "'");
        get_protocol(target);  // throws UnknownProtocolError listing valid names
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    view.owned = elaborate(parse(buffer.str()));
    view.kind = "file";
    view.name = view.owned.name;
    view.model = view.owned.model;
    view.games = &view.owned.games;
    view.claims = &view.owned.claims;
    return view;
}

// ---------------------------------------------------------------------------
// JSON pieces
// ---------------------------------------------------------------------------

ordered_json json_params(const ParamSet &params) {
    ordered_json out = ordered_json::object();
    for (const auto &[name, value] : params) out[name] = value.to_string();
    return out;
}

ordered_json json_outcome(const OutcomeAssignment &q) {
    ordered_json out = ordered_json::array();
    for (const auto &atom : q.atoms) out.push_back(atom);
    return out;
}

ordered_json json_profile(const ActionProfile &profile) {
    return ordered_json::array({profile.first, profile.second});
}

ordered_json json_sampler_bounds(const SamplerBounds &bounds) {
    return ordered_json{{"jitter_denominator", bounds.jitter_denominator},
                        {"span", bounds.span},
                        {"box", bounds.box},
                        {"budget", bounds.budget}};
}

ordered_json json_classification(const Classification &c) {
    ordered_json out;
    out["zero_sum"] = c.zero_sum;
    out["non_positive_sum"] = c.non_positive_sum;
    out["positive_sum_witness"] =
        c.positive_sum_witness ? json_outcome(*c.positive_sum_witness) : ordered_json(nullptr);
    out["closed"] = c.closed;
    if (c.closedness_violation) {
        out["closedness_violation"] = ordered_json{
            {"outcome", json_outcome(c.closedness_violation->first)},
            {"gaining_party", party_name(c.closedness_violation->second)}};
    } else {
        out["closedness_violation"] = nullptr;
    }
    return out;
}

ordered_json json_spectra(const PayoffModel &model, const ParamSet &params) {
    ordered_json spectra = ordered_json::array();
    for (PartyId party : {PartyId::A, PartyId::B}) {
        ordered_json entries = ordered_json::array();
        for (const auto &entry : payoff_spectrum(model, party, params)) {
            entries.push_back(ordered_json{{"outcome", json_outcome(entry.outcome)},
                                           {"expr", payoff_expr(model, party, entry.outcome).to_string()},
                                           {"value", entry.value.to_string()}});
        }
        spectra.push_back(ordered_json{{"party", party_name(party)}, {"entries", entries}});
    }
    return spectra;
}

ordered_json json_equilibria(const std::vector<StrategicGame> &games, const std::string &variant,
                             const ParamSet &params) {
    ordered_json out = ordered_json::array();
    for (const auto &game : games) {
        if (variant != "all" && game.name != variant) continue;
        ordered_json profiles = ordered_json::array();
        for (const auto &profile : equilibria(game, params)) profiles.push_back(json_profile(profile));
        out.push_back(ordered_json{{"game", game.name},
                                   {"variant", variant_text(game.variant)},
                                   {"profiles", profiles},
                                   {"honest_profile", json_profile(game.honest_profile())},
                                   {"honest_is_nash", is_nash(game, game.honest_profile(), params).holds}});
    }
    return out;
}

ordered_json json_chain_counterexample(const AuditReport::ChainCounterexample &cx) {
    return ordered_json{{"params", json_params(cx.params)},
                        {"separator_index", cx.separator_index},
                        {"separator", chain_sep_text(cx.separator)},
                        {"left", cx.left_text},
                        {"right", cx.right_text},
                        {"left_value", cx.left_value.to_string()},
                        {"right_value", cx.right_value.to_string()}};
}

ordered_json json_fairness_counterexample(const AuditReport::FairnessCounterexample &cx) {
    return ordered_json{{"params", json_params(cx.params)},
                        {"profile", json_profile(cx.profile)},
                        {"branch", json_outcome(cx.branch)},
                        {"antecedent_value", cx.antecedent_value.to_string()},
                        {"consequent_value", cx.consequent_value.to_string()},
                        {"honest_income", cx.honest_income.to_string()}};
}

ordered_json json_nash_mismatch(const AuditReport::NashMismatch &cx) {
    ordered_json out{{"params", json_params(cx.params)}, {"observed_nash", cx.observed_nash}};
    if (cx.witness) {
        out["witness"] = ordered_json{{"party", party_name(cx.witness->party)},
                                      {"action", cx.witness->action},
                                      {"payoff_before", cx.witness->payoff_before.to_string()},
                                      {"payoff_after", cx.witness->payoff_after.to_string()}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

const char *order_text(PairwiseOrderReport::Order order) {
    switch (order) {
        case PairwiseOrderReport::Order::always_less: return "always_less";
        case PairwiseOrderReport::Order::always_greater: return "always_greater";
        case PairwiseOrderReport::Order::always_equal: return "always_equal";
        case PairwiseOrderReport::Order::varies: return "varies";
    }
    return "?";
}

ordered_json json_pairwise(const PairwiseOrderReport &report) {
    ordered_json entries = ordered_json::array();
    for (const auto &text : report.entries) entries.push_back(text);
    ordered_json cells = ordered_json::array();
    for (const auto &cell : report.cells) {
        ordered_json c{{"row", cell.row}, {"col", cell.col}, {"order", order_text(cell.order)}};
        c["witness_low"] = cell.witness_low ? json_params(*cell.witness_low) : ordered_json(nullptr);
        c["witness_high"] = cell.witness_high ? json_params(*cell.witness_high) : ordered_json(nullptr);
        c["witness_equal"] =
            cell.witness_equal ? json_params(*cell.witness_equal) : ordered_json(nullptr);
        cells.push_back(std::move(c));
    }
    ordered_json out{{"entries", entries}, {"samples", report.samples_used}, {"cells", cells}};
    auto order = report.consistent_total_order();
    if (order) {
        ordered_json sorted = ordered_json::array();
        for (size_t index : *order) sorted.push_back(report.entries[index]);
        out["total_order"] = sorted;
    } else {
        out["total_order"] = nullptr;
    }
    return out;
}

ordered_json json_preferences(const PreferenceReport &report) {
    ordered_json rows = ordered_json::array();
    for (const auto &row : report.rows) {
        ordered_json r{{"party", party_name(row.party)},
                       {"lower", row.lower},
                       {"higher", row.higher},
                       {"numeric", row.has_quantities}};
        if (row.has_quantities) {
            r["confirmed"] = row.confirmed;
            r["lower_value"] = row.lower_value;
            r["higher_value"] = row.higher_value;
        } else {
            r["confirmed"] = nullptr;
            r["lower_value"] = nullptr;
            r["higher_value"] = nullptr;
        }
        rows.push_back(std::move(r));
    }
    return ordered_json{{"all_confirmed", report.all_confirmed}, {"rows", rows}};
}

ordered_json audit_claims(const TargetView &view, const RunConfig &config, bool &all_matched) {
    ordered_json audits = ordered_json::array();
    for (const auto &claim : *view.claims) {
        ordered_json row;
        row["id"] = claim.id;
        row["kind"] = claim.kind();
        if (const auto *chain = std::get_if<ChainClaim>(&claim.body)) {
            AuditReport report = audit_chain(*chain, *view.model, config.seed, config.samples);
            bool matched = report.holds == claim.expected_to_hold;
            all_matched = all_matched && matched;
            row["party"] = party_name(chain->party);
            row["expected"] = claim.expected_to_hold ? "holds" : "refuted";
            row["observed"] = report.holds ? "holds" : "refuted";
            row["matched"] = matched;
            row["samples_used"] = report.samples_used;
            row["notes"] = report.notes;
            row["counterexample"] = report.chain_counterexample
                                        ? json_chain_counterexample(*report.chain_counterexample)
                                        : ordered_json(nullptr);
            // an expected-refuted chain is paired with a corrected-order search
            row["corrected_order"] =
                claim.expected_to_hold
                    ? ordered_json(nullptr)
                    : json_pairwise(corrected_chain_search(chain->entries, *view.model, config.seed,
                                                           config.samples));
        } else if (const auto *fairness = std::get_if<FairnessClaim>(&claim.body)) {
            const StrategicGame *game = nullptr;
            for (const auto &g : *view.games) {
                if (g.name == fairness->game) game = &g;
            }
            if (game == nullptr) throw ModelError(view.name + ": no game '" + fairness->game + "'");
            AuditReport report =
                audit_fairness(*game, fairness->implication, config.seed, config.samples);
            bool matched = report.holds == claim.expected_to_hold;
            all_matched = all_matched && matched;
            row["game"] = fairness->game;
            row["honest_party"] = party_name(fairness->implication.honest_party);
            row["antecedent"] = fairness->implication.antecedent_amount.to_string();
            row["consequent"] = fairness->implication.consequent_amount.to_string();
            row["expected"] = claim.expected_to_hold ? "holds" : "refuted";
            row["observed"] = report.holds ? "holds" : "refuted";
            row["matched"] = matched;
            row["samples_used"] = report.samples_used;
            row["notes"] = report.notes;
            row["counterexample"] =
                report.fairness_counterexample
                    ? json_fairness_counterexample(*report.fairness_counterexample)
                    : ordered_json(nullptr);
        } else {
            const auto &nash = std::get<NashClaim>(claim.body);
            const StrategicGame *game = nullptr;
            for (const auto &g : *view.games) {
                if (g.name == nash.game) game = &g;
            }
            if (game == nullptr) throw ModelError(view.name + ": no game '" + nash.game + "'");
            AuditReport report = audit_equilibrium_claim(*game, nash.profile, claim.expected_to_hold,
                                                         config.seed, config.samples);
            bool matched = report.holds;
            all_matched = all_matched && matched;
            row["game"] = nash.game;
            row["profile"] = json_profile(nash.profile);
            row["expected"] = claim.expected_to_hold ? "equilibrium" : "not_equilibrium";
            row["observed"] = matched ? row["expected"]
                              : report.nash_mismatch->observed_nash ? ordered_json("equilibrium")
                                                                    : ordered_json("not_equilibrium");
            row["matched"] = matched;
            row["samples_used"] = report.samples_used;
            row["notes"] = report.notes;
            row["counterexample"] = report.nash_mismatch
                                        ? json_nash_mismatch(*report.nash_mismatch)
                                        : ordered_json(nullptr);
        }
        audits.push_back(std::move(row));
    }
    return audits;
}

ParamSet instance_params(const TargetView &view, const RunConfig &config) {
    if (config.params_file) {
        std::ifstream in(*config.params_file);
        if (!in.good()) throw UsageError("cannot read params file '" + *config.params_file + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        ParamSet params = load_params_file(buffer.str());
        for (const auto &param : view.model->params) {
            if (!params.count(param.name))
                throw ConstraintViolationError("params file does not bind '" + param.name + "'");
        }
        for (const auto &[name, value] : params) {
            if (!view.model->has_param(name))
                throw ConstraintViolationError("params file binds undeclared parameter '" + name +
                                               "'");
        }
        auto verdict = check_constraints(params, view.model->constraints);
        if (!verdict.all_satisfied)
            throw ConstraintViolationError("explicit parameters violate " +
                                           verdict.violated->to_string());
        return params;
    }
    return sample_params(view.model->constraints, view.model->params, config.seed, 1).front();
}

} // namespace

// ---------------------------------------------------------------------------
// public surface
// ---------------------------------------------------------------------------

ParamSet load_params_file(const std::string &text) {
    ParamSet params;
    int line_number = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        ++line_number;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_number, 1, "expected 'name = value'", line);
        auto trim = [](std::string s) {
            size_t from = s.find_first_not_of(" \t\r");
            size_t to = s.find_last_not_of(" \t\r");
            return from == std::string::npos ? std::string() : s.substr(from, to - from + 1);
        };
        std::string name = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (name.empty() || value.empty())
            throw ParseError(line_number, 1, "expected 'name = value'", line);
        Rational parsed;
        try {
            parsed = Rational::from_string(value);
        } catch (const Error &) {
            throw ParseError(line_number, static_cast<int>(eq + 2), "malformed rational", value);
        }
        if (!params.emplace(name, std::move(parsed)).second)
            throw ParseError(line_number, 1, "duplicate binding", name);
    }
    return params;
}

RunConfig parse_args(const std::vector<std::string> &args) {
    if (args.empty()) throw UsageError("usage: protogame <list|analyze|verify|export> [target] [flags]");
    RunConfig config;
    config.command = args[0];
    if (config.command != "list" && config.command != "analyze" && config.command != "verify" &&
        config.command != "export")
        throw UsageError("unknown command '" + config.command + "'");
    std::vector<std::string> positional;
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string &arg = args[i];
        auto next = [&]() -> const std::string & {
            if (i + 1 >= args.size()) throw UsageError("flag " + arg + " needs a value");
            return args[++i];
        };
        if (arg == "--seed") {
            try {
                config.seed = std::stoll(next());
            } catch (const std::exception &) {
                throw UsageError("--seed expects an integer");
            }
        } else if (arg == "--samples") {
            try {
                config.samples = std::stoll(next());
            } catch (const std::exception &) {
                throw UsageError("--samples expects an integer");
            }
        } else if (arg == "--params") {
            config.params_file = next();
        } else if (arg == "--format") {
            config.format = next();
            if (config.format != "json" && config.format != "md")
                throw UsageError("--format expects json or md");
        } else if (arg == "-o") {
            config.output_path = next();
        } else if (arg == "--variant") {
            config.variant = next();
            if (config.variant == "with-abort") config.variant = "with_abort";
        } else if (!arg.empty() && arg[0] == '-') {
            throw UsageError("unknown flag '" + arg + "'");
        } else {
            positional.push_back(arg);
        }
    }
    if (config.command == "list") {
        if (!positional.empty()) throw UsageError("list takes no target");
    } else {
        if (positional.size() != 1)
            throw UsageError(config.command + " needs exactly one target");
        config.target = positional[0];
    }
    if (config.samples < 1) throw UsageError("--samples must be >= 1");
    return config;
}

ordered_json list_report() {
    ordered_json entries = ordered_json::array();
    for (const auto &entry : catalog()) {
        ordered_json aliases = ordered_json::array();
        for (const auto &[alias, canonical] : catalog_aliases()) {
            if (canonical == entry.name) aliases.push_back(alias);
        }
        ordered_json notes = ordered_json::array();
        for (const auto &note : entry.notes) notes.push_back(note);
        entries.push_back(ordered_json{{"name", entry.name},
                                       {"aliases", aliases},
                                       {"description", entry.description},
                                       {"notes", notes},
                                       {"events", entry.model->atoms.size()},
                                       {"outcomes", entry.model->outcomes.size()},
                                       {"games", entry.games.size()},
                                       {"claims", entry.claims.size()}});
    }
    return entries;
}

ordered_json build_report(const RunConfig &config) {
    TargetView view = resolve_target(config.target);
    if (config.variant != "all") {
        bool found = false;
        for (const auto &game : *view.games) found = found || game.name == config.variant;
        if (!found)
            throw UsageError("target '" + view.name + "' has no variant '" + config.variant + "'");
    }
    ParamSet params = instance_params(view, config);

    ordered_json report;
    report["tool"] = kToolName;
    report["version"] = kToolVersion;
    report["command"] = config.command;
    report["target"] = ordered_json{{"name", view.name}, {"kind", view.kind}};
    report["config"] = ordered_json{{"seed", config.seed},
                                    {"samples", config.samples},
                                    {"variant", config.variant},
                                    {"params_file", config.params_file
                                                        ? ordered_json(*config.params_file)
                                                        : ordered_json(nullptr)},
                                    {"sampler_bounds", json_sampler_bounds(SamplerBounds{})}};
    report["params"] = json_params(params);
    if (view.games->empty()) {
        // classification is defined on the model; reuse a bare single-action game
        StrategicGame shim;
        shim.name = "shim";
        shim.model = view.model;
        shim.actions_a = {PartyId::A, {"idle"}, "idle"};
        shim.actions_b = {PartyId::B, {"idle"}, "idle"};
        shim.outcome_map.emplace(ActionProfile{"idle", "idle"},
                                 OutcomeDistribution::sure(OutcomeAssignment{}));
        report["classification"] = json_classification(classify(shim, params));
    } else {
        report["classification"] = json_classification(classify(view.games->front(), params));
    }
    report["spectra"] = json_spectra(*view.model, params);
    report["equilibria"] = json_equilibria(*view.games, config.variant, params);

    if (config.command == "verify") {
        bool all_matched = true;
        report["audits"] = audit_claims(view, config, all_matched);
        report["claims_matched"] = all_matched;
        report["preference_check"] =
            view.entry ? json_preferences(audit_preferences(*view.entry, params))
                       : ordered_json(nullptr);
    } else {
        report["audits"] = ordered_json::array();
        report["claims_matched"] = nullptr;
        report["preference_check"] = nullptr;
    }
    report["timing_ms"] = 0;
    return report;
}

namespace {

std::string md_table_row(std::initializer_list<std::string> cells) {
    std::string out = "|";
    for (const auto &cell : cells) out += " " + cell + " |";
    out += "\n";
    return out;
}

std::string outcome_md(const ordered_json &atoms) {
    std::string out = "{";
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0) out += ", ";
        out += atoms[i].get<std::string>();
    }
    return out + "}";
}

} // namespace

std::string render_markdown(const ordered_json &report) {
    std::string out;
    out += "# " + report["tool"].get<std::string>() + " " +
           report["command"].get<std::string>() + " report\n\n";
    out += "- target: " + report["target"]["name"].get<std::string>() + " (" +
           report["target"]["kind"].get<std::string>() + ")\n";
    out += "- seed: " + report["config"]["seed"].dump() +
           ", samples: " + report["config"]["samples"].dump() + "\n";
    out += "- params:";
    for (auto &[name, value] : report["params"].items())
        out += " " + name + "=" + value.get<std::string>();
    out += "\n\n## Classification\n\n";
    const auto &cls = report["classification"];
    out += "- zero_sum: " + cls["zero_sum"].dump() + "\n";
    out += "- non_positive_sum: " + cls["non_positive_sum"].dump();
    if (!cls["positive_sum_witness"].is_null())
        out += " (witness " + outcome_md(cls["positive_sum_witness"]) + ")";
    out += "\n- closed: " + cls["closed"].dump() + "\n";
    out += "\n## Payoff spectra\n";
    for (const auto &spectrum : report["spectra"]) {
        out += "\n### Party " + spectrum["party"].get<std::string>() + "\n\n";
        out += md_table_row({"outcome", "payoff", "value"});
        out += md_table_row({"---", "---", "---"});
        for (const auto &entry : spectrum["entries"]) {
            out += md_table_row({outcome_md(entry["outcome"]), entry["expr"].get<std::string>(),
                                 entry["value"].get<std::string>()});
        }
    }
    out += "\n## Equilibria\n\n";
    for (const auto &game : report["equilibria"]) {
        out += "- " + game["game"].get<std::string>() + ": ";
        const auto &profiles = game["profiles"];
        for (size_t i = 0; i < profiles.size(); ++i) {
            if (i > 0) out += ", ";
            out += "(" + profiles[i][0].get<std::string>() + ", " +
                   profiles[i][1].get<std::string>() + ")";
        }
        if (profiles.empty()) out += "none";
        out += game["honest_is_nash"].get<bool>() ? " [honest profile is Nash]\n"
                                                  : " [honest profile is not Nash]\n";
    }
    if (!report["audits"].empty()) {
        out += "\n## Claim audits\n\n";
        out += md_table_row({"id", "kind", "expected", "observed", "matched", "samples", "notes"});
        out += md_table_row({"---", "---", "---", "---", "---", "---", "---"});
        for (const auto &audit : report["audits"]) {
            out += md_table_row({audit["id"].get<std::string>(), audit["kind"].get<std::string>(),
                                 audit["expected"].get<std::string>(),
                                 audit["observed"].get<std::string>(), audit["matched"].dump(),
                                 audit["samples_used"].dump(), audit["notes"].get<std::string>()});
        }
        out += "\nall claims matched: " + report["claims_matched"].dump() + "\n";
    }
    if (!report["preference_check"].is_null()) {
        out += "\n## Preference ranking\n\n";
        for (const auto &row : report["preference_check"]["rows"]) {
            out += "- party " + row["party"].get<std::string>() + ": " +
                   row["lower"].get<std::string>() + " <= " + row["higher"].get<std::string>();
            if (row["numeric"].get<bool>())
                out += " (" + row["lower_value"].get<std::string>() + " <= " +
                       row["higher_value"].get<std::string>() + ")";
            out += "\n";
        }
    }
    return out;
}

std::string render_list_markdown(const ordered_json &entries) {
    std::string out = "# protogame catalog\n\n";
    out += md_table_row({"name", "aliases", "events", "outcomes", "games", "claims", "description"});
    out += md_table_row({"---", "---", "---", "---", "---", "---", "---"});
    for (const auto &entry : entries) {
        std::string aliases;
        for (size_t i = 0; i < entry["aliases"].size(); ++i) {
            if (i > 0) aliases += ", ";
            aliases += entry["aliases"][i].get<std::string>();
        }
        if (aliases.empty()) aliases = "-";
        out += md_table_row({entry["name"].get<std::string>(), aliases, entry["events"].dump(),
                             entry["outcomes"].dump(), entry["games"].dump(),
                             entry["claims"].dump(), entry["description"].get<std::string>()});
    }
    return out;
}

RunResult run(const std::vector<std::string> &args) {
    RunResult result;
    auto started = std::chrono::steady_clock::now();
    try {
        RunConfig config = parse_args(args);
        if (config.command == "list") {
            ordered_json entries = list_report();
            result.output = config.format == "md" ? render_list_markdown(entries)
                                                  : entries.dump(2) + "\n";
        } else if (config.command == "export") {
            if (!is_catalog_name(config.target))
                throw UnknownProtocolError("export expects a catalog protocol, got '" +
                                           config.target + "'");
            result.output = export_entry(get_protocol(config.target));
        } else {
            ordered_json report = build_report(config);
            if (config.command == "verify" && !report["claims_matched"].get<bool>())
                result.exit_code = 1;
            auto elapsed = std::chrono::steady_clock::now() - started;
            report["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            result.output = config.format == "md" ? render_markdown(report)
                                                  : report.dump(2) + "\n";
        }
        if (config.output_path) {
            std::ofstream out(*config.output_path);
            if (!out.good()) throw UsageError("cannot write to '" + *config.output_path + "'");
            out << result.output;
            result.output.clear();
        }
        return result;
    } catch (const UsageError &e) {
        result.exit_code = 2;
        result.diagnostics = std::string("usage error: ") + e.what() + "\n";
    } catch (const UnknownProtocolError &e) {
        result.exit_code = 3;
        result.diagnostics = std::string("unknown target: ") + e.what() + "\n";
    } catch (const ParseError &e) {
        result.exit_code = 4;
        result.diagnostics = std::string("parse error: ") + e.what() + "\n";
    } catch (const ConstraintViolationError &e) {
        result.exit_code = 5;
        result.diagnostics = std::string("constraint violation: ") + e.what() + "\n";
    } catch (const SamplerBudgetError &e) {
        result.exit_code = 5;
        result.diagnostics = std::string("constraint violation: ") + e.what() + "\n";
    } catch (const std::exception &e) {
        result.exit_code = 70;
        result.diagnostics = std::string("internal error: ") + e.what() + "\n";
    }
    return result;
}

} // namespace protogame
