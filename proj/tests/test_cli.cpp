#include <fstream>
#include <sstream>

#include "doctest.h"

#include "protogame/errors.hpp"
#include "protogame/runner.hpp"

#include "schema_validator.hpp"

using namespace protogame;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json strip_timing(const std::string &text) {
    json parsed = json::parse(text);
    parsed.erase("timing_ms");
    return parsed;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

json load_schema() {
    std::ifstream in(std::string(PROTOGAME_SOURCE_DIR) + "/docs/report.schema.json");
    REQUIRE(in.good());
    json schema;
    in >> schema;
    return schema;
}

} // namespace

TEST_CASE("list prints six entries with two aliases and exit 0") {
    auto result = run({"list"});
    CHECK(result.exit_code == 0);
    json entries = json::parse(result.output);
    REQUIRE(entries.size() == 6);
    size_t alias_count = 0;
    for (const auto &entry : entries) alias_count += entry["aliases"].size();
    CHECK(alias_count == 2);
    CHECK(entries[0]["name"] == "fair_exchange");

    auto md = run({"list", "--format", "md"});
    CHECK(md.exit_code == 0);
    CHECK(md.output.find("fair_exchange") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"list", "extra-arg"}).exit_code == 2);
    CHECK(run({"verify", "fair_exchange", "--samples", "0"}).exit_code == 2);
    CHECK(run({"analyze"}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"analyze", "fair_exchange", "--format", "yaml"}).exit_code == 2);
    CHECK(run({"analyze", "fair_exchange", "--variant", "with-abort"}).exit_code == 2);
}

TEST_CASE("unknown targets exit 3") {
    CHECK(run({"analyze", "nosuch"}).exit_code == 3);
    CHECK(run({"export", "unknown"}).exit_code == 3);
    CHECK(run({"export", "/tmp/protogame_missing.gamespec"}).exit_code == 3);
    CHECK(run({"verify", "/tmp/protogame_missing.gamespec"}).exit_code == 3);
}

TEST_CASE("parse errors in spec files exit 4 with a position") {
    write_file("/tmp/protogame_broken.gamespec", "protocol \"x\"\nparty A\nconstraint u >\n");
    auto result = run({"analyze", "/tmp/protogame_broken.gamespec"});
    CHECK(result.exit_code == 4);
    CHECK(result.diagnostics.find("line 3") != std::string::npos);
}

TEST_CASE("explicit params drive the analysis and violations exit 5") {
    write_file("/tmp/protogame_fe.params",
               "# reference point\nu_AB = 3\nu_AA = 2\nu_BA = 3\nu_BB = 2\n");
    auto result = run({"analyze", "fair_exchange", "--params", "/tmp/protogame_fe.params"});
    REQUIRE(result.exit_code == 0);
    json report = json::parse(result.output);
    CHECK(report["params"]["u_AB"] == "3");
    std::vector<std::string> values;
    for (const auto &spectrum : report["spectra"]) {
        if (spectrum["party"] != "A") continue;
        for (const auto &entry : spectrum["entries"]) values.push_back(entry["value"]);
    }
    CHECK(values == std::vector<std::string>{"-2", "0", "1", "3"});

    write_file("/tmp/protogame_bad.params", "u_AB = 2\nu_AA = 2\nu_BA = 3\nu_BB = 2\n");
    CHECK(run({"analyze", "fair_exchange", "--params", "/tmp/protogame_bad.params"}).exit_code == 5);

    write_file("/tmp/protogame_missing.params", "u_AB = 3\nu_AA = 2\nu_BA = 3\n");
    CHECK(run({"analyze", "fair_exchange", "--params", "/tmp/protogame_missing.params"}).exit_code ==
          5);

    write_file("/tmp/protogame_malformed.params", "u_AB == 3\n");
    CHECK(run({"analyze", "fair_exchange", "--params", "/tmp/protogame_malformed.params"}).exit_code ==
          4);
}

TEST_CASE("verify exits 0 on matching claims and 1 on a forced mismatch") {
    auto ok = run({"verify", "fair_exchange", "--seed", "7", "--samples", "200"});
    CHECK(ok.exit_code == 0);

    // a document whose nash claim states the opposite of the computed fact
    write_file("/tmp/protogame_wrong.gamespec",
               "protocol \"wrong\"\n"
               "party A\nparty B\nparam u\nconstraint 0 < u\n"
               "event e \"A defrauds B\" by A\n"
               "income A u when e\nexpense B u when e\n"
               "outcome { }\noutcome { e }\n"
               "game g custom\n"
               "  action A : follow | cheat honest follow\n"
               "  action B : follow honest follow\n"
               "  map (follow, follow) -> { } @ 1\n"
               "  map (cheat, follow) -> { e } @ 1\n"
               "claim nash g (follow, follow) expected\n");
    auto bad = run({"verify", "/tmp/protogame_wrong.gamespec", "--samples", "50"});
    CHECK(bad.exit_code == 1);
    json report = json::parse(bad.output);
    CHECK(report["claims_matched"] == false);
    CHECK(report["audits"][0]["counterexample"]["witness"]["action"] == "cheat");
}

TEST_CASE("export round-trips through analyze with identical analysis content") {
    auto exported = run({"export", "s2pc", "-o", "/tmp/protogame_s2pc.gamespec"});
    REQUIRE(exported.exit_code == 0);

    auto from_catalog = run({"analyze", "s2pc", "--seed", "42"});
    auto from_file = run({"analyze", "/tmp/protogame_s2pc.gamespec", "--seed", "42"});
    REQUIRE(from_catalog.exit_code == 0);
    REQUIRE(from_file.exit_code == 0);
    json lhs = strip_timing(from_catalog.output);
    json rhs = strip_timing(from_file.output);
    CHECK(lhs["target"]["name"] == rhs["target"]["name"]);
    lhs.erase("target");
    rhs.erase("target");
    CHECK(lhs == rhs);
}

TEST_CASE("export is byte-identical across runs and rejects non-catalog targets") {
    auto a = run({"export", "fair_exchange"});
    auto b = run({"export", "fair_exchange"});
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(run({"export", "/tmp/protogame_s2pc.gamespec"}).exit_code == 3);
}

TEST_CASE("verify reports are deterministic aside from timing") {
    auto a = run({"verify", "oblivious_transfer", "--seed", "42", "--samples", "300"});
    auto b = run({"verify", "oblivious_transfer", "--seed", "42", "--samples", "300"});
    REQUIRE(a.exit_code == 0);
    CHECK(strip_timing(a.output) == strip_timing(b.output));
}

TEST_CASE("analyze and verify reports validate against the shipped schema") {
    json schema = load_schema();
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"analyze", "fair_exchange"},
             {"verify", "oblivious_transfer", "--samples", "100"},
             {"verify", "s2pc", "--samples", "50"},
             {"analyze", "coin_flipping", "--variant", "naive"}}) {
        auto result = run(args);
        REQUIRE(result.exit_code == 0);
        auto errors = schema::validate(schema, json::parse(result.output));
        for (const auto &error : errors) MESSAGE(error);
        CHECK(errors.empty());
    }
}

TEST_CASE("markdown rendering carries the same analysis") {
    auto result = run({"analyze", "fair_exchange", "--format", "md", "--seed", "9"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("# protogame analyze report") == 0);
    CHECK(result.output.find("## Payoff spectra") != std::string::npos);
    CHECK(result.output.find("recv_A_MB") != std::string::npos);

    auto verify_md = run({"verify", "bit_commitment", "--format", "md", "--samples", "50"});
    REQUIRE(verify_md.exit_code == 0);
    CHECK(verify_md.output.find("## Claim audits") != std::string::npos);
}

TEST_CASE("variant filter narrows the equilibria section") {
    auto result = run({"analyze", "oblivious_transfer", "--variant", "with-abort"});
    REQUIRE(result.exit_code == 0);
    json report = json::parse(result.output);
    REQUIRE(report["equilibria"].size() == 1);
    CHECK(report["equilibria"][0]["game"] == "with_abort");
    CHECK(report["equilibria"][0]["honest_is_nash"] == false);
}

TEST_CASE("analyze works on a game-less minimal document") {
    write_file("/tmp/protogame_min.gamespec",
               "protocol \"minimal\"\nparty A\nparty B\nparam u\nconstraint 0 < u\n"
               "event e \"it happens\"\nincome A u when e\nexpense B u when e\n"
               "outcome { }\noutcome { e }\n");
    auto result = run({"analyze", "/tmp/protogame_min.gamespec"});
    REQUIRE(result.exit_code == 0);
    json report = json::parse(result.output);
    CHECK(report["equilibria"].empty());
    CHECK(report["classification"]["zero_sum"] == true);
    CHECK(report["target"]["kind"] == "file");
}
