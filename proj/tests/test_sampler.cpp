#include "doctest.h"

#include "protogame/catalog.hpp"
#include "protogame/errors.hpp"
#include "protogame/sampler.hpp"

using namespace protogame;

TEST_CASE("sampled fair exchange parameters satisfy the constraint chain") {
    const auto &model = *get_protocol("fair_exchange").model;
    auto samples = sample_params(model.constraints, model.params, 1, 100);
    REQUIRE(samples.size() == 100);
    for (const auto &params : samples) {
        CHECK(check_constraints(params, model.constraints).all_satisfied);
        CHECK(params.size() == model.params.size());
    }
}

TEST_CASE("sampled s2pc parameters satisfy the nested chain") {
    const auto &model = *get_protocol("s2pc").model;
    auto samples = sample_params(model.constraints, model.params, 4, 200);
    for (const auto &params : samples) {
        CHECK(check_constraints(params, model.constraints).all_satisfied);
        // spot-check the interval structure directly
        CHECK(params.at("u_g") < params.at("u_AB"));
        CHECK(params.at("u_AB") < params.at("k") * params.at("u_g"));
        CHECK(params.at("k") * params.at("u_g") < params.at("u_AA"));
    }
}

TEST_CASE("contradictory constraints exhaust the budget") {
    std::vector<Param> decls = {{"u", ParamRole::other}};
    std::vector<Constraint> impossible = {
        {Expr::lit(Rational(1)), Relation::less, Expr::var("u")},
        {Expr::var("u"), Relation::less, Expr::lit(Rational(0))}};
    SamplerBounds bounds;
    bounds.budget = 2000;  // keep the failing run quick
    CHECK_THROWS_AS(sample_params(impossible, decls, 1, 1, bounds), SamplerBudgetError);
}

TEST_CASE("same seed and inputs give identical sample lists") {
    const auto &model = *get_protocol("coin_flipping").model;
    auto first = sample_params(model.constraints, model.params, 42, 50);
    auto second = sample_params(model.constraints, model.params, 42, 50);
    CHECK(first == second);
    auto different = sample_params(model.constraints, model.params, 43, 50);
    CHECK(first != different);
}

TEST_CASE("per-sample seeds make prefixes of longer runs identical") {
    const auto &model = *get_protocol("fair_exchange").model;
    auto short_run = sample_params(model.constraints, model.params, 9, 10);
    auto long_run = sample_params(model.constraints, model.params, 9, 40);
    for (size_t i = 0; i < short_run.size(); ++i) CHECK(short_run[i] == long_run[i]);
}

TEST_CASE("equality constraints are honored by pinning") {
    std::vector<Param> decls = {{"a", ParamRole::other}, {"b", ParamRole::other}};
    std::vector<Constraint> cons = {
        {Expr::lit(Rational(0)), Relation::less, Expr::var("a")},
        {Expr::var("b"), Relation::equal, Expr::var("a") * Expr::lit(Rational(2))}};
    auto samples = sample_params(cons, decls, 5, 20);
    for (const auto &params : samples) CHECK(params.at("b") == params.at("a") * Rational(2));
}

TEST_CASE("rejection fallback handles constraints without a single-variable side") {
    std::vector<Param> decls = {{"a", ParamRole::other}, {"b", ParamRole::other}};
    // a + b < 1 never appears alone on one side, so intervals do not apply
    std::vector<Constraint> cons = {
        {Expr::var("a") + Expr::var("b"), Relation::less, Expr::lit(Rational(1))},
        {Expr::lit(Rational(0)), Relation::less, Expr::var("a")},
        {Expr::lit(Rational(0)), Relation::less, Expr::var("b")}};
    auto samples = sample_params(cons, decls, 17, 25);
    for (const auto &params : samples) {
        CHECK(params.at("a") + params.at("b") < Rational(1));
        CHECK(params.at("a") > Rational(0));
    }
}

TEST_CASE("sample count must be positive") {
    CHECK_THROWS_AS(sample_params({}, {}, 1, 0), UsageError);
}
