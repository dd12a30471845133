#pragma once

#include <optional>
#include <string>
#include <vector>

#include "protogame/catalog.hpp"
#include "protogame/claims.hpp"

namespace protogame {

struct SourcePos {
    int line = 1;
    int column = 1;
};

/// Parsed form of a .gamespec document. Positions are retained so semantic
/// checks can point at the offending declaration.
struct SpecDocument {
    struct PartyDecl {
        std::string name;
        SourcePos pos;
    };
    struct ParamDecl {
        std::string name;
        SourcePos pos;
    };
    struct ConstraintDecl {
        Constraint constraint;  // normalized to <, <=, =
        SourcePos pos;
    };
    struct EventDecl {
        std::string name;
        std::string description;
        std::optional<std::string> by;
        SourcePos pos;
    };
    struct RuleDecl {
        RuleKind kind;
        std::string party;
        Expr amount;
        std::string trigger;
        SourcePos pos;
    };
    struct OutcomeDecl {
        std::vector<std::string> atoms;
        SourcePos pos;
    };
    struct ActionDecl {
        std::string party;
        std::vector<std::string> actions;
        std::optional<std::string> honest;
        SourcePos pos;
    };
    struct BranchDecl {
        std::vector<std::string> atoms;
        Rational probability;
        SourcePos pos;
    };
    struct MapDecl {
        std::string action_first;   // first declared party's action
        std::string action_second;
        std::vector<BranchDecl> branches;
        SourcePos pos;
    };
    struct GameDecl {
        std::string name;
        GameVariant variant = GameVariant::custom;
        std::vector<ActionDecl> actions;
        std::vector<MapDecl> maps;
        SourcePos pos;
    };
    struct ChainClaimDecl {
        std::string party;
        std::vector<Expr> entries;
        std::vector<ChainSep> separators;
        bool expected = true;
        SourcePos pos;
    };
    struct FairnessClaimDecl {
        std::string game;
        std::string honest_party;
        std::string antecedent_party;
        Expr antecedent;
        std::string consequent_party;
        Expr consequent;
        bool expected = true;
        SourcePos pos;
    };
    struct NashClaimDecl {
        std::string game;
        std::string action_first;
        std::string action_second;
        bool expected = true;
        SourcePos pos;
    };

    std::string protocol_name;
    std::vector<PartyDecl> parties;
    std::vector<ParamDecl> params;
    std::vector<ConstraintDecl> constraints;
    std::vector<EventDecl> events;
    std::vector<RuleDecl> rules;
    std::vector<OutcomeDecl> outcomes;
    std::vector<GameDecl> games;
    std::vector<ChainClaimDecl> chain_claims;
    std::vector<FairnessClaimDecl> fairness_claims;
    std::vector<NashClaimDecl> nash_claims;
};

/// Engine-ready values produced from a document.
struct ElaboratedSpec {
    std::string name;
    std::shared_ptr<const PayoffModel> model;
    std::vector<StrategicGame> games;
    std::vector<ProtocolClaim> claims;  // ids assigned by kind and order

    const StrategicGame &game(const std::string &variant_name) const;
    bool has_game(const std::string &variant_name) const;
};

/// Parses a gamespec document. First error wins; throws ParseError with a
/// 1-based line/column pointing into `text`.
SpecDocument parse(const std::string &text);

/// Semantic validation and conversion; errors are ParseErrors carrying the
/// offending declaration's position.
ElaboratedSpec elaborate(const SpecDocument &doc);

/// Canonical serialization: fixed section order, one declaration per line,
/// two-space indentation inside game blocks, rationals as "p/q".
/// parse/elaborate of the result reproduces the input semantically, and
/// export is byte-idempotent.
std::string export_text(const std::string &protocol_name, const PayoffModel &model,
                        const std::vector<StrategicGame> &games,
                        const std::vector<ProtocolClaim> &claims);
std::string export_entry(const ProtocolEntry &entry);
std::string export_document(const SpecDocument &doc);

} // namespace protogame
