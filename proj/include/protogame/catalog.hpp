#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "protogame/claims.hpp"

namespace protogame {

/// "lower is valued at most as much as higher" for one party.
struct PreferencePair {
    std::string lower;
    std::string higher;
};

/// Report-only ranking over {correctness, privacy, fairness, exclusiveness,
/// voyeurism}; when `quantities` maps properties to amounts, the ranking is
/// cross-checked numerically against them.
struct PreferenceMetadata {
    std::vector<PreferencePair> pairs_a;
    std::vector<PreferencePair> pairs_b;
    std::map<std::string, Expr> quantities_a;
    std::map<std::string, Expr> quantities_b;
};

struct ProtocolEntry {
    std::string name;
    std::string description;
    std::vector<std::string> notes;
    std::shared_ptr<const PayoffModel> model;
    std::vector<StrategicGame> games;  // rational first
    std::vector<ProtocolClaim> claims;
    PreferenceMetadata preferences;

    const StrategicGame &game(const std::string &variant_name) const;  // throws ModelError
    bool has_game(const std::string &variant_name) const;
};

/// All six entries in stable order. Built once; immutable afterwards.
const std::vector<ProtocolEntry> &catalog();

/// Alias table (alias -> canonical name), stable order.
const std::vector<std::pair<std::string, std::string>> &catalog_aliases();

/// Lookup by canonical name or alias; throws UnknownProtocolError listing
/// the valid names.
const ProtocolEntry &get_protocol(const std::string &name_or_alias);

/// Canonical names in catalog order.
std::vector<std::string> list_protocols();

} // namespace protogame
