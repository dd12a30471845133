#pragma once

#include <string>
#include <variant>
#include <vector>

#include "protogame/game.hpp"

namespace protogame {

/// Separator between two adjacent chain entries. `unordered` groups entries
/// whose relative order is not claimed; audits skip those steps.
enum class ChainSep { less, less_equal, equal, unordered };

const char *chain_sep_text(ChainSep s);

/// An ordered list of payoff expressions with strict/equal separators: the
/// claim that, under the model constraints, every ordered step holds.
struct ChainClaim {
    PartyId party;
    std::vector<Expr> entries;
    std::vector<ChainSep> separators;  // size == entries.size() - 1
    std::string source;                // free origin label, not serialized
};

/// "If the opponent's income equals the antecedent amount in some branch,
/// the honest party's income equals the consequent amount in that branch."
struct FairnessImplication {
    PartyId honest_party;
    PartyId antecedent_party;
    Expr antecedent_amount;
    PartyId consequent_party;
    Expr consequent_amount;
};

struct FairnessClaim {
    std::string game;  // variant name within the owning entry
    FairnessImplication implication;
};

struct NashClaim {
    std::string game;
    ActionProfile profile;
};

/// A claim with its documented expectation. `expected_to_hold` is the
/// claimed truth value: chains/fairness claimed to hold or to fail, Nash
/// profiles claimed to be equilibria or claimed not to be.
struct ProtocolClaim {
    std::string id;  // "chain0", "fairness2", "nash1", ... by document order
    bool expected_to_hold = true;
    std::variant<ChainClaim, FairnessClaim, NashClaim> body;

    const char *kind() const;
};

/// Assigns kind-indexed ids (chain0, chain1, fairness0, ...) in list order.
void assign_claim_ids(std::vector<ProtocolClaim> &claims);

} // namespace protogame
