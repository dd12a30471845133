#include "protogame/claims.hpp"

namespace protogame {

const char *chain_sep_text(ChainSep s) {
    switch (s) {
        case ChainSep::less: return "<";
        case ChainSep::less_equal: return "<=";
        case ChainSep::equal: return "=";
        case ChainSep::unordered: return "|";
    }
    return "?";
}

const char *ProtocolClaim::kind() const {
    if (std::holds_alternative<ChainClaim>(body)) return "chain";
    if (std::holds_alternative<FairnessClaim>(body)) return "fairness";
    return "nash";
}

void assign_claim_ids(std::vector<ProtocolClaim> &claims) {
    int chain = 0, fairness = 0, nash = 0;
    for (auto &claim : claims) {
        if (std::holds_alternative<ChainClaim>(claim.body)) {
            claim.id = "chain" + std::to_string(chain++);
        } else if (std::holds_alternative<FairnessClaim>(claim.body)) {
            claim.id = "fairness" + std::to_string(fairness++);
        } else {
            claim.id = "nash" + std::to_string(nash++);
        }
    }
}

} // namespace protogame
