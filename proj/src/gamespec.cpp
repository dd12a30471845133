#include "protogame/gamespec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "protogame/errors.hpp"

namespace protogame {

namespace {

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

enum class Tok {
    word,      // identifier or keyword, checked contextually
    string,    // "..."
    number,    // INT or INT/POSINT
    lbrace, rbrace, lparen, rparen,
    colon, comma, pipe, at,
    plus, minus, star,
    lt, le, eq, gt, ge,
    arrow,     // ->
    implies,   // =>
    newline,
    eof,
};

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(const std::string &text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            Token token = next();
            bool stop = token.kind == Tok::eof;
            tokens.push_back(std::move(token));
            if (stop) return tokens;
        }
    }

private:
    char peek(size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    Token make(Tok kind, std::string text, SourcePos pos) { return {kind, std::move(text), pos}; }

    Token next() {
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == '#') {
                while (pos_ < text_.size() && peek() != '\n') advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            break;
        }
        SourcePos pos{line_, column_};
        if (pos_ >= text_.size()) return make(Tok::eof, "", pos);
        char c = advance();
        switch (c) {
            case '\n': return make(Tok::newline, "\\n", pos);
            case '{': return make(Tok::lbrace, "{", pos);
            case '}': return make(Tok::rbrace, "}", pos);
            case '(': return make(Tok::lparen, "(", pos);
            case ')': return make(Tok::rparen, ")", pos);
            case ':': return make(Tok::colon, ":", pos);
            case ',': return make(Tok::comma, ",", pos);
            case '|': return make(Tok::pipe, "|", pos);
            case '@': return make(Tok::at, "@", pos);
            case '+': return make(Tok::plus, "+", pos);
            case '*': return make(Tok::star, "*", pos);
            case '-':
                if (peek() == '>') {
                    advance();
                    return make(Tok::arrow, "->", pos);
                }
                return make(Tok::minus, "-", pos);
            case '=':
                if (peek() == '>') {
                    advance();
                    return make(Tok::implies, "=>", pos);
                }
                return make(Tok::eq, "=", pos);
            case '<':
                if (peek() == '=') {
                    advance();
                    return make(Tok::le, "<=", pos);
                }
                return make(Tok::lt, "<", pos);
            case '>':
                if (peek() == '=') {
                    advance();
                    return make(Tok::ge, ">=", pos);
                }
                return make(Tok::gt, ">", pos);
            case '"': {
                std::string value;
                while (pos_ < text_.size() && peek() != '"' && peek() != '\n') value.push_back(advance());
                if (pos_ >= text_.size() || peek() != '"')
                    throw ParseError(pos.line, pos.column, "unterminated string literal");
                advance();
                return make(Tok::string, std::move(value), pos);
            }
            default: break;
        }
        if (c >= '0' && c <= '9') {
            std::string value(1, c);
            while (peek() >= '0' && peek() <= '9') value.push_back(advance());
            if (peek() == '/') {
                char after = peek(1);
                if (after < '0' || after > '9')
                    throw ParseError(line_, column_, "malformed rational literal", value + "/");
                value.push_back(advance());
                while (peek() >= '0' && peek() <= '9') value.push_back(advance());
            }
            return make(Tok::number, std::move(value), pos);
        }
        if (c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::string value(1, c);
            while (peek() == '_' || (peek() >= 'a' && peek() <= 'z') ||
                   (peek() >= 'A' && peek() <= 'Z') || (peek() >= '0' && peek() <= '9'))
                value.push_back(advance());
            return make(Tok::word, std::move(value), pos);
        }
        throw ParseError(pos.line, pos.column, "unexpected character", std::string(1, c));
    }

    const std::string &text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

const std::set<std::string> &reserved_names() {
    static const std::set<std::string> names = {
        "protocol", "party", "param", "constraint", "event", "by",     "income",
        "expense",  "when",  "outcome", "game",     "action", "honest", "map",
        "claim",    "chain", "fairness", "nash",    "expected", "rejected",
        "rational", "naive", "custom"};
    return names;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    SpecDocument run() {
        SpecDocument doc;
        skip_newlines();
        expect_word("protocol");
        doc.protocol_name = expect(Tok::string, "protocol name string").text;
        end_of_statement();
        while (!at(Tok::eof)) {
            if (at(Tok::newline)) {
                advance();
                continue;
            }
            statement(doc);
        }
        if (current_game_) close_game(doc);
        return doc;
    }

private:
    const Token &cur() const { return tokens_[index_]; }
    bool at(Tok kind) const { return cur().kind == kind; }
    bool at_word(const char *text) const { return at(Tok::word) && cur().text == text; }

    Token advance() { return tokens_[index_++]; }

    [[noreturn]] void fail(const std::string &message) const {
        const Token &token = cur();
        throw ParseError(token.pos.line, token.pos.column, message, token.text);
    }

    Token expect(Tok kind, const char *what) {
        if (!at(kind)) fail(std::string("expected ") + what);
        return advance();
    }

    Token expect_word(const char *text) {
        if (!at_word(text)) fail(std::string("expected '") + text + "'");
        return advance();
    }

    Token expect_name(const char *what) {
        Token token = expect(Tok::word, what);
        return token;
    }

    Token expect_fresh_name(const char *what) {
        Token token = expect(Tok::word, what);
        if (reserved_names().count(token.text))
            throw ParseError(token.pos.line, token.pos.column,
                             std::string("reserved word cannot name a ") + what, token.text);
        return token;
    }

    void skip_newlines() {
        while (at(Tok::newline)) advance();
    }

    void end_of_statement() {
        if (at(Tok::eof)) return;
        if (!at(Tok::newline)) fail("expected end of line");
        advance();
    }

    void close_game(SpecDocument &doc) {
        doc.games.push_back(std::move(*current_game_));
        current_game_.reset();
    }

    void statement(SpecDocument &doc) {
        if (!at(Tok::word)) fail("expected a statement keyword");
        const std::string &kw = cur().text;
        bool in_game_block = kw == "action" || kw == "map";
        if (current_game_ && !in_game_block) close_game(doc);
        if (kw == "party") {
            party(doc);
        } else if (kw == "param") {
            param(doc);
        } else if (kw == "constraint") {
            constraint(doc);
        } else if (kw == "event") {
            event(doc);
        } else if (kw == "income" || kw == "expense") {
            rule(doc);
        } else if (kw == "outcome") {
            outcome(doc);
        } else if (kw == "game") {
            game(doc);
        } else if (kw == "action") {
            action(doc);
        } else if (kw == "map") {
            map_stmt(doc);
        } else if (kw == "claim") {
            claim(doc);
        } else {
            fail("unknown statement keyword");
        }
    }

    void party(SpecDocument &doc) {
        advance();
        Token name = expect_fresh_name("party name");
        doc.parties.push_back({name.text, name.pos});
        end_of_statement();
    }

    void param(SpecDocument &doc) {
        advance();
        Token name = expect_fresh_name("parameter name");
        doc.params.push_back({name.text, name.pos});
        end_of_statement();
    }

    void constraint(SpecDocument &doc) {
        Token kw = advance();
        Expr left = expr();
        Tok rel = cur().kind;
        if (rel != Tok::lt && rel != Tok::le && rel != Tok::eq && rel != Tok::gt && rel != Tok::ge)
            fail("expected a relation (<, <=, =, >, >=)");
        advance();
        Expr right = expr();
        Constraint c;
        // normalize > and >= by swapping
        if (rel == Tok::gt) {
            c = {std::move(right), Relation::less, std::move(left)};
        } else if (rel == Tok::ge) {
            c = {std::move(right), Relation::less_equal, std::move(left)};
        } else {
            Relation relation = rel == Tok::lt    ? Relation::less
                                : rel == Tok::le ? Relation::less_equal
                                                 : Relation::equal;
            c = {std::move(left), relation, std::move(right)};
        }
        doc.constraints.push_back({std::move(c), kw.pos});
        end_of_statement();
    }

    void event(SpecDocument &doc) {
        advance();
        Token name = expect_fresh_name("event name");
        Token desc = expect(Tok::string, "event description string");
        std::optional<std::string> by;
        if (at_word("by")) {
            advance();
            by = expect_name("party name").text;
        }
        doc.events.push_back({name.text, desc.text, std::move(by), name.pos});
        end_of_statement();
    }

    void rule(SpecDocument &doc) {
        Token kw = advance();
        RuleKind kind = kw.text == "income" ? RuleKind::income : RuleKind::expense;
        Token party = expect_name("party name");
        Expr amount = expr();
        expect_word("when");
        Token trigger = expect_name("event name");
        doc.rules.push_back({kind, party.text, std::move(amount), trigger.text, kw.pos});
        end_of_statement();
    }

    std::vector<std::string> brace_list() {
        expect(Tok::lbrace, "'{'");
        std::vector<std::string> atoms;
        if (!at(Tok::rbrace)) {
            atoms.push_back(expect_name("event name").text);
            while (at(Tok::comma)) {
                advance();
                atoms.push_back(expect_name("event name").text);
            }
        }
        expect(Tok::rbrace, "'}'");
        return atoms;
    }

    void outcome(SpecDocument &doc) {
        Token kw = advance();
        doc.outcomes.push_back({brace_list(), kw.pos});
        end_of_statement();
    }

    void game(SpecDocument &) {
        Token kw = advance();
        Token name = expect_name("game name");
        GameVariant variant;
        if (at_word("rational")) {
            variant = GameVariant::rational;
        } else if (at_word("naive")) {
            variant = GameVariant::naive;
        } else if (at_word("custom")) {
            variant = GameVariant::custom;
        } else {
            fail("expected game variant (rational, naive or custom)");
        }
        advance();
        end_of_statement();
        current_game_ = SpecDocument::GameDecl{};
        current_game_->name = name.text;
        current_game_->variant = variant;
        current_game_->pos = kw.pos;
    }

    void action(SpecDocument &) {
        Token kw = advance();
        if (!current_game_) throw ParseError(kw.pos.line, kw.pos.column, "action outside a game block");
        Token party = expect_name("party name");
        expect(Tok::colon, "':'");
        SpecDocument::ActionDecl decl;
        decl.party = party.text;
        decl.pos = kw.pos;
        decl.actions.push_back(expect_fresh_name("action name").text);
        while (at(Tok::pipe)) {
            advance();
            decl.actions.push_back(expect_fresh_name("action name").text);
        }
        if (at_word("honest")) {
            advance();
            decl.honest = expect_name("action name").text;
        }
        current_game_->actions.push_back(std::move(decl));
        end_of_statement();
    }

    void map_stmt(SpecDocument &) {
        Token kw = advance();
        if (!current_game_) throw ParseError(kw.pos.line, kw.pos.column, "map outside a game block");
        expect(Tok::lparen, "'('");
        Token first = expect_name("action name");
        expect(Tok::comma, "','");
        Token second = expect_name("action name");
        expect(Tok::rparen, "')'");
        expect(Tok::arrow, "'->'");
        SpecDocument::MapDecl decl;
        decl.action_first = first.text;
        decl.action_second = second.text;
        decl.pos = kw.pos;
        decl.branches.push_back(branch());
        while (at(Tok::comma)) {
            advance();
            decl.branches.push_back(branch());
        }
        current_game_->maps.push_back(std::move(decl));
        end_of_statement();
    }

    SpecDocument::BranchDecl branch() {
        SpecDocument::BranchDecl decl;
        decl.pos = cur().pos;
        decl.atoms = brace_list();
        expect(Tok::at, "'@'");
        Token prob = expect(Tok::number, "probability");
        decl.probability = Rational::from_string(prob.text);
        return decl;
    }

    bool claim_flag() {
        if (at_word("expected")) {
            advance();
            return true;
        }
        if (at_word("rejected")) {
            advance();
            return false;
        }
        return true;  // omitted flag defaults to expected
    }

    void claim(SpecDocument &doc) {
        Token kw = advance();
        if (at_word("chain")) {
            advance();
            SpecDocument::ChainClaimDecl decl;
            decl.pos = kw.pos;
            decl.party = expect_name("party name").text;
            expect(Tok::colon, "':'");
            decl.entries.push_back(expr());
            while (at(Tok::lt) || at(Tok::le) || at(Tok::eq) || at(Tok::pipe)) {
                Tok sep = advance().kind;
                decl.separators.push_back(sep == Tok::lt    ? ChainSep::less
                                          : sep == Tok::le ? ChainSep::less_equal
                                          : sep == Tok::eq ? ChainSep::equal
                                                           : ChainSep::unordered);
                decl.entries.push_back(expr());
            }
            if (decl.entries.size() < 2) fail("chain claim needs at least two entries");
            decl.expected = claim_flag();
            doc.chain_claims.push_back(std::move(decl));
        } else if (at_word("fairness")) {
            advance();
            SpecDocument::FairnessClaimDecl decl;
            decl.pos = kw.pos;
            decl.game = expect_name("game name").text;
            decl.honest_party = expect_name("party name").text;
            expect(Tok::colon, "':'");
            decl.antecedent_party = expect_name("party name").text;
            decl.antecedent = expr();
            expect(Tok::implies, "'=>'");
            decl.consequent_party = expect_name("party name").text;
            decl.consequent = expr();
            decl.expected = claim_flag();
            doc.fairness_claims.push_back(std::move(decl));
        } else if (at_word("nash")) {
            advance();
            SpecDocument::NashClaimDecl decl;
            decl.pos = kw.pos;
            decl.game = expect_name("game name").text;
            expect(Tok::lparen, "'('");
            decl.action_first = expect_name("action name").text;
            expect(Tok::comma, "','");
            decl.action_second = expect_name("action name").text;
            expect(Tok::rparen, "')'");
            if (at_word("expected")) {
                advance();
                decl.expected = true;
            } else if (at_word("rejected")) {
                advance();
                decl.expected = false;
            } else {
                fail("expected 'expected' or 'rejected'");
            }
            doc.nash_claims.push_back(std::move(decl));
        } else {
            fail("expected 'chain', 'fairness' or 'nash'");
        }
        end_of_statement();
    }

    // expr := term (("+"|"-") term)* ; term := factor ("*" factor)*
    // factor := rational | IDENT | "(" expr ")" | "-" factor
    Expr expr() {
        Expr left = term();
        while (at(Tok::plus) || at(Tok::minus)) {
            Tok op = advance().kind;
            Expr right = term();
            left = op == Tok::plus ? left + right : left - right;
        }
        return left;
    }

    Expr term() {
        Expr left = factor();
        while (at(Tok::star)) {
            advance();
            left = left * factor();
        }
        return left;
    }

    Expr factor() {
        if (at(Tok::number)) return Expr::lit(Rational::from_string(advance().text));
        if (at(Tok::minus)) {
            advance();
            return -factor();
        }
        if (at(Tok::lparen)) {
            advance();
            Expr inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (at(Tok::word) && !reserved_names().count(cur().text))
            return Expr::var(advance().text);
        fail("expected a rational, parameter or parenthesized expression");
    }

    std::vector<Token> tokens_;
    size_t index_ = 0;
    std::optional<SpecDocument::GameDecl> current_game_;
};

// ---------------------------------------------------------------------------
// elaboration
// ---------------------------------------------------------------------------

[[noreturn]] void semantic_error(SourcePos pos, const std::string &message,
                                 const std::string &token = "") {
    throw ParseError(pos.line, pos.column, message, token);
}

void check_expr_params(const Expr &e, const PayoffModel &model, SourcePos pos) {
    switch (e.kind()) {
        case Expr::Kind::literal: return;
        case Expr::Kind::param:
            if (!model.has_param(e.param_name()))
                semantic_error(pos, "undeclared parameter", e.param_name());
            return;
        case Expr::Kind::negate: check_expr_params(e.left(), model, pos); return;
        default:
            check_expr_params(e.left(), model, pos);
            check_expr_params(e.right(), model, pos);
            return;
    }
}

} // namespace

SpecDocument parse(const std::string &text) {
    Lexer lexer(text);
    Parser parser(lexer.run());
    return parser.run();
}

const StrategicGame &ElaboratedSpec::game(const std::string &variant_name) const {
    for (const auto &g : games) {
        if (g.name == variant_name) return g;
    }
    throw ModelError(name + ": no game variant '" + variant_name + "'");
}

bool ElaboratedSpec::has_game(const std::string &variant_name) const {
    return std::any_of(games.begin(), games.end(),
                       [&](const StrategicGame &g) { return g.name == variant_name; });
}

ElaboratedSpec elaborate(const SpecDocument &doc) {
    ElaboratedSpec spec;
    spec.name = doc.protocol_name;

    if (doc.parties.size() != 2) {
        SourcePos pos = doc.parties.empty() ? SourcePos{1, 1} : doc.parties.back().pos;
        semantic_error(pos, "exactly two parties are required, found " +
                                std::to_string(doc.parties.size()));
    }
    auto party_id = [&](const std::string &name, SourcePos pos) {
        if (name == doc.parties[0].name) return PartyId::A;
        if (name == doc.parties[1].name) return PartyId::B;
        semantic_error(pos, "undeclared party", name);
    };

    auto model = std::make_shared<PayoffModel>();
    model->name = doc.protocol_name;
    model->party_a = {PartyId::A, doc.parties[0].name};
    model->party_b = {PartyId::B, doc.parties[1].name};

    std::set<std::string> names{doc.parties[0].name};
    if (!names.insert(doc.parties[1].name).second)
        semantic_error(doc.parties[1].pos, "duplicate party name", doc.parties[1].name);

    for (const auto &param : doc.params) {
        if (!names.insert(param.name).second)
            semantic_error(param.pos, "duplicate name", param.name);
        model->params.push_back({param.name, ParamRole::other});
    }
    for (const auto &event : doc.events) {
        if (!names.insert(event.name).second)
            semantic_error(event.pos, "duplicate name", event.name);
        std::optional<PartyId> subject;
        if (event.by) subject = party_id(*event.by, event.pos);
        model->atoms.push_back({event.name, event.description, subject});
    }
    for (const auto &constraint : doc.constraints) {
        check_expr_params(constraint.constraint.left, *model, constraint.pos);
        check_expr_params(constraint.constraint.right, *model, constraint.pos);
        model->constraints.push_back(constraint.constraint);
    }
    for (const auto &rule : doc.rules) {
        PartyId party = party_id(rule.party, rule.pos);
        if (!model->has_atom(rule.trigger))
            semantic_error(rule.pos, "undeclared event", rule.trigger);
        check_expr_params(rule.amount, *model, rule.pos);
        model->rules.push_back({party, rule.kind, rule.trigger, rule.amount});
    }
    std::set<OutcomeAssignment> seen_outcomes;
    for (const auto &outcome : doc.outcomes) {
        OutcomeAssignment q;
        for (const auto &atom : outcome.atoms) {
            if (!model->has_atom(atom)) semantic_error(outcome.pos, "undeclared event", atom);
            if (!q.atoms.insert(atom).second)
                semantic_error(outcome.pos, "event repeated within one outcome", atom);
        }
        if (!seen_outcomes.insert(q).second)
            semantic_error(outcome.pos, "duplicate outcome " + q.to_string());
        model->outcomes.push_back(std::move(q));
    }
    if (model->outcomes.empty())
        semantic_error({1, 1}, "document declares no outcomes");
    if (!seen_outcomes.count(OutcomeAssignment{}))
        semantic_error(doc.outcomes.front().pos,
                       "the outcome universe must include the empty outcome '{ }'");
    model->finalize();
    spec.model = model;

    std::set<std::string> game_names;
    for (const auto &game_decl : doc.games) {
        if (!game_names.insert(game_decl.name).second)
            semantic_error(game_decl.pos, "duplicate game name", game_decl.name);
        StrategicGame game;
        game.name = game_decl.name;
        game.variant = game_decl.variant;
        game.model = model;
        bool have_a = false, have_b = false;
        for (const auto &action_decl : game_decl.actions) {
            PartyId party = party_id(action_decl.party, action_decl.pos);
            bool &have = party == PartyId::A ? have_a : have_b;
            if (have)
                semantic_error(action_decl.pos, "second action declaration for party",
                               action_decl.party);
            have = true;
            if (!action_decl.honest)
                semantic_error(action_decl.pos, "action declaration lacks an honest mark");
            ActionSet set{party, action_decl.actions, *action_decl.honest};
            std::set<std::string> unique(set.actions.begin(), set.actions.end());
            if (unique.size() != set.actions.size())
                semantic_error(action_decl.pos, "duplicate action name");
            if (!set.has(set.honest))
                semantic_error(action_decl.pos, "honest action is not in the action list",
                               set.honest);
            (party == PartyId::A ? game.actions_a : game.actions_b) = std::move(set);
        }
        if (!have_a || !have_b)
            semantic_error(game_decl.pos, "game must declare actions for both parties");
        for (const auto &map_decl : game_decl.maps) {
            if (!game.actions_a.has(map_decl.action_first))
                semantic_error(map_decl.pos, "unknown action for first party",
                               map_decl.action_first);
            if (!game.actions_b.has(map_decl.action_second))
                semantic_error(map_decl.pos, "unknown action for second party",
                               map_decl.action_second);
            ActionProfile profile{map_decl.action_first, map_decl.action_second};
            if (game.outcome_map.count(profile))
                semantic_error(map_decl.pos, "duplicate map entry for (" + profile.first + ", " +
                                                 profile.second + ")");
            OutcomeDistribution dist;
            Rational total(0);
            for (const auto &branch : map_decl.branches) {
                OutcomeAssignment q;
                for (const auto &atom : branch.atoms) {
                    if (!model->has_atom(atom)) semantic_error(branch.pos, "undeclared event", atom);
                    q.atoms.insert(atom);
                }
                if (!model->is_feasible(q))
                    semantic_error(branch.pos, "branch outcome " + q.to_string() +
                                                   " is not in the outcome universe");
                if (!(branch.probability > Rational(0)))
                    semantic_error(branch.pos, "branch probability must be strictly positive");
                total += branch.probability;
                dist.branches.push_back({std::move(q), branch.probability});
            }
            if (total != Rational(1))
                semantic_error(map_decl.pos,
                               "branch probabilities sum to " + total.to_string() + ", expected 1");
            game.outcome_map.emplace(std::move(profile), std::move(dist));
        }
        for (const auto &a : game.actions_a.actions) {
            for (const auto &b : game.actions_b.actions) {
                if (!game.outcome_map.count({a, b}))
                    semantic_error(game_decl.pos,
                                   "outcome map is missing (" + a + ", " + b + ")");
            }
        }
        game.validate();
        spec.games.push_back(std::move(game));
    }

    for (const auto &decl : doc.chain_claims) {
        ProtocolClaim claim;
        claim.expected_to_hold = decl.expected;
        ChainClaim chain;
        chain.party = party_id(decl.party, decl.pos);
        for (const auto &entry : decl.entries) {
            check_expr_params(entry, *model, decl.pos);
            chain.entries.push_back(entry);
        }
        chain.separators = decl.separators;
        claim.body = std::move(chain);
        spec.claims.push_back(std::move(claim));
    }
    auto find_game = [&](const std::string &name, SourcePos pos) -> const StrategicGame & {
        for (const auto &g : spec.games) {
            if (g.name == name) return g;
        }
        semantic_error(pos, "undeclared game", name);
    };
    for (const auto &decl : doc.fairness_claims) {
        find_game(decl.game, decl.pos);
        check_expr_params(decl.antecedent, *model, decl.pos);
        check_expr_params(decl.consequent, *model, decl.pos);
        ProtocolClaim claim;
        claim.expected_to_hold = decl.expected;
        claim.body = FairnessClaim{
            decl.game,
            FairnessImplication{party_id(decl.honest_party, decl.pos),
                                party_id(decl.antecedent_party, decl.pos), decl.antecedent,
                                party_id(decl.consequent_party, decl.pos), decl.consequent}};
        spec.claims.push_back(std::move(claim));
    }
    for (const auto &decl : doc.nash_claims) {
        const StrategicGame &game = find_game(decl.game, decl.pos);
        if (!game.actions_a.has(decl.action_first))
            semantic_error(decl.pos, "unknown action for first party", decl.action_first);
        if (!game.actions_b.has(decl.action_second))
            semantic_error(decl.pos, "unknown action for second party", decl.action_second);
        ProtocolClaim claim;
        claim.expected_to_hold = decl.expected;
        claim.body = NashClaim{decl.game, {decl.action_first, decl.action_second}};
        spec.claims.push_back(std::move(claim));
    }
    assign_claim_ids(spec.claims);
    return spec;
}

// ---------------------------------------------------------------------------
// canonical export
// ---------------------------------------------------------------------------

namespace {

std::string outcome_text(const OutcomeAssignment &q) {
    std::string out = "{ ";
    bool first = true;
    for (const auto &atom : q.atoms) {
        if (!first) out += ", ";
        out += atom;
        first = false;
    }
    if (q.atoms.empty()) return "{ }";
    out += " }";
    return out;
}

const std::string &display(const PayoffModel &model, PartyId party) {
    return party == PartyId::A ? model.party_a.display_name : model.party_b.display_name;
}

} // namespace

std::string export_text(const std::string &protocol_name, const PayoffModel &model,
                        const std::vector<StrategicGame> &games,
                        const std::vector<ProtocolClaim> &claims) {
    std::string out = "protocol \"" + protocol_name + "\"\n\n";
    out += "party " + model.party_a.display_name + "\n";
    out += "party " + model.party_b.display_name + "\n\n";
    for (const auto &param : model.params) out += "param " + param.name + "\n";
    if (!model.params.empty()) out += "\n";
    for (const auto &constraint : model.constraints)
        out += "constraint " + constraint.to_string() + "\n";
    if (!model.constraints.empty()) out += "\n";
    for (const auto &atom : model.atoms) {
        out += "event " + atom.name + " \"" + atom.description + "\"";
        if (atom.subject) out += " by " + display(model, *atom.subject);
        out += "\n";
    }
    if (!model.atoms.empty()) out += "\n";
    for (const auto &rule : model.rules) {
        out += std::string(rule.kind == RuleKind::income ? "income " : "expense ") +
               display(model, rule.party) + " " + rule.amount.to_string() + " when " + rule.trigger +
               "\n";
    }
    if (!model.rules.empty()) out += "\n";
    for (const auto &q : model.outcomes) out += "outcome " + outcome_text(q) + "\n";
    for (const auto &game : games) {
        out += "\ngame " + game.name + " " + variant_text(game.variant) + "\n";
        for (const ActionSet *set : {&game.actions_a, &game.actions_b}) {
            out += "  action " + display(model, set->party) + " : ";
            for (size_t i = 0; i < set->actions.size(); ++i) {
                if (i > 0) out += " | ";
                out += set->actions[i];
            }
            out += " honest " + set->honest + "\n";
        }
        for (const auto &a : game.actions_a.actions) {
            for (const auto &b : game.actions_b.actions) {
                const auto &dist = game.outcome(ActionProfile{a, b});
                out += "  map (" + a + ", " + b + ") -> ";
                for (size_t i = 0; i < dist.branches.size(); ++i) {
                    if (i > 0) out += ", ";
                    out += outcome_text(dist.branches[i].outcome) + " @ " +
                           dist.branches[i].probability.to_string();
                }
                out += "\n";
            }
        }
    }
    // claims serialize grouped by kind, chains first
    bool claim_header = false;
    auto begin_claims = [&] {
        if (!claim_header) {
            out += "\n";
            claim_header = true;
        }
    };
    for (const auto &claim : claims) {
        const auto *chain = std::get_if<ChainClaim>(&claim.body);
        if (chain == nullptr) continue;
        begin_claims();
        out += "claim chain " + display(model, chain->party) + " : ";
        for (size_t i = 0; i < chain->entries.size(); ++i) {
            if (i > 0) out += " " + std::string(chain_sep_text(chain->separators[i - 1])) + " ";
            out += chain->entries[i].to_string();
        }
        out += claim.expected_to_hold ? " expected\n" : " rejected\n";
    }
    for (const auto &claim : claims) {
        const auto *fairness = std::get_if<FairnessClaim>(&claim.body);
        if (fairness == nullptr) continue;
        begin_claims();
        const auto &impl = fairness->implication;
        out += "claim fairness " + fairness->game + " " + display(model, impl.honest_party) + " : " +
               display(model, impl.antecedent_party) + " " + impl.antecedent_amount.to_string() +
               " => " + display(model, impl.consequent_party) + " " +
               impl.consequent_amount.to_string();
        out += claim.expected_to_hold ? " expected\n" : " rejected\n";
    }
    for (const auto &claim : claims) {
        const auto *nash = std::get_if<NashClaim>(&claim.body);
        if (nash == nullptr) continue;
        begin_claims();
        out += "claim nash " + nash->game + " (" + nash->profile.first + ", " +
               nash->profile.second + ")";
        out += claim.expected_to_hold ? " expected\n" : " rejected\n";
    }
    return out;
}

std::string export_entry(const ProtocolEntry &entry) {
    return export_text(entry.name, *entry.model, entry.games, entry.claims);
}

std::string export_document(const SpecDocument &doc) {
    ElaboratedSpec spec = elaborate(doc);
    return export_text(spec.name, *spec.model, spec.games, spec.claims);
}

} // namespace protogame
