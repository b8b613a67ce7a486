#include "idlogic/syntax/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace idlogic {

namespace {

enum class Tok {
    Ident,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Dot,
    Colon,
    Slash,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Arrow,
    Eq,
    Neq,
    Bang,
    Question,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.loc = {line_, col_};
            if (pos_ >= src_.size()) {
                t.kind = Tok::End;
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    advance();
                t.kind = Tok::Ident;
                t.text = std::string(src_.substr(start, pos_ - start));
                out.push_back(std::move(t));
                continue;
            }
            t.kind = punct(t.text);
            out.push_back(std::move(t));
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

    Tok punct(std::string& text) {
        static const std::pair<std::string_view, Tok> table[] = {
            {"<=>", Tok::Iff}, {"=>", Tok::Implies}, {"<-", Tok::Arrow}, {"~=", Tok::Neq},
            {"(", Tok::LParen}, {")", Tok::RParen},  {"{", Tok::LBrace},  {"}", Tok::RBrace},
            {",", Tok::Comma},  {".", Tok::Dot},     {":", Tok::Colon},   {"/", Tok::Slash},
            {"~", Tok::Not},    {"&", Tok::And},     {"|", Tok::Or},      {"=", Tok::Eq},
            {"!", Tok::Bang},   {"?", Tok::Question},
        };
        for (const auto& [s, kind] : table) {
            if (starts_with(s)) {
                text = std::string(s);
                for (std::size_t i = 0; i < s.size(); ++i) advance();
                return kind;
            }
        }
        throw SyntaxError({line_, col_}, std::string("a token, found '") + src_[pos_] + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::Colon: return "':'";
        case Tok::Slash: return "'/'";
        case Tok::Not: return "'~'";
        case Tok::And: return "'&'";
        case Tok::Or: return "'|'";
        case Tok::Implies: return "'=>'";
        case Tok::Iff: return "'<=>'";
        case Tok::Arrow: return "'<-'";
        case Tok::Eq: return "'='";
        case Tok::Neq: return "'~='";
        case Tok::Bang: return "'!'";
        case Tok::Question: return "'?'";
        case Tok::End: return "end of input";
    }
    return "token";
}

bool is_keyword(const std::string& s) {
    return s == "pred" || s == "func" || s == "const" || s == "true" || s == "false";
}

std::string at(SourceLoc loc) { return std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": "; }

struct Binder {
    std::string name;
    BinderKind kind;
    std::size_t arity;
};

class Parser {
public:
    Parser(std::string_view text, Vocabulary vocab) : toks_(Lexer(text).run()), vocab_(std::move(vocab)) {}

    Theory theory() {
        Theory th;
        while (!check(Tok::End)) {
            if (check_keyword("pred") || check_keyword("func") || check_keyword("const")) {
                declaration();
                continue;
            }
            Formula f = formula();
            if (!accept(Tok::Dot) && toks_[pos_ - 1].kind != Tok::RBrace) expect(Tok::Dot);
            th.axioms.push_back(std::move(f));
        }
        th.vocab = vocab_;
        return th;
    }

    Formula single_formula() {
        Formula f = formula();
        accept(Tok::Dot);
        expect(Tok::End);
        return f;
    }

    Definition single_definition() {
        expect(Tok::LBrace);
        Definition d = definition_body();
        accept(Tok::Dot);
        expect(Tok::End);
        return d;
    }

private:
    // Token helpers -------------------------------------------------------

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool check(Tok k) const { return peek().kind == k; }
    bool check_keyword(const char* kw) const { return check(Tok::Ident) && peek().text == kw; }
    bool accept(Tok k) {
        if (!check(k)) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok k) {
        if (!check(k)) throw SyntaxError(peek().loc, describe(k));
        return toks_[pos_++];
    }
    const Token& expect_name(const char* what) {
        if (!check(Tok::Ident) || is_keyword(peek().text)) throw SyntaxError(peek().loc, what);
        return toks_[pos_++];
    }
    std::size_t arity() {
        const Token& t = expect(Tok::Ident);
        if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), ::isdigit))
            throw SyntaxError(t.loc, "an arity");
        return static_cast<std::size_t>(std::stoul(t.text));
    }

    // Declarations --------------------------------------------------------

    void declare(const Token& name, SymbolKind kind, std::size_t n) {
        if (const Symbol* s = vocab_.find(name.text)) {
            if (s->kind != kind || s->arity != n)
                throw ArityError(at(name.loc) + "'" + name.text + "' redeclared with a different kind or arity");
            return;
        }
        vocab_.add({name.text, kind, n});
    }

    void declaration() {
        const std::string kw = toks_[pos_++].text;
        do {
            const Token& name = expect_name("a symbol name");
            if (kw == "const") {
                declare(name, SymbolKind::Function, 0);
            } else if (kw == "func") {
                expect(Tok::Slash);
                declare(name, SymbolKind::Function, arity());
            } else {
                std::size_t n = 0;
                if (accept(Tok::Slash)) n = arity();
                declare(name, SymbolKind::Predicate, n);
            }
        } while (accept(Tok::Comma));
        expect(Tok::Dot);
    }

    // Name resolution -----------------------------------------------------

    const Binder* bound(const std::string& name) const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (it->name == name) return &*it;
        return nullptr;
    }

    bool is_rule_var(const std::string& name) const {
        return rule_vars_ && std::find(rule_vars_->begin(), rule_vars_->end(), name) != rule_vars_->end();
    }

    std::optional<std::size_t> predicate_arity(const std::string& name) const {
        if (const Binder* b = bound(name)) {
            if (b->kind == BinderKind::Predicate) return b->arity;
            return std::nullopt;
        }
        if (is_rule_var(name)) return std::nullopt;
        if (const Symbol* s = vocab_.find(name); s && s->is_predicate()) return s->arity;
        return std::nullopt;
    }

    // Terms ---------------------------------------------------------------

    std::vector<Term> term_args() {
        std::vector<Term> args;
        if (!accept(Tok::LParen)) return args;
        do {
            args.push_back(term());
        } while (accept(Tok::Comma));
        expect(Tok::RParen);
        return args;
    }

    Term term() {
        const Token& name = expect_name("a term");
        const bool has_args = check(Tok::LParen);
        if (const Binder* b = bound(name.text)) {
            if (b->kind == BinderKind::Object) {
                if (has_args) throw ArityError(at(name.loc) + "variable '" + name.text + "' applied to arguments");
                return Term::var(name.text);
            }
            if (b->kind == BinderKind::Function) return application(name, b->arity);
            throw SyntaxError(name.loc, "a term, found predicate '" + name.text + "'");
        }
        if (is_rule_var(name.text)) {
            if (has_args) throw ArityError(at(name.loc) + "variable '" + name.text + "' applied to arguments");
            return Term::var(name.text);
        }
        if (const Symbol* s = vocab_.find(name.text)) {
            if (s->is_predicate()) throw SyntaxError(name.loc, "a term, found predicate '" + name.text + "'");
            return application(name, s->arity);
        }
        if (rule_vars_ && !has_args) {
            rule_vars_->push_back(name.text);
            return Term::var(name.text);
        }
        throw UndeclaredSymbol(at(name.loc) + "'" + name.text + "' is not declared");
    }

    Term application(const Token& name, std::size_t expected) {
        std::vector<Term> args = term_args();
        if (args.size() != expected)
            throw ArityError(at(name.loc) + "'" + name.text + "' expects " + std::to_string(expected) +
                             " argument(s), got " + std::to_string(args.size()));
        return Term::apply(name.text, std::move(args));
    }

    // Formulas ------------------------------------------------------------

    Formula formula() { return equivalence(); }

    Formula equivalence() {
        Formula lhs = implication();
        if (accept(Tok::Iff)) return iff(lhs, implication());
        return lhs;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (accept(Tok::Implies)) return implies(lhs, implication());
        return lhs;
    }

    Formula disjunction() {
        Formula lhs = conjunction();
        while (accept(Tok::Or)) lhs = disj(lhs, conjunction());
        return lhs;
    }

    Formula conjunction() {
        Formula lhs = unary();
        while (accept(Tok::And)) lhs = conj(lhs, unary());
        return lhs;
    }

    Formula unary() {
        if (accept(Tok::Not)) return negate(unary());
        if (check(Tok::Bang) || check(Tok::Question)) return quantified();
        return primary();
    }

    Formula quantified() {
        const Token& q = toks_[pos_++];
        const Quantifier quant = q.kind == Tok::Bang ? Quantifier::Forall : Quantifier::Exists;
        std::vector<Binder> binders;
        while (!check(Tok::Colon)) {
            if (check_keyword("pred") || check_keyword("func")) {
                const bool pred = peek().text == "pred";
                ++pos_;
                const Token& name = expect_name("a bound symbol name");
                expect(Tok::Slash);
                binders.push_back({name.text, pred ? BinderKind::Predicate : BinderKind::Function, arity()});
            } else {
                const Token& name = expect_name("a bound symbol name or ':'");
                if (accept(Tok::Slash))
                    binders.push_back({name.text, BinderKind::Predicate, arity()});
                else
                    binders.push_back({name.text, BinderKind::Object, 0});
            }
            if (rule_vars_ && binders.back().kind != BinderKind::Object)
                throw SyntaxError(q.loc, "a first-order rule body (second-order quantifier not allowed)");
        }
        if (binders.empty()) throw SyntaxError(peek().loc, "a bound symbol");
        expect(Tok::Colon);
        const std::size_t mark = scope_.size();
        scope_.insert(scope_.end(), binders.begin(), binders.end());
        Formula body = formula();
        scope_.resize(mark);
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
            body = quantify(quant, it->kind, it->name, it->arity, body);
        return body;
    }

    Formula primary() {
        if (accept(Tok::LParen)) {
            Formula f = formula();
            expect(Tok::RParen);
            return f;
        }
        if (check_keyword("true")) {
            ++pos_;
            return truth(true);
        }
        if (check_keyword("false")) {
            ++pos_;
            return truth(false);
        }
        if (check(Tok::LBrace)) {
            if (rule_vars_)
                throw SyntaxError(peek().loc, "a first-order rule body (definitions cannot be nested)");
            ++pos_;
            return definition(definition_body());
        }
        if (!check(Tok::Ident) || is_keyword(peek().text)) throw SyntaxError(peek().loc, "a formula");

        const Token& name = peek();
        if (auto n = predicate_arity(name.text)) {
            ++pos_;
            std::vector<Term> args = term_args();
            if (args.size() != *n)
                throw ArityError(at(name.loc) + "predicate '" + name.text + "' expects " + std::to_string(*n) +
                                 " argument(s), got " + std::to_string(args.size()));
            return atom(name.text, std::move(args));
        }
        if (!bound(name.text) && !is_rule_var(name.text) && !vocab_.contains(name.text) && peek(1).kind == Tok::LParen)
            throw UndeclaredSymbol(at(name.loc) + "'" + name.text + "' is not declared");
        Term lhs = term();
        if (accept(Tok::Eq)) return equal(lhs, term());
        if (accept(Tok::Neq)) return negate(equal(lhs, term()));
        throw SyntaxError(peek().loc, "'=' after term");
    }

    // Definitions ---------------------------------------------------------

    Definition definition_body() {
        Definition def;
        while (!accept(Tok::RBrace)) def.rules.push_back(rule());
        if (def.rules.empty()) throw SyntaxError(toks_[pos_ - 1].loc, "at least one rule");
        return def;
    }

    Rule rule() {
        Rule r;
        r.loc = peek().loc;
        std::vector<std::string> vars;
        if (accept(Tok::Bang)) {
            while (!accept(Tok::Colon)) vars.push_back(expect_name("a rule variable").text);
        }
        rule_vars_ = &vars;
        const Token& head = expect_name("a rule head");
        auto n = predicate_arity(head.text);
        if (!n) {
            rule_vars_ = nullptr;
            if (!vocab_.contains(head.text))
                throw UndeclaredSymbol(at(head.loc) + "'" + head.text + "' is not declared");
            throw SyntaxError(head.loc, "a predicate in the rule head");
        }
        r.head = head.text;
        try {
            r.head_args = term_args();
            if (r.head_args.size() != *n)
                throw ArityError(at(head.loc) + "predicate '" + head.text + "' expects " + std::to_string(*n) +
                                 " argument(s), got " + std::to_string(r.head_args.size()));
            if (accept(Tok::Arrow)) {
                r.body = formula();
            } else {
                r.body = truth(true);
            }
            expect(Tok::Dot);
        } catch (...) {
            rule_vars_ = nullptr;
            throw;
        }
        rule_vars_ = nullptr;
        r.vars = std::move(vars);
        return r;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Vocabulary vocab_;
    std::vector<Binder> scope_;
    std::vector<std::string>* rule_vars_ = nullptr;
};

}  // namespace

Theory parse_theory(std::string_view text) { return Parser(text, Vocabulary{}).theory(); }

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
    return Parser(text, vocab).single_formula();
}

Definition parse_definition(std::string_view text, const Vocabulary& vocab) {
    return Parser(text, vocab).single_definition();
}

}  // namespace idlogic
