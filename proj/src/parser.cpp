#include "condasp/parser.hpp"

#include <cctype>
#include <set>
#include <utility>

#include "condasp/error.hpp"

namespace condasp {

namespace {

enum class Tok {
    Ident,     // lowercase-led name
    Variable,  // uppercase-led name (includes `T`)
    Integer,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semicolon,
    Dot,
    If,     // :-
    Colon,  // :
    At,     // @
    Eq,     // =
    Neq,    // !=
    Amp,    // &
    Pipe,   // |
    Tilde,  // ~
    Arrow,  // ->
    Minus,  // -
    True,   // #true
    False,  // #false
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    SourceSpan span;
};

[[noreturn]] void fail(const SourceSpan& span, ErrorCode code, std::string message) {
    throw ParseError(code, span.to_string() + ": " + std::move(message), span);
}

class Lexer {
  public:
    Lexer(std::string_view text, std::string filename)
        : text_(text), file_(std::move(filename)) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_space();
            Token t = next();
            const bool end = t.kind == Tok::End;
            tokens.push_back(std::move(t));
            if (end) return tokens;
        }
    }

  private:
    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    SourceSpan here() const { return SourceSpan{file_, line_, col_, line_, col_}; }

    Token make(Tok kind, const SourceSpan& begin, std::string text = {}) {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.span = begin;
        t.span.line_end = line_;
        t.span.column_end = col_ > 1 ? col_ - 1 : 1;
        return t;
    }

    Token next() {
        if (pos_ >= text_.size()) return make(Tok::End, here());
        const SourceSpan begin = here();
        const char c = text_[pos_];

        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                word.push_back(text_[pos_]);
                advance();
            }
            const bool upper = std::isupper(static_cast<unsigned char>(word[0]));
            return make(upper ? Tok::Variable : Tok::Ident, begin, std::move(word));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits.push_back(text_[pos_]);
                advance();
            }
            Token t = make(Tok::Integer, begin, digits);
            try {
                t.value = std::stoll(digits);
            } catch (const std::out_of_range&) {
                fail(t.span, ErrorCode::SyntaxError, "integer literal out of range: " + digits);
            }
            return t;
        }

        advance();
        switch (c) {
            case '(': return make(Tok::LParen, begin);
            case ')': return make(Tok::RParen, begin);
            case '{': return make(Tok::LBrace, begin);
            case '}': return make(Tok::RBrace, begin);
            case ',': return make(Tok::Comma, begin);
            case ';': return make(Tok::Semicolon, begin);
            case '=': return make(Tok::Eq, begin);
            case '&': return make(Tok::Amp, begin);
            case '|': return make(Tok::Pipe, begin);
            case '~': return make(Tok::Tilde, begin);
            case '@': return make(Tok::At, begin);
            case '.':
                if (pos_ < text_.size() && text_[pos_] == '.') {
                    advance();
                    fail(make(Tok::End, begin).span, ErrorCode::UnsupportedConstruct,
                         "interval `..` is not supported");
                }
                return make(Tok::Dot, begin);
            case ':':
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    advance();
                    return make(Tok::If, begin);
                }
                if (pos_ < text_.size() && text_[pos_] == '~') {
                    advance();
                    fail(make(Tok::End, begin).span, ErrorCode::UnsupportedConstruct,
                         "weak constraints `:~` are not supported");
                }
                return make(Tok::Colon, begin);
            case '!':
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    advance();
                    return make(Tok::Neq, begin);
                }
                fail(begin, ErrorCode::SyntaxError, "stray `!` (did you mean `!=`?)");
            case '-':
                if (pos_ < text_.size() && text_[pos_] == '>') {
                    advance();
                    return make(Tok::Arrow, begin);
                }
                return make(Tok::Minus, begin);
            case '_':
                fail(begin, ErrorCode::SyntaxError,
                     "names starting with `_` are reserved for internal atoms");
            case '#': {
                std::string word;
                while (pos_ < text_.size() &&
                       std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                    word.push_back(text_[pos_]);
                    advance();
                }
                if (word == "true") return make(Tok::True, begin);
                if (word == "false") return make(Tok::False, begin);
                Token t = make(Tok::End, begin);
                fail(t.span, ErrorCode::UnsupportedConstruct,
                     "directive `#" + word + "` is not supported");
            }
            default:
                fail(begin, ErrorCode::SyntaxError,
                     std::string("unexpected character `") + c + "`");
        }
    }

    std::string_view text_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

/// Recursive-descent parser over the token list. Shared by the three entry
/// points; each uses the subset of productions it needs.
class Parser {
  public:
    Parser(std::string_view text, std::string filename)
        : tokens_(Lexer(text, filename).run()) {}

    Program parse_program() {
        Program program;
        while (!at(Tok::End)) program.rules.push_back(parse_rule());
        return program;
    }

    ConditionalKB parse_kb() {
        ConditionalKB kb;
        while (!at(Tok::End)) parse_kb_line(kb);
        kb.validate();
        return kb;
    }

    Formula parse_query() {
        const Formula f = parse_formula(true);
        expect(Tok::End, "end of query");
        if (f.kind() != Formula::Kind::Implies) {
            fail(tokens_.front().span, ErrorCode::SyntaxError,
                 "a query must be an implication `antecedent -> consequent`");
        }
        validate_formula(f);  // defense in depth; the parser already checks
        return f;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = index_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool at(Tok kind) const { return peek().kind == kind; }
    Token take() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }

    Token expect(Tok kind, const std::string& what) {
        if (!at(kind)) {
            fail(peek().span, ErrorCode::SyntaxError,
                 "expected " + what + ", found `" + describe(peek()) + "`");
        }
        return take();
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Tok::Ident:
            case Tok::Variable:
            case Tok::Integer: return t.text;
            case Tok::LParen: return "(";
            case Tok::RParen: return ")";
            case Tok::LBrace: return "{";
            case Tok::RBrace: return "}";
            case Tok::Comma: return ",";
            case Tok::Semicolon: return ";";
            case Tok::Dot: return ".";
            case Tok::If: return ":-";
            case Tok::Colon: return ":";
            case Tok::At: return "@";
            case Tok::Eq: return "=";
            case Tok::Neq: return "!=";
            case Tok::Amp: return "&";
            case Tok::Pipe: return "|";
            case Tok::Tilde: return "~";
            case Tok::Arrow: return "->";
            case Tok::Minus: return "-";
            case Tok::True: return "#true";
            case Tok::False: return "#false";
            case Tok::End: return "end of input";
        }
        return "?";
    }

    // ----- program rules ---------------------------------------------------

    Rule parse_rule() {
        Rule rule;
        rule.span = peek().span;
        if (at(Tok::If)) {
            take();
            rule.head = std::monostate{};
            rule.body = parse_body();
        } else {
            if (at(Tok::Integer) || at(Tok::LBrace)) {
                rule.head = parse_choice_head();
            } else {
                rule.head = parse_atom_schema();
                if (at(Tok::Pipe)) {
                    fail(peek().span, ErrorCode::UnsupportedConstruct,
                         "disjunctive heads are not supported");
                }
            }
            if (at(Tok::If)) {
                take();
                rule.body = parse_body();
            }
        }
        const Token dot = expect(Tok::Dot, "`.` at end of rule");
        rule.span.line_end = dot.span.line_end;
        rule.span.column_end = dot.span.column_end;
        check_safety(rule);
        return rule;
    }

    ChoiceHead parse_choice_head() {
        ChoiceHead choice;
        if (at(Tok::Integer)) choice.lower = static_cast<int>(take().value);
        expect(Tok::LBrace, "`{`");
        choice.atoms.push_back(parse_atom_schema());
        while (at(Tok::Semicolon)) {
            take();
            choice.atoms.push_back(parse_atom_schema());
        }
        expect(Tok::RBrace, "`}`");
        if (at(Tok::Integer)) choice.upper = static_cast<int>(take().value);
        return choice;
    }

    std::vector<BodyElement> parse_body() {
        std::vector<BodyElement> body;
        if (at(Tok::Dot)) return body;  // `:- .` — empty body, always true
        body.push_back(parse_body_element());
        while (at(Tok::Comma)) {
            take();
            body.push_back(parse_body_element());
        }
        return body;
    }

    BodyElement parse_body_element() {
        // `not atom`
        if (at(Tok::Ident) && peek().text == "not") {
            take();
            return BodyElement::negated(parse_atom_schema());
        }
        // `n { a; b }` — cardinality lower bound (an upper bound after the
        // closing brace is only legal in choice heads)
        if (at(Tok::Integer) && peek(1).kind == Tok::LBrace) {
            const Token bound = take();
            expect(Tok::LBrace, "`{`");
            std::vector<AtomSchema> atoms;
            atoms.push_back(parse_atom_schema());
            while (at(Tok::Semicolon)) {
                take();
                atoms.push_back(parse_atom_schema());
            }
            expect(Tok::RBrace, "`}`");
            if (at(Tok::Integer)) {
                fail(peek().span, ErrorCode::UnsupportedConstruct,
                     "upper bounds on body cardinality literals are not supported");
            }
            return BodyElement::cardinality(static_cast<int>(bound.value), std::move(atoms));
        }
        // an atom, or the left-hand term of a comparison
        if (at(Tok::Ident)) {
            const Token name = peek();
            AtomSchema atom = parse_atom_schema();
            if (at(Tok::Eq) || at(Tok::Neq)) {
                if (!atom.args.empty()) {
                    fail(name.span, ErrorCode::SyntaxError,
                         "comparisons relate constants, integers, or variables, not "
                         "compound atoms");
                }
                const ComparisonOp op = take().kind == Tok::Eq ? ComparisonOp::Eq
                                                               : ComparisonOp::Neq;
                return BodyElement::comparison(
                    Term::constant(Constant::symbol(name.text)), op, parse_term());
            }
            return BodyElement::positive(std::move(atom));
        }
        // variable / integer: must be a comparison
        if (at(Tok::Variable) || at(Tok::Integer) || at(Tok::Minus)) {
            const SourceSpan begin = peek().span;
            Term left = parse_term();
            if (!at(Tok::Eq) && !at(Tok::Neq)) {
                fail(begin, ErrorCode::SyntaxError,
                     left.is_variable()
                         ? "a bare variable is not an atom (expected `=` or `!=`)"
                         : "an integer is not an atom (expected `=` or `!=`)");
            }
            const ComparisonOp op = take().kind == Tok::Eq ? ComparisonOp::Eq
                                                           : ComparisonOp::Neq;
            return BodyElement::comparison(std::move(left), op, parse_term());
        }
        fail(peek().span, ErrorCode::SyntaxError,
             "expected a body literal, found `" + describe(peek()) + "`");
    }

    AtomSchema parse_atom_schema() {
        if (at(Tok::Minus) && peek(1).kind == Tok::Ident) {
            fail(peek().span, ErrorCode::UnsupportedConstruct,
                 "classical negation `-" + peek(1).text + "` is not supported");
        }
        const Token name = expect(Tok::Ident, "a predicate name");
        if (name.text == "not") {
            fail(name.span, ErrorCode::SyntaxError, "`not` is a reserved word");
        }
        AtomSchema atom{Symbol::intern(name.text)};
        if (at(Tok::LParen)) {
            take();
            atom.args.push_back(parse_term());
            while (at(Tok::Comma)) {
                take();
                atom.args.push_back(parse_term());
            }
            expect(Tok::RParen, "`)`");
        }
        return atom;
    }

    Term parse_term() {
        if (at(Tok::Ident)) return Term::constant(Constant::symbol(take().text));
        if (at(Tok::Variable)) return Term::variable(take().text);
        if (at(Tok::Integer)) return Term::constant(Constant::integer(take().value));
        if (at(Tok::Minus)) {
            const Token minus = take();
            if (at(Tok::Integer)) return Term::constant(Constant::integer(-take().value));
            fail(minus.span, ErrorCode::UnsupportedConstruct,
                 "classical negation `-` is not supported");
        }
        fail(peek().span, ErrorCode::SyntaxError,
             "expected a term, found `" + describe(peek()) + "`");
    }

    void check_safety(const Rule& rule) {
        std::set<Symbol> bound;
        for (const BodyElement& e : rule.body) {
            if (e.kind == BodyElement::Kind::PositiveAtom) {
                for (const Term& t : e.atom.args)
                    if (t.is_variable()) bound.insert(t.variable_name());
            }
        }
        auto check_atom = [&](const AtomSchema& atom) {
            for (const Term& t : atom.args) {
                if (t.is_variable() && !bound.count(t.variable_name())) {
                    fail(rule.span, ErrorCode::UnsafeVariable,
                         "variable " + t.variable_name().str() +
                             " has no positive body occurrence");
                }
            }
        };
        auto check_term = [&](const Term& t) {
            if (t.is_variable() && !bound.count(t.variable_name())) {
                fail(rule.span, ErrorCode::UnsafeVariable,
                     "variable " + t.variable_name().str() +
                         " has no positive body occurrence");
            }
        };
        if (rule.has_normal_head()) check_atom(rule.normal_head());
        if (rule.has_choice_head())
            for (const AtomSchema& a : rule.choice_head().atoms) check_atom(a);
        for (const BodyElement& e : rule.body) {
            switch (e.kind) {
                case BodyElement::Kind::PositiveAtom: break;
                case BodyElement::Kind::NegatedAtom: check_atom(e.atom); break;
                case BodyElement::Kind::Comparison:
                    check_term(e.left);
                    check_term(e.right);
                    break;
                case BodyElement::Kind::CardinalityLower:
                    for (const AtomSchema& a : e.atoms) check_atom(a);
                    break;
            }
        }
    }

    // ----- knowledge base ---------------------------------------------------

    void parse_kb_line(ConditionalKB& kb) {
        const Token t = peek();
        if (!(t.kind == Tok::Variable && t.text == "T")) {
            fail(t.span, ErrorCode::SyntaxError,
                 "a conditional starts with `T(`, found `" + describe(t) + "`");
        }
        take();
        expect(Tok::LParen, "`(` after `T`");
        const Atom subject = parse_ground_atom();
        expect(Tok::RParen, "`)` after the subject atom");
        expect(Tok::Arrow, "`->`");
        const Formula consequent = parse_formula_until_separator();
        if (at(Tok::Colon)) {
            take();
            for (const RankedConditional& other : kb.ranked) {
                if (other.subject == subject) {
                    fail(t.span, ErrorCode::MixedStrategyForSubject,
                         "subject " + subject.to_string() +
                             " already has ranked conditionals");
                }
            }
            std::int64_t sign = 1;
            if (at(Tok::Minus)) {
                take();
                sign = -1;
            }
            const Token w = expect(Tok::Integer, "an integer weight");
            WeightedConditional c;
            c.subject = subject;
            c.consequent = consequent;
            c.weight = sign * w.value;
            c.span = t.span;
            const Token dot = expect(Tok::Dot, "`.` at end of conditional");
            c.span.line_end = dot.span.line_end;
            c.span.column_end = dot.span.column_end;
            kb.weighted.push_back(std::move(c));
        } else if (at(Tok::At)) {
            take();
            for (const WeightedConditional& other : kb.weighted) {
                if (other.subject == subject) {
                    fail(t.span, ErrorCode::MixedStrategyForSubject,
                         "subject " + subject.to_string() +
                             " already has weighted conditionals");
                }
            }
            const Token r = expect(Tok::Integer, "a non-negative rank");
            RankedConditional c;
            c.subject = subject;
            c.consequent = consequent;
            c.rank = static_cast<std::uint32_t>(r.value);
            c.span = t.span;
            const Token dot = expect(Tok::Dot, "`.` at end of conditional");
            c.span.line_end = dot.span.line_end;
            c.span.column_end = dot.span.column_end;
            kb.ranked.push_back(std::move(c));
        } else {
            fail(peek().span, ErrorCode::SyntaxError,
                 "expected `: weight` or `@ rank`, found `" + describe(peek()) + "`");
        }
    }

    Atom parse_ground_atom() {
        const Token name = expect(Tok::Ident, "a ground atom");
        if (name.text == "not") {
            fail(name.span, ErrorCode::SyntaxError, "`not` is a reserved word");
        }
        Atom atom = Atom::make(name.text);
        if (at(Tok::LParen)) {
            take();
            atom.args.push_back(parse_ground_constant());
            while (at(Tok::Comma)) {
                take();
                atom.args.push_back(parse_ground_constant());
            }
            expect(Tok::RParen, "`)`");
        }
        return atom;
    }

    Constant parse_ground_constant() {
        if (at(Tok::Ident)) return Constant::symbol(take().text);
        if (at(Tok::Integer)) return Constant::integer(take().value);
        if (at(Tok::Minus)) {
            take();
            const Token n = expect(Tok::Integer, "an integer");
            return Constant::integer(-n.value);
        }
        fail(peek().span, ErrorCode::SyntaxError,
             "expected a constant, found `" + describe(peek()) + "`");
    }

    // In a KB consequent no typicality is allowed; `:` / `@` terminate the
    // formula naturally because no production consumes them.
    Formula parse_formula_until_separator() { return parse_formula(false); }

    // ----- formulas ----------------------------------------------------------
    //
    // implication (right assoc, lowest)  <-  disjunction  <-  conjunction
    //   <-  unary (~, not, T(...), atom, #true, #false, parens)

    Formula parse_formula(bool allow_typ) { return parse_implication(allow_typ, false); }

    Formula parse_implication(bool allow_typ, bool in_typ) {
        Formula lhs = parse_disjunction(allow_typ, in_typ);
        if (at(Tok::Arrow)) {
            const Token arrow = take();
            if (in_typ) {
                fail(arrow.span, ErrorCode::ForbiddenInsideTyp,
                     "implication may not appear under T(...)");
            }
            return Formula::implication(lhs, parse_implication(allow_typ, in_typ));
        }
        return lhs;
    }

    Formula parse_disjunction(bool allow_typ, bool in_typ) {
        Formula lhs = parse_conjunction(allow_typ, in_typ);
        while (at(Tok::Pipe)) {
            take();
            lhs = Formula::disjunction(lhs, parse_conjunction(allow_typ, in_typ));
        }
        return lhs;
    }

    Formula parse_conjunction(bool allow_typ, bool in_typ) {
        Formula lhs = parse_unary(allow_typ, in_typ);
        while (at(Tok::Amp)) {
            take();
            lhs = Formula::conjunction(lhs, parse_unary(allow_typ, in_typ));
        }
        return lhs;
    }

    Formula parse_unary(bool allow_typ, bool in_typ) {
        const Token t = peek();
        switch (t.kind) {
            case Tok::Tilde:
                take();
                return Formula::negation(parse_unary(allow_typ, in_typ));
            case Tok::Ident:
                if (t.text == "not" && allow_typ) {  // alias for `~` in queries
                    take();
                    return Formula::negation(parse_unary(allow_typ, in_typ));
                }
                return Formula::atom(parse_ground_atom());
            case Tok::True:
                take();
                if (in_typ) {
                    fail(t.span, ErrorCode::ForbiddenInsideTyp,
                         "#true may not appear under T(...)");
                }
                return Formula::top();
            case Tok::False:
                take();
                if (in_typ) {
                    fail(t.span, ErrorCode::ForbiddenInsideTyp,
                         "#false may not appear under T(...)");
                }
                return Formula::bottom();
            case Tok::LParen: {
                take();
                Formula inner = parse_implication(allow_typ, in_typ);
                expect(Tok::RParen, "`)`");
                return inner;
            }
            case Tok::Variable:
                if (t.text == "T" && peek(1).kind == Tok::LParen) {
                    if (in_typ) {
                        fail(t.span, ErrorCode::NestedTypicality,
                             "typicality operator may not be nested");
                    }
                    if (!allow_typ) {
                        fail(t.span, ErrorCode::TypInConsequent,
                             "typicality operator may not appear in a conditional "
                             "consequent");
                    }
                    take();
                    take();  // (
                    Formula inner = parse_implication(allow_typ, true);
                    expect(Tok::RParen, "`)` closing T(...)");
                    return Formula::typicality(inner);
                }
                fail(t.span, ErrorCode::SyntaxError,
                     "variables cannot occur in formulas: `" + t.text + "`");
            default:
                fail(t.span, ErrorCode::SyntaxError,
                     "expected a formula, found `" + describe(t) + "`");
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

Program parse_program(std::string_view text, std::string filename) {
    return Parser(text, std::move(filename)).parse_program();
}

ConditionalKB parse_kb(std::string_view text, std::string filename) {
    return Parser(text, std::move(filename)).parse_kb();
}

Formula parse_query(std::string_view text, std::string filename) {
    return Parser(text, std::move(filename)).parse_query();
}

}  // namespace condasp
