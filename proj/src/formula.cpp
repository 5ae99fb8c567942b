#include "condasp/formula.hpp"

#include <algorithm>
#include <sstream>

#include "condasp/error.hpp"

namespace condasp {

Formula Formula::atom(Atom a) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atom;
    node->atom = std::move(a);
    return Formula(std::move(node));
}

Formula Formula::atom(std::string_view predicate) { return atom(Atom::make(predicate)); }

Formula Formula::top() {
    static const std::shared_ptr<const Node> node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Top;
        return n;
    }();
    return Formula(node);
}

Formula Formula::bottom() {
    static const std::shared_ptr<const Node> node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Bottom;
        return n;
    }();
    return Formula(node);
}

Formula Formula::negation(Formula f) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Not;
    node->lhs = f.node_;
    return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::And;
    node->lhs = lhs.node_;
    node->rhs = rhs.node_;
    return Formula(std::move(node));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Or;
    node->lhs = lhs.node_;
    node->rhs = rhs.node_;
    return Formula(std::move(node));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Implies;
    node->lhs = lhs.node_;
    node->rhs = rhs.node_;
    return Formula(std::move(node));
}

Formula Formula::typicality(Formula f) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Typ;
    node->lhs = f.node_;
    return Formula(std::move(node));
}

bool Formula::contains_typ() const {
    switch (kind()) {
        case Kind::Typ: return true;
        case Kind::Atom:
        case Kind::Top:
        case Kind::Bottom: return false;
        case Kind::Not: return lhs().contains_typ();
        case Kind::And:
        case Kind::Or:
        case Kind::Implies: return lhs().contains_typ() || rhs().contains_typ();
    }
    return false;
}

namespace {

void collect_atoms(const Formula& f, std::vector<Atom>& out) {
    switch (f.kind()) {
        case Formula::Kind::Atom: out.push_back(f.atom_value()); break;
        case Formula::Kind::Top:
        case Formula::Kind::Bottom: break;
        case Formula::Kind::Not:
        case Formula::Kind::Typ: collect_atoms(f.lhs(), out); break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            collect_atoms(f.lhs(), out);
            collect_atoms(f.rhs(), out);
            break;
    }
}

}  // namespace

std::vector<Atom> Formula::atoms() const {
    std::vector<Atom> out;
    collect_atoms(*this, out);
    std::sort(out.begin(), out.end(), atom_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Formula::Kind::Atom: return a.atom_value() == b.atom_value();
        case Formula::Kind::Top:
        case Formula::Kind::Bottom: return true;
        case Formula::Kind::Not:
        case Formula::Kind::Typ: return a.lhs() == b.lhs();
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

namespace {

// Precedence for printing with minimal parentheses: implication binds
// loosest, then disjunction, conjunction, negation; atoms and T(...) never
// need parentheses. `&` and `|` print as left-associative, `->` as
// right-associative, matching the parser.
int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        case Formula::Kind::Not: return 4;
        default: return 5;
    }
}

void print(const Formula& f, std::ostringstream& out, int parent_prec) {
    const int prec = precedence(f.kind());
    switch (f.kind()) {
        case Formula::Kind::Atom: out << f.atom_value().to_string(); return;
        case Formula::Kind::Top: out << "#true"; return;
        case Formula::Kind::Bottom: out << "#false"; return;
        case Formula::Kind::Typ:
            out << "T(";
            print(f.lhs(), out, 0);
            out << ')';
            return;
        case Formula::Kind::Not: {
            const bool parens = parent_prec > prec;
            if (parens) out << '(';
            out << '~';
            print(f.lhs(), out, prec);
            if (parens) out << ')';
            return;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies: {
            const bool parens = parent_prec > prec ||
                                (parent_prec == prec && f.kind() != Formula::Kind::Implies);
            const char* op = f.kind() == Formula::Kind::And   ? " & "
                             : f.kind() == Formula::Kind::Or  ? " | "
                                                              : " -> ";
            if (parens) out << '(';
            // Left-associative operators reuse their precedence on the left
            // child; the right child needs one notch more to force parens on
            // an equal-precedence subtree. Implication mirrors this.
            const bool right_assoc = f.kind() == Formula::Kind::Implies;
            print(f.lhs(), out, right_assoc ? prec + 1 : prec);
            out << op;
            print(f.rhs(), out, right_assoc ? prec : prec + 1);
            if (parens) out << ')';
            return;
        }
    }
}

}  // namespace

std::string Formula::to_string() const {
    std::ostringstream out;
    print(*this, out, 0);
    return out.str();
}

namespace {

void validate_inside_typ(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return;
        case Formula::Kind::Typ:
            throw Error(ErrorCode::NestedTypicality,
                        "typicality operator may not be nested: " + f.to_string());
        case Formula::Kind::Top:
        case Formula::Kind::Bottom:
        case Formula::Kind::Implies:
            throw Error(ErrorCode::ForbiddenInsideTyp,
                        "only atoms combined with &, |, ~ may appear under T(...): " +
                            f.to_string());
        case Formula::Kind::Not: validate_inside_typ(f.lhs()); return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            validate_inside_typ(f.lhs());
            validate_inside_typ(f.rhs());
            return;
    }
}

}  // namespace

void validate_formula(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Top:
        case Formula::Kind::Bottom: return;
        case Formula::Kind::Typ: validate_inside_typ(f.lhs()); return;
        case Formula::Kind::Not: validate_formula(f.lhs()); return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            validate_formula(f.lhs());
            validate_formula(f.rhs());
            return;
    }
}

bool eval_classical(const AnswerSet& s, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return s.contains(f.atom_value());
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Not: return !eval_classical(s, f.lhs());
        case Formula::Kind::And: return eval_classical(s, f.lhs()) && eval_classical(s, f.rhs());
        case Formula::Kind::Or: return eval_classical(s, f.lhs()) || eval_classical(s, f.rhs());
        case Formula::Kind::Implies:
            return !eval_classical(s, f.lhs()) || eval_classical(s, f.rhs());
        case Formula::Kind::Typ:
            throw Error(ErrorCode::TypNotAllowed,
                        "typicality operator has no classical truth value: " + f.to_string());
    }
    return false;
}

}  // namespace condasp
