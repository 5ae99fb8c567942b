#ifndef CONDASP_FORMULA_HPP
#define CONDASP_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "condasp/answer_set.hpp"
#include "condasp/atom.hpp"

namespace condasp {

/// A formula of the typicality language: ground atoms, the boolean
/// connectives, and a non-nestable typicality operator T(...).
///
/// Formulas are immutable trees sharing structure freely; copying a
/// Formula copies a pointer.
class Formula {
public:
    enum class Kind { Atom, Top, Bottom, Not, And, Or, Implies, Typ };

    Formula() : Formula(top()) {}

    static Formula atom(Atom a);
    static Formula atom(std::string_view predicate);
    static Formula top();
    static Formula bottom();
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula typicality(Formula f);

    Kind kind() const { return node_->kind; }
    const Atom& atom_value() const { return node_->atom; }
    /// Single child of Not / Typ, left child of binary connectives.
    Formula lhs() const { return Formula(node_->lhs); }
    Formula rhs() const { return Formula(node_->rhs); }

    bool contains_typ() const;
    /// Atoms occurring anywhere in the formula, deduplicated, in canonical
    /// order.
    std::vector<Atom> atoms() const;

    /// Structural equality.
    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    std::string to_string() const;

    /// Identity of the underlying node, usable as a cache key.
    const void* id() const { return node_.get(); }

private:
    struct Node {
        Kind kind;
        Atom atom;  // Kind::Atom only
        std::shared_ptr<const Node> lhs, rhs;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Checks the structural restrictions on typicality: T may not be nested,
/// and the argument of T is a boolean combination built with and/or/not
/// only (no implication, no truth constants).
/// Throws Error{NestedTypicality} or Error{ForbiddenInsideTyp}.
void validate_formula(const Formula& f);

/// Classical propositional truth of a T-free formula in the interpretation
/// where exactly the atoms of `s` are true.
/// Throws Error{TypNotAllowed} if `f` contains a typicality operator.
bool eval_classical(const AnswerSet& s, const Formula& f);

}  // namespace condasp

#endif
