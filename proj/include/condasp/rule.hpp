#ifndef CONDASP_RULE_HPP
#define CONDASP_RULE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "condasp/atom.hpp"
#include "condasp/error.hpp"

namespace condasp {

// Rules come in two flavours sharing one shape: as parsed (atoms may carry
// variables, comparisons still present) and ground (constants only,
// comparisons resolved away). The shape is parameterized on the atom type.

enum class ComparisonOp { Eq, Neq };

template <typename AtomT>
struct BasicBodyElement {
    enum class Kind { PositiveAtom, NegatedAtom, Comparison, CardinalityLower };

    Kind kind = Kind::PositiveAtom;
    AtomT atom;                                // PositiveAtom / NegatedAtom
    Term left = Term::constant(Constant{});    // Comparison
    ComparisonOp op = ComparisonOp::Eq;        // Comparison
    Term right = Term::constant(Constant{});   // Comparison
    int lower = 0;                             // CardinalityLower
    std::vector<AtomT> atoms;                  // CardinalityLower

    static BasicBodyElement positive(AtomT a) {
        BasicBodyElement e;
        e.kind = Kind::PositiveAtom;
        e.atom = std::move(a);
        return e;
    }
    static BasicBodyElement negated(AtomT a) {
        BasicBodyElement e;
        e.kind = Kind::NegatedAtom;
        e.atom = std::move(a);
        return e;
    }
    static BasicBodyElement comparison(Term l, ComparisonOp op, Term r) {
        BasicBodyElement e;
        e.kind = Kind::Comparison;
        e.left = std::move(l);
        e.op = op;
        e.right = std::move(r);
        return e;
    }
    static BasicBodyElement cardinality(int lower, std::vector<AtomT> atoms) {
        BasicBodyElement e;
        e.kind = Kind::CardinalityLower;
        e.lower = lower;
        e.atoms = std::move(atoms);
        return e;
    }

    friend bool operator==(const BasicBodyElement& a, const BasicBodyElement& b) {
        return a.kind == b.kind && a.atom == b.atom && a.left == b.left && a.op == b.op &&
               a.right == b.right && a.lower == b.lower && a.atoms == b.atoms;
    }
    friend bool operator!=(const BasicBodyElement& a, const BasicBodyElement& b) {
        return !(a == b);
    }
};

/// Choice head `lower { a1; ...; ak } upper` with optional bounds.
template <typename AtomT>
struct BasicChoiceHead {
    std::optional<int> lower;
    std::vector<AtomT> atoms;
    std::optional<int> upper;

    friend bool operator==(const BasicChoiceHead& a, const BasicChoiceHead& b) {
        return a.lower == b.lower && a.atoms == b.atoms && a.upper == b.upper;
    }
    friend bool operator!=(const BasicChoiceHead& a, const BasicChoiceHead& b) {
        return !(a == b);
    }
};

template <typename AtomT>
struct BasicRule {
    // monostate = constraint (empty head)
    using Head = std::variant<std::monostate, AtomT, BasicChoiceHead<AtomT>>;

    Head head;
    std::vector<BasicBodyElement<AtomT>> body;
    SourceSpan span;  // where the rule was parsed from; irrelevant for equality

    bool is_constraint() const { return std::holds_alternative<std::monostate>(head); }
    bool has_normal_head() const { return std::holds_alternative<AtomT>(head); }
    bool has_choice_head() const {
        return std::holds_alternative<BasicChoiceHead<AtomT>>(head);
    }
    const AtomT& normal_head() const { return std::get<AtomT>(head); }
    const BasicChoiceHead<AtomT>& choice_head() const {
        return std::get<BasicChoiceHead<AtomT>>(head);
    }

    friend bool operator==(const BasicRule& a, const BasicRule& b) {
        return a.head == b.head && a.body == b.body;
    }
    friend bool operator!=(const BasicRule& a, const BasicRule& b) { return !(a == b); }
};

using BodyElement = BasicBodyElement<AtomSchema>;
using ChoiceHead = BasicChoiceHead<AtomSchema>;
using Rule = BasicRule<AtomSchema>;

using GroundBodyElement = BasicBodyElement<Atom>;
using GroundChoiceHead = BasicChoiceHead<Atom>;
using GroundRule = BasicRule<Atom>;

/// A parsed program. Rules are kept in input order; every rule is safe
/// (guaranteed by the parser).
struct Program {
    std::vector<Rule> rules;

    friend bool operator==(const Program& a, const Program& b) { return a.rules == b.rules; }
    friend bool operator!=(const Program& a, const Program& b) { return !(a == b); }
};

/// A fully instantiated program. Rules are sorted canonically and
/// deduplicated; the Herbrand base contains every atom occurring in the
/// rules plus every ground instance of a program predicate over the
/// program's constants.
struct GroundProgram {
    std::vector<GroundRule> rules;
    std::vector<Atom> herbrand_base;  // sorted, unique

    friend bool operator==(const GroundProgram& a, const GroundProgram& b) {
        return a.rules == b.rules && a.herbrand_base == b.herbrand_base;
    }
    friend bool operator!=(const GroundProgram& a, const GroundProgram& b) {
        return !(a == b);
    }
};

std::string to_string(const Rule& rule);
std::string to_string(const GroundRule& rule);
std::string to_lp_string(const Program& program);
std::string to_lp_string(const GroundProgram& program);

/// Strict total order on ground rules used to canonicalize ground
/// programs.
bool ground_rule_less(const GroundRule& a, const GroundRule& b);

}  // namespace condasp

#endif
