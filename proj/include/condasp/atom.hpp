#ifndef CONDASP_ATOM_HPP
#define CONDASP_ATOM_HPP

#include <string>
#include <vector>

#include "condasp/symbol.hpp"

namespace condasp {

/// A ground atom: a predicate applied to constants, e.g. married(bob, mary).
/// Atoms double as propositional variables once a program is ground.
struct Atom {
    Symbol predicate;
    std::vector<Constant> args;

    Atom() = default;
    explicit Atom(Symbol pred, std::vector<Constant> a = {})
        : predicate(pred), args(std::move(a)) {}

    static Atom make(std::string_view pred, std::vector<Constant> args = {}) {
        return Atom(Symbol::intern(pred), std::move(args));
    }

    /// Solver-generated atoms use a leading underscore, which the input
    /// grammar forbids for user predicates.
    bool is_internal() const;

    std::string to_string() const;

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.predicate == b.predicate && a.args == b.args;
    }
    friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
    friend bool operator<(const Atom& a, const Atom& b);
};

/// The canonical atom order used everywhere output must be reproducible:
/// predicate spelling first, then argument count, then arguments.
bool atom_less(const Atom& a, const Atom& b);

/// An atom as written in a rule, before grounding: arguments may be
/// variables. A ground instance is obtained by applying a substitution.
struct AtomSchema {
    Symbol predicate;
    std::vector<Term> args;

    AtomSchema() = default;
    explicit AtomSchema(Symbol pred, std::vector<Term> a = {})
        : predicate(pred), args(std::move(a)) {}

    bool is_ground() const;
    /// Precondition: is_ground().
    Atom to_atom() const;
    static AtomSchema from_atom(const Atom& atom);

    std::string to_string() const;

    friend bool operator==(const AtomSchema& a, const AtomSchema& b) {
        return a.predicate == b.predicate && a.args == b.args;
    }
    friend bool operator!=(const AtomSchema& a, const AtomSchema& b) { return !(a == b); }
};

}  // namespace condasp

#endif
