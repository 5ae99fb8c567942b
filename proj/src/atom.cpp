#include "condasp/atom.hpp"

#include <sstream>

namespace condasp {

bool Atom::is_internal() const {
    const std::string& name = predicate.str();
    return !name.empty() && name[0] == '_';
}

std::string Atom::to_string() const {
    if (args.empty()) return predicate.str();
    std::ostringstream out;
    out << predicate.str() << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out << ',';
        out << args[i].to_string();
    }
    out << ')';
    return out.str();
}

bool atom_less(const Atom& a, const Atom& b) {
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size();
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (a.args[i] != b.args[i]) return a.args[i] < b.args[i];
    }
    return false;
}

bool operator<(const Atom& a, const Atom& b) { return atom_less(a, b); }

bool AtomSchema::is_ground() const {
    for (const Term& t : args)
        if (t.is_variable()) return false;
    return true;
}

Atom AtomSchema::to_atom() const {
    std::vector<Constant> constants;
    constants.reserve(args.size());
    for (const Term& t : args) constants.push_back(t.constant_value());
    return Atom(predicate, std::move(constants));
}

AtomSchema AtomSchema::from_atom(const Atom& atom) {
    std::vector<Term> terms;
    terms.reserve(atom.args.size());
    for (const Constant& c : atom.args) terms.push_back(Term::constant(c));
    return AtomSchema(atom.predicate, std::move(terms));
}

std::string AtomSchema::to_string() const {
    if (args.empty()) return predicate.str();
    std::ostringstream out;
    out << predicate.str() << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out << ',';
        out << args[i].to_string();
    }
    out << ')';
    return out.str();
}

}  // namespace condasp
