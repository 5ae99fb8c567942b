#include "condasp/rule.hpp"

#include <sstream>

namespace condasp {

namespace {

template <typename AtomT>
void print_atom_list(std::ostringstream& out, const std::vector<AtomT>& atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out << " ; ";
        out << atoms[i].to_string();
    }
}

template <typename AtomT>
void print_body_element(std::ostringstream& out, const BasicBodyElement<AtomT>& e) {
    using Kind = typename BasicBodyElement<AtomT>::Kind;
    switch (e.kind) {
        case Kind::PositiveAtom: out << e.atom.to_string(); break;
        case Kind::NegatedAtom: out << "not " << e.atom.to_string(); break;
        case Kind::Comparison:
            out << e.left.to_string() << (e.op == ComparisonOp::Eq ? " = " : " != ")
                << e.right.to_string();
            break;
        case Kind::CardinalityLower:
            out << e.lower << " { ";
            print_atom_list(out, e.atoms);
            out << " }";
            break;
    }
}

template <typename AtomT>
std::string rule_to_string(const BasicRule<AtomT>& rule) {
    std::ostringstream out;
    if (rule.has_normal_head()) {
        out << rule.normal_head().to_string();
    } else if (rule.has_choice_head()) {
        const auto& choice = rule.choice_head();
        if (choice.lower) out << *choice.lower << ' ';
        out << "{ ";
        print_atom_list(out, choice.atoms);
        out << " }";
        if (choice.upper) out << ' ' << *choice.upper;
    }
    if (!rule.body.empty()) {
        out << (rule.is_constraint() ? ":- " : " :- ");
        for (std::size_t i = 0; i < rule.body.size(); ++i) {
            if (i) out << ", ";
            print_body_element(out, rule.body[i]);
        }
    } else if (rule.is_constraint()) {
        out << ":- ";  // `:- .` — an always-violated constraint
    }
    out << '.';
    return out.str();
}

int cmp_atoms(const Atom& a, const Atom& b) {
    if (atom_less(a, b)) return -1;
    if (atom_less(b, a)) return 1;
    return 0;
}

int cmp_atom_lists(const std::vector<Atom>& a, const std::vector<Atom>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp_atoms(a[i], b[i])) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

int cmp_terms(const Term& a, const Term& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

int cmp_elements(const GroundBodyElement& a, const GroundBodyElement& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    switch (a.kind) {
        case GroundBodyElement::Kind::PositiveAtom:
        case GroundBodyElement::Kind::NegatedAtom: return cmp_atoms(a.atom, b.atom);
        case GroundBodyElement::Kind::Comparison: {
            if (int c = cmp_terms(a.left, b.left)) return c;
            if (a.op != b.op) return a.op == ComparisonOp::Eq ? -1 : 1;
            return cmp_terms(a.right, b.right);
        }
        case GroundBodyElement::Kind::CardinalityLower: {
            if (a.lower != b.lower) return a.lower < b.lower ? -1 : 1;
            return cmp_atom_lists(a.atoms, b.atoms);
        }
    }
    return 0;
}

int head_rank(const GroundRule& r) {
    if (r.is_constraint()) return 0;
    if (r.has_normal_head()) return 1;
    return 2;
}

int cmp_heads(const GroundRule& a, const GroundRule& b) {
    if (head_rank(a) != head_rank(b)) return head_rank(a) < head_rank(b) ? -1 : 1;
    if (a.has_normal_head()) return cmp_atoms(a.normal_head(), b.normal_head());
    if (a.has_choice_head()) {
        const auto& ca = a.choice_head();
        const auto& cb = b.choice_head();
        if (ca.lower != cb.lower) {
            if (!ca.lower) return -1;
            if (!cb.lower) return 1;
            return *ca.lower < *cb.lower ? -1 : 1;
        }
        if (ca.upper != cb.upper) {
            if (!ca.upper) return -1;
            if (!cb.upper) return 1;
            return *ca.upper < *cb.upper ? -1 : 1;
        }
        return cmp_atom_lists(ca.atoms, cb.atoms);
    }
    return 0;
}

}  // namespace

std::string to_string(const Rule& rule) { return rule_to_string(rule); }
std::string to_string(const GroundRule& rule) { return rule_to_string(rule); }

std::string to_lp_string(const Program& program) {
    std::ostringstream out;
    for (const Rule& r : program.rules) out << to_string(r) << '\n';
    return out.str();
}

std::string to_lp_string(const GroundProgram& program) {
    std::ostringstream out;
    for (const GroundRule& r : program.rules) out << to_string(r) << '\n';
    return out.str();
}

bool ground_rule_less(const GroundRule& a, const GroundRule& b) {
    if (int c = cmp_heads(a, b)) return c < 0;
    const std::size_t n = std::min(a.body.size(), b.body.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = cmp_elements(a.body[i], b.body[i])) return c < 0;
    }
    return a.body.size() < b.body.size();
}

}  // namespace condasp
