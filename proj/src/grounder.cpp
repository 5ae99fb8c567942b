#include "condasp/grounder.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "condasp/error.hpp"

namespace condasp {

namespace {

using Substitution = std::map<Symbol, Constant>;

void collect_constants(const Term& t, std::set<Constant>& out) {
    if (!t.is_variable()) out.insert(t.constant_value());
}

void collect_constants(const AtomSchema& atom, std::set<Constant>& out) {
    for (const Term& t : atom.args) collect_constants(t, out);
}

void collect_variables(const AtomSchema& atom, std::vector<Symbol>& out,
                       std::set<Symbol>& seen) {
    for (const Term& t : atom.args) {
        if (t.is_variable() && seen.insert(t.variable_name()).second) {
            out.push_back(t.variable_name());
        }
    }
}

Constant apply(const Term& t, const Substitution& sub) {
    if (!t.is_variable()) return t.constant_value();
    return sub.at(t.variable_name());
}

Atom apply(const AtomSchema& atom, const Substitution& sub) {
    std::vector<Constant> args;
    args.reserve(atom.args.size());
    for (const Term& t : atom.args) args.push_back(apply(t, sub));
    return Atom(atom.predicate, std::move(args));
}

/// Instantiates one rule under one substitution. Comparisons are evaluated
/// and dropped; returns nothing when one is false.
std::optional<GroundRule> instantiate(const Rule& rule, const Substitution& sub) {
    GroundRule ground;
    ground.span = rule.span;
    if (rule.has_normal_head()) {
        ground.head = apply(rule.normal_head(), sub);
    } else if (rule.has_choice_head()) {
        GroundChoiceHead choice;
        choice.lower = rule.choice_head().lower;
        choice.upper = rule.choice_head().upper;
        for (const AtomSchema& a : rule.choice_head().atoms)
            choice.atoms.push_back(apply(a, sub));
        ground.head = std::move(choice);
    }
    for (const BodyElement& e : rule.body) {
        switch (e.kind) {
            case BodyElement::Kind::PositiveAtom:
                ground.body.push_back(GroundBodyElement::positive(apply(e.atom, sub)));
                break;
            case BodyElement::Kind::NegatedAtom:
                ground.body.push_back(GroundBodyElement::negated(apply(e.atom, sub)));
                break;
            case BodyElement::Kind::Comparison: {
                const Constant left = apply(e.left, sub);
                const Constant right = apply(e.right, sub);
                const bool holds =
                    e.op == ComparisonOp::Eq ? left == right : left != right;
                if (!holds) return std::nullopt;
                break;
            }
            case BodyElement::Kind::CardinalityLower: {
                std::vector<Atom> atoms;
                atoms.reserve(e.atoms.size());
                for (const AtomSchema& a : e.atoms) atoms.push_back(apply(a, sub));
                ground.body.push_back(
                    GroundBodyElement::cardinality(e.lower, std::move(atoms)));
                break;
            }
        }
    }
    return ground;
}

void canonicalize(GroundProgram& out) {
    std::sort(out.rules.begin(), out.rules.end(), ground_rule_less);
    out.rules.erase(std::unique(out.rules.begin(), out.rules.end()), out.rules.end());
    std::sort(out.herbrand_base.begin(), out.herbrand_base.end(), atom_less);
    out.herbrand_base.erase(std::unique(out.herbrand_base.begin(), out.herbrand_base.end()),
                            out.herbrand_base.end());
}

void add_rule_atoms(const GroundRule& rule, std::vector<Atom>& base) {
    if (rule.has_normal_head()) base.push_back(rule.normal_head());
    if (rule.has_choice_head())
        for (const Atom& a : rule.choice_head().atoms) base.push_back(a);
    for (const GroundBodyElement& e : rule.body) {
        switch (e.kind) {
            case GroundBodyElement::Kind::PositiveAtom:
            case GroundBodyElement::Kind::NegatedAtom: base.push_back(e.atom); break;
            case GroundBodyElement::Kind::CardinalityLower:
                for (const Atom& a : e.atoms) base.push_back(a);
                break;
            case GroundBodyElement::Kind::Comparison: break;  // resolved away
        }
    }
}

}  // namespace

GroundProgram ground_program(const Program& program) {
    // Herbrand universe: every constant written anywhere in the program.
    std::set<Constant> universe_set;
    // Predicates with their arities, for the closure of the Herbrand base.
    std::set<std::pair<Symbol, std::size_t>> predicates;

    auto scan_atom = [&](const AtomSchema& atom) {
        collect_constants(atom, universe_set);
        predicates.emplace(atom.predicate, atom.args.size());
    };
    for (const Rule& rule : program.rules) {
        if (rule.has_normal_head()) scan_atom(rule.normal_head());
        if (rule.has_choice_head())
            for (const AtomSchema& a : rule.choice_head().atoms) scan_atom(a);
        for (const BodyElement& e : rule.body) {
            switch (e.kind) {
                case BodyElement::Kind::PositiveAtom:
                case BodyElement::Kind::NegatedAtom: scan_atom(e.atom); break;
                case BodyElement::Kind::Comparison:
                    collect_constants(e.left, universe_set);
                    collect_constants(e.right, universe_set);
                    break;
                case BodyElement::Kind::CardinalityLower:
                    for (const AtomSchema& a : e.atoms) scan_atom(a);
                    break;
            }
        }
    }
    const std::vector<Constant> universe(universe_set.begin(), universe_set.end());

    GroundProgram out;
    for (const Rule& rule : program.rules) {
        std::vector<Symbol> vars;
        std::set<Symbol> seen;
        auto scan_vars = [&](const AtomSchema& atom) { collect_variables(atom, vars, seen); };
        if (rule.has_normal_head()) scan_vars(rule.normal_head());
        if (rule.has_choice_head())
            for (const AtomSchema& a : rule.choice_head().atoms) scan_vars(a);
        for (const BodyElement& e : rule.body) {
            switch (e.kind) {
                case BodyElement::Kind::PositiveAtom:
                case BodyElement::Kind::NegatedAtom: scan_vars(e.atom); break;
                case BodyElement::Kind::Comparison:
                    if (e.left.is_variable() && seen.insert(e.left.variable_name()).second)
                        vars.push_back(e.left.variable_name());
                    if (e.right.is_variable() && seen.insert(e.right.variable_name()).second)
                        vars.push_back(e.right.variable_name());
                    break;
                case BodyElement::Kind::CardinalityLower:
                    for (const AtomSchema& a : e.atoms) scan_vars(a);
                    break;
            }
        }

        if (vars.empty()) {
            if (auto ground = instantiate(rule, {})) out.rules.push_back(std::move(*ground));
            continue;
        }
        if (universe.empty()) {
            throw Error(ErrorCode::EmptyUniverse,
                        "rule has variables but the program has no constants: " +
                            to_string(rule));
        }
        // Odometer over universe^|vars|.
        std::vector<std::size_t> index(vars.size(), 0);
        while (true) {
            Substitution sub;
            for (std::size_t i = 0; i < vars.size(); ++i) sub.emplace(vars[i], universe[index[i]]);
            if (auto ground = instantiate(rule, sub)) out.rules.push_back(std::move(*ground));
            std::size_t k = 0;
            for (; k < index.size(); ++k) {
                if (++index[k] < universe.size()) break;
                index[k] = 0;
            }
            if (k == index.size()) break;
        }
    }

    for (const GroundRule& rule : out.rules) add_rule_atoms(rule, out.herbrand_base);
    // Close the base over all ground instances of the program's predicates.
    for (const auto& [predicate, arity] : predicates) {
        if (arity == 0) {
            out.herbrand_base.push_back(Atom(predicate));
            continue;
        }
        if (universe.empty()) continue;
        std::vector<std::size_t> index(arity, 0);
        while (true) {
            std::vector<Constant> args;
            args.reserve(arity);
            for (std::size_t i = 0; i < arity; ++i) args.push_back(universe[index[i]]);
            out.herbrand_base.push_back(Atom(predicate, std::move(args)));
            std::size_t k = 0;
            for (; k < index.size(); ++k) {
                if (++index[k] < universe.size()) break;
                index[k] = 0;
            }
            if (k == index.size()) break;
        }
    }

    canonicalize(out);
    return out;
}

GroundProgram simplify(const GroundProgram& ground) {
    // Superset of the derivable atoms: least fixpoint over rule heads,
    // treating negated literals as satisfiable and cardinalities as
    // satisfiable once enough of their atoms are derivable.
    std::set<Atom> derivable;
    auto possibly_fires = [&](const GroundRule& rule) {
        for (const GroundBodyElement& e : rule.body) {
            switch (e.kind) {
                case GroundBodyElement::Kind::PositiveAtom:
                    if (!derivable.count(e.atom)) return false;
                    break;
                case GroundBodyElement::Kind::CardinalityLower: {
                    int hits = 0;
                    for (const Atom& a : e.atoms)
                        if (derivable.count(a)) ++hits;
                    if (hits < e.lower) return false;
                    break;
                }
                case GroundBodyElement::Kind::NegatedAtom:
                case GroundBodyElement::Kind::Comparison: break;
            }
        }
        return true;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const GroundRule& rule : ground.rules) {
            if (rule.is_constraint() || !possibly_fires(rule)) continue;
            if (rule.has_normal_head()) {
                changed |= derivable.insert(rule.normal_head()).second;
            } else {
                for (const Atom& a : rule.choice_head().atoms)
                    changed |= derivable.insert(a).second;
            }
        }
    }

    GroundProgram out;
    for (const GroundRule& rule : ground.rules) {
        if (!possibly_fires(rule)) continue;
        GroundRule kept;
        kept.head = rule.head;
        kept.span = rule.span;
        bool dead = false;
        for (const GroundBodyElement& e : rule.body) {
            switch (e.kind) {
                case GroundBodyElement::Kind::PositiveAtom:
                    kept.body.push_back(e);
                    break;
                case GroundBodyElement::Kind::NegatedAtom:
                    // An underivable atom is false in every answer set, so
                    // its negation holds vacuously.
                    if (derivable.count(e.atom)) kept.body.push_back(e);
                    break;
                case GroundBodyElement::Kind::CardinalityLower: {
                    GroundBodyElement pruned = e;
                    std::erase_if(pruned.atoms,
                                  [&](const Atom& a) { return !derivable.count(a); });
                    if (static_cast<int>(pruned.atoms.size()) < pruned.lower) {
                        dead = true;
                        break;
                    }
                    // A bound of 0 is trivially met.
                    if (pruned.lower > 0) kept.body.push_back(std::move(pruned));
                    break;
                }
                case GroundBodyElement::Kind::Comparison:
                    kept.body.push_back(e);
                    break;
            }
            if (dead) break;
        }
        if (!dead) out.rules.push_back(std::move(kept));
    }

    out.herbrand_base.assign(derivable.begin(), derivable.end());
    canonicalize(out);
    return out;
}

}  // namespace condasp
